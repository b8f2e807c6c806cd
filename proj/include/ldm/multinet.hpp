#pragma once

// Labeled light dual multinets: verification, belonging lines and their
// lengths, relabeling by principal loop isotopes, coset sub-multinets, the
// partial latin square forced by length-1 lines, the Lagrange obstruction to
// group labels, and classification by covering curves.

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldm/geometry.hpp"
#include "ldm/loops.hpp"

namespace ldm {

using Component = std::vector<ProjectivePoint>;

class LabeledMultinet {
 public:
  /// Checks structure only (three components of equal size, points of PG(2)
  /// over `field`, label order matching); the multinet axioms are verify()'s job.
  LabeledMultinet(FieldPtr field, std::optional<MultTable> labels,
                  std::array<Component, 3> components,
                  nlohmann::ordered_json provenance = nlohmann::ordered_json::object());

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t order() const noexcept { return components_[0].size(); }
  const std::optional<MultTable>& labels() const noexcept { return labels_; }
  const std::array<Component, 3>& components() const noexcept { return components_; }
  const Component& component(std::size_t i) const { return components_[i]; }
  /// alpha_{i+1}(x) for component i in 0..2.
  const ProjectivePoint& point(std::size_t i, Index x) const { return components_[i][x]; }
  const nlohmann::ordered_json& provenance() const noexcept { return provenance_; }

  /// All 3n points, component by component.
  std::vector<ProjectivePoint> all_points() const;

 private:
  FieldPtr field_;
  std::optional<MultTable> labels_;
  std::array<Component, 3> components_;
  nlohmann::ordered_json provenance_;
};

struct VerifyReport {
  bool injective = true;
  bool disjoint = true;
  bool multinet_law = true;
  bool labeled = true;
  /// Component and the two positions holding the same point.
  std::optional<std::array<std::size_t, 3>> injective_witness;
  /// (component a, position, component b, position) of a shared point.
  std::optional<std::array<std::size_t, 4>> disjoint_witness;
  /// (x, y) whose three points fail the law.
  std::optional<std::array<Index, 2>> law_witness;

  bool ok() const noexcept { return injective && disjoint && multinet_law; }
};

/// With labels: alpha1(x), alpha2(y), alpha3(xy) collinear for all x, y.
/// Without labels: the line alpha1(x) alpha2(y) meets the third component.
VerifyReport verify(const LabeledMultinet& m);

struct LineRecord {
  ProjectiveLine line;
  /// Label indices whose image in component i lies on the line.
  std::array<std::vector<Index>, 3> members;
  std::size_t length() const noexcept { return members[0].size(); }
};

/// Every line meeting all three components, sorted by canonical line order.
std::vector<LineRecord> belonging_lines(const LabeledMultinet& m);

using LengthSpectrum = std::map<std::size_t, std::size_t, std::greater<>>;

/// length -> number of lines; throws Errc::InvariantViolation if some line
/// meets the components in different numbers of points.
LengthSpectrum length_spectrum(const std::vector<LineRecord>& lines);
LengthSpectrum length_spectrum(const LabeledMultinet& m);

bool is_dual_3net(const LabeledMultinet& m);

/// Relabel by x o y = (x/v)(u\y): beta1(x) = alpha1(x/v), beta2(y) = alpha2(u\y),
/// beta3 = alpha3. Throws Errc::LabelNotOnLine unless u in S1, v in S2.
LabeledMultinet relabel_through_line(const LabeledMultinet& m, const LineRecord& line, Index u,
                                     Index v);

/// Sub-multinet labeled by the subgroup h:
/// beta1(x) = alpha1(x g1), beta2(y) = alpha2(g1^-1 y g1 g2), beta3(z) = alpha3(z g1 g2).
/// When g1 normalizes h the components are alpha1(h g1), alpha2(h g2), alpha3(h g1 g2).
LabeledMultinet coset_submultinet(const LabeledMultinet& m, const std::vector<Index>& subgroup,
                                  Index g1, Index g2);

/// Entry (i, j) is the unique k with alpha1(i), alpha2(j), alpha3(k)
/// collinear, undetermined otherwise.
PartialSquare partial_latin_square(const LabeledMultinet& m);

struct ObstructionVerdict {
  bool obstructed = false;
  /// Order of the row quotient group when it could be computed.
  std::optional<std::size_t> quotient_order;
  std::vector<Index> rows_used;
};

ObstructionVerdict group_labeling_obstruction(const LabeledMultinet& m,
                                              std::size_t cap = kDefaultClosureCap);
ObstructionVerdict group_labeling_obstruction(const PartialSquare& s,
                                              std::size_t cap = kDefaultClosureCap);

enum class Verdict {
  ContainedInLine,
  Triangle,
  Pencil,
  ConicLine,
  Tetrahedron,
  AlgebraicOther,
  Unclassified,
};

std::string_view to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Unclassified;
  std::vector<ProjectiveLine> lines;
  std::optional<CurveCoefficients> conic;
  std::optional<CurveCoefficients> cubic;
};

Classification classify(const LabeledMultinet& m);

/// True iff every point of m lies on the witness cover.
bool witness_covers(const LabeledMultinet& m, const Classification& c);

/// A cubic through all 3n points, if any.
std::optional<CurveCoefficients> is_algebraic(const LabeledMultinet& m);

/// Same multinet with every point moved by the invertible matrix a.
LabeledMultinet transform(const LabeledMultinet& m, const Matrix& a);

}  // namespace ldm
