#pragma once

// Exact projective geometry in PG(2) and PG(3).

#include <span>
#include <vector>

#include "ldm/linalg.hpp"

namespace ldm {

/// Homogeneous coordinates normalized so the last nonzero coordinate is 1.
/// Used for points of PG(2), PG(3) and for lines of PG(2) (as covectors).
class Homogeneous {
 public:
  /// Throws Errc::ZeroVector when every coordinate vanishes.
  explicit Homogeneous(Vector coords);

  std::size_t size() const noexcept { return coords_.size(); }
  /// Projective dimension: 2 for PG(2), 3 for PG(3).
  int dimension() const noexcept { return static_cast<int>(coords_.size()) - 1; }
  const Vector& coords() const noexcept { return coords_; }
  const Element& operator[](std::size_t i) const { return coords_[i]; }
  const FieldPtr& field() const { return coords_.front().field(); }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b);

 private:
  Vector coords_;
};

bool canonical_less(const Homogeneous& a, const Homogeneous& b);

struct CanonicalOrder {
  bool operator()(const Homogeneous& a, const Homogeneous& b) const { return canonical_less(a, b); }
};

class ProjectivePoint : public Homogeneous {
 public:
  using Homogeneous::Homogeneous;
};

class ProjectiveLine : public Homogeneous {
 public:
  using Homogeneous::Homogeneous;
};

ProjectivePoint normalize(Vector coords);

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);
bool collinear_pg3(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r);

bool incident(const ProjectiveLine& l, const ProjectivePoint& p);
/// Throws Errc::CoincidentArguments for p == q.
ProjectiveLine join(const ProjectivePoint& p, const ProjectivePoint& q);
ProjectivePoint meet(const ProjectiveLine& l, const ProjectiveLine& m);

/// True iff every line passes through the meet of the first two distinct ones.
bool are_concurrent(std::span<const ProjectiveLine> lines);

/// A plane of PG(3) with an ordered basis of three points spanning it.
struct Plane {
  Vector covector;
  std::vector<Vector> basis;
};

/// The plane `covector . x = 0` with the reduced null-space basis
/// (free columns in increasing order).
Plane make_plane(Vector covector);

/// (center q) meet target, written in the target's basis.
ProjectivePoint project_to_plane(const ProjectivePoint& center, const Plane& target,
                                 const ProjectivePoint& q);

/// Apply an invertible 3x3 matrix to a point of PG(2) (column-vector convention).
ProjectivePoint transform(const Matrix& a, const ProjectivePoint& p);

// ---- plane curves of degree 2 and 3 -------------------------------------

/// Exponent triple of X1^a X2^b X3^c.
struct Monomial {
  int a, b, c;
};

/// Graded-lexicographic monomials of the given degree; for degree 3:
/// X1^3, X1^2X2, X1^2X3, X1X2^2, X1X2X3, X1X3^2, X2^3, X2^2X3, X2X3^2, X3^3.
std::vector<Monomial> monomials(int degree);

/// Coefficients indexed by monomials(degree), first nonzero entry equal to 1.
struct CurveCoefficients {
  int degree = 0;
  Vector coefficients;
};

CurveCoefficients make_curve(int degree, Vector coefficients);

std::vector<CurveCoefficients> fit_curve(std::span<const ProjectivePoint> points, int degree);
Element evaluate_curve(const CurveCoefficients& c, const ProjectivePoint& p);
bool conic_is_irreducible(const CurveCoefficients& c);

}  // namespace ldm
