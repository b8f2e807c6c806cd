#include "ldm/multinet.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <span>

#include "ldm/error.hpp"

namespace ldm {

LabeledMultinet::LabeledMultinet(FieldPtr field, std::optional<MultTable> labels,
                                 std::array<Component, 3> components,
                                 nlohmann::ordered_json provenance)
    : field_(std::move(field)),
      labels_(std::move(labels)),
      components_(std::move(components)),
      provenance_(std::move(provenance)) {
  const std::size_t n = components_[0].size();
  if (n == 0) throw Error(Errc::BadParameters, "empty components");
  for (const auto& c : components_) {
    if (c.size() != n) throw Error(Errc::BadParameters, "components differ in size");
    for (const auto& p : c) {
      if (p.size() != 3) throw Error(Errc::BadParameters, "components must lie in PG(2)");
      if (!same_field(p.field(), field_)) throw Error(Errc::MixedFields, "point over another field");
    }
  }
  if (labels_ && labels_->order() != n)
    throw Error(Errc::BadParameters, "label order differs from component size");
}

std::vector<ProjectivePoint> LabeledMultinet::all_points() const {
  std::vector<ProjectivePoint> out;
  out.reserve(3 * order());
  for (const auto& c : components_) out.insert(out.end(), c.begin(), c.end());
  return out;
}

VerifyReport verify(const LabeledMultinet& m) {
  VerifyReport r;
  r.labeled = m.labels().has_value();
  const std::size_t n = m.order();

  // Injectivity and disjointness via one sorted pass over all 3n points.
  std::vector<std::pair<std::size_t, Index>> order;
  for (std::size_t c = 0; c < 3; ++c)
    for (Index x = 0; x < n; ++x) order.emplace_back(c, x);
  std::stable_sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    return canonical_less(m.point(a.first, a.second), m.point(b.first, b.second));
  });
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto [ca, xa] = order[i];
    const auto [cb, xb] = order[i + 1];
    if (!(m.point(ca, xa) == m.point(cb, xb))) continue;
    if (ca == cb) {
      if (r.injective) r.injective_witness = {{ca, std::min(xa, xb), std::max(xa, xb)}};
      r.injective = false;
    } else {
      if (r.disjoint) r.disjoint_witness = {{ca, xa, cb, xb}};
      r.disjoint = false;
    }
  }

  for (Index x = 0; x < n && r.multinet_law; ++x)
    for (Index y = 0; y < n && r.multinet_law; ++y) {
      bool ok;
      if (m.labels()) {
        ok = collinear(m.point(0, x), m.point(1, y), m.point(2, (*m.labels())(x, y)));
      } else {
        ok = false;
        for (Index z = 0; z < n && !ok; ++z) ok = collinear(m.point(0, x), m.point(1, y), m.point(2, z));
      }
      if (!ok) {
        r.multinet_law = false;
        r.law_witness = {{x, y}};
      }
    }
  return r;
}

std::vector<LineRecord> belonging_lines(const LabeledMultinet& m) {
  // Components are disjoint, so each belonging line contains a point of the
  // first component and a point of the second: spanning those pairs finds all.
  std::map<ProjectiveLine, bool, CanonicalOrder> spanned;
  for (const auto& p : m.component(0))
    for (const auto& q : m.component(1))
      if (!(p == q)) spanned.emplace(join(p, q), true);

  std::vector<LineRecord> out;
  for (const auto& [line, unused] : spanned) {
    LineRecord rec{line, {}};
    for (std::size_t c = 0; c < 3; ++c)
      for (Index x = 0; x < m.order(); ++x)
        if (incident(line, m.point(c, x))) rec.members[c].push_back(x);
    if (!rec.members[2].empty()) out.push_back(std::move(rec));
  }
  return out;
}

LengthSpectrum length_spectrum(const std::vector<LineRecord>& lines) {
  LengthSpectrum spectrum;
  for (const auto& l : lines) {
    if (l.members[0].size() != l.members[1].size() || l.members[1].size() != l.members[2].size())
      throw Error(Errc::InvariantViolation, "line meets the components unequally");
    ++spectrum[l.length()];
  }
  return spectrum;
}

LengthSpectrum length_spectrum(const LabeledMultinet& m) {
  return length_spectrum(belonging_lines(m));
}

bool is_dual_3net(const LabeledMultinet& m) {
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      for (const auto& p : m.component(a))
        for (const auto& q : m.component(b)) {
          if (p == q) return false;
          const ProjectiveLine l = join(p, q);
          for (const auto& comp : m.components()) {
            const auto hits = std::count_if(comp.begin(), comp.end(),
                                            [&](const ProjectivePoint& r) { return incident(l, r); });
            if (hits != 1) return false;
          }
        }
  return true;
}

LabeledMultinet relabel_through_line(const LabeledMultinet& m, const LineRecord& line, Index u,
                                     Index v) {
  if (!m.labels()) throw Error(Errc::BadParameters, "relabeling needs a label table");
  const auto& s1 = line.members[0];
  const auto& s2 = line.members[1];
  if (std::find(s1.begin(), s1.end(), u) == s1.end())
    throw Error(Errc::LabelNotOnLine, "alpha1(u) is not on the line");
  if (std::find(s2.begin(), s2.end(), v) == s2.end())
    throw Error(Errc::LabelNotOnLine, "alpha2(v) is not on the line");

  const MultTable& t = *m.labels();
  const std::size_t n = m.order();
  std::array<Component, 3> comps;
  for (Index x = 0; x < n; ++x) {
    comps[0].push_back(m.point(0, t.right_divide(x, v)));
    comps[1].push_back(m.point(1, t.left_divide(u, x)));
  }
  comps[2] = m.component(2);

  auto provenance = m.provenance();
  provenance["relabel"] = {{"u", t.names()[u]}, {"v", t.names()[v]}};
  LabeledMultinet out(m.field(), principal_isotope(t, u, v), std::move(comps), std::move(provenance));

  const Index e = t(u, v);
  if (unit(*out.labels()) != e)
    throw Error(Errc::InvariantViolation, "isotope unit differs from uv");
  for (std::size_t c = 0; c < 3; ++c)
    if (!incident(line.line, out.point(c, e)))
      throw Error(Errc::InvariantViolation, "unit image off the chosen line");
  return out;
}

LabeledMultinet coset_submultinet(const LabeledMultinet& m, const std::vector<Index>& subgroup,
                                  Index g1, Index g2) {
  if (!m.labels() || !is_group(*m.labels()))
    throw Error(Errc::NotAGroupLabel, "coset sub-multinets need a group label");
  const MultTable& t = *m.labels();
  if (g1 >= t.order() || g2 >= t.order()) throw Error(Errc::BadParameters, "unknown coset element");
  if (subgroup.empty()) throw Error(Errc::NotASubgroup, "empty subset");
  MultTable sub = restrict_table(t, subgroup);

  const Index e = *unit(t);
  const Index g1_inv = t.left_divide(g1, e);
  const Index g12 = t(g1, g2);
  std::array<Component, 3> comps;
  for (Index h : subgroup) {
    comps[0].push_back(m.point(0, t(h, g1)));
    comps[1].push_back(m.point(1, t(t(g1_inv, h), g12)));
    comps[2].push_back(m.point(2, t(h, g12)));
  }
  auto provenance = m.provenance();
  provenance["coset"] = {{"g1", t.names()[g1]}, {"g2", t.names()[g2]}, {"order", subgroup.size()}};
  return LabeledMultinet(m.field(), std::move(sub), std::move(comps), std::move(provenance));
}

PartialSquare partial_latin_square(const LabeledMultinet& m) {
  const std::size_t n = m.order();
  PartialSquare s(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto& p = m.point(0, i);
      const auto& q = m.point(1, j);
      if (p == q) continue;  // every k qualifies
      const ProjectiveLine l = join(p, q);
      std::optional<Index> found;
      bool unique = true;
      for (Index k = 0; k < n && unique; ++k) {
        if (!incident(l, m.point(2, k))) continue;
        if (found) unique = false;
        else found = k;
      }
      if (found && unique) s.set(i, j, found);
    }
  return s;
}

ObstructionVerdict group_labeling_obstruction(const PartialSquare& s, std::size_t cap) {
  ObstructionVerdict v;
  v.rows_used = s.complete_rows();
  if (v.rows_used.size() < 2) return v;
  const PermGroup g = row_quotient_group(s, {v.rows_used.begin(), v.rows_used.end()}, cap);
  v.quotient_order = g.order();
  v.obstructed = s.order() % *v.quotient_order != 0;
  return v;
}

ObstructionVerdict group_labeling_obstruction(const LabeledMultinet& m, std::size_t cap) {
  return group_labeling_obstruction(partial_latin_square(m), cap);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ContainedInLine: return "CONTAINED_IN_LINE";
    case Verdict::Triangle: return "TRIANGLE";
    case Verdict::Pencil: return "PENCIL";
    case Verdict::ConicLine: return "CONIC_LINE";
    case Verdict::Tetrahedron: return "TETRAHEDRON";
    case Verdict::AlgebraicOther: return "ALGEBRAIC_OTHER";
    case Verdict::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

namespace {

struct Candidate {
  ProjectiveLine line;
  std::vector<std::size_t> points;
};

// Lines through at least three of the points, in canonical line order.
std::vector<Candidate> rich_lines(const std::vector<ProjectivePoint>& pts) {
  std::map<ProjectiveLine, std::set<std::size_t>, CanonicalOrder> lines;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) continue;
      auto& on = lines[join(pts[i], pts[j])];
      on.insert(i);
      on.insert(j);
    }
  std::vector<Candidate> out;
  for (auto& [line, on] : lines)
    if (on.size() >= 3) out.push_back({line, {on.begin(), on.end()}});
  return out;
}

// Lexicographically first set of `size` candidate lines covering every point
// and accepted by `accept`.
class CoverSearch {
 public:
  CoverSearch(const std::vector<Candidate>& lines, std::size_t npoints, std::size_t size,
              std::function<bool(const std::vector<std::size_t>&)> accept)
      : lines_(lines), size_(size), accept_(std::move(accept)), cover_count_(npoints, 0) {
    // top_[i] = largest `size` line sizes among lines[i..], descending.
    top_.assign(lines.size() + 1, {});
    for (std::size_t i = lines.size(); i-- > 0;) {
      auto t = top_[i + 1];
      t.push_back(lines[i].points.size());
      std::sort(t.rbegin(), t.rend());
      if (t.size() > size_) t.resize(size_);
      top_[i] = std::move(t);
    }
    uncovered_ = npoints;
  }

  std::optional<std::vector<std::size_t>> run() {
    if (recurse(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool recurse(std::size_t start) {
    const std::size_t left = size_ - chosen_.size();
    if (left == 0) return uncovered_ == 0 && accept_(chosen_);
    for (std::size_t i = start; i < lines_.size(); ++i) {
      const auto& t = top_[i];
      const std::size_t reach =
          std::accumulate(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(std::min(left, t.size())),
                          std::size_t{0});
      if (reach < uncovered_) return false;  // later starts only shrink the bound
      add(i, +1);
      chosen_.push_back(i);
      if (recurse(i + 1)) return true;
      chosen_.pop_back();
      add(i, -1);
    }
    return false;
  }

  void add(std::size_t line, int delta) {
    for (auto p : lines_[line].points) {
      if (delta > 0 && cover_count_[p]++ == 0) --uncovered_;
      if (delta < 0 && --cover_count_[p] == 0) ++uncovered_;
    }
  }

  const std::vector<Candidate>& lines_;
  std::size_t size_;
  std::function<bool(const std::vector<std::size_t>&)> accept_;
  std::vector<std::size_t> cover_count_;
  std::vector<std::vector<std::size_t>> top_;
  std::vector<std::size_t> chosen_;
  std::size_t uncovered_ = 0;
};

bool three_concurrent(const ProjectiveLine& a, const ProjectiveLine& b, const ProjectiveLine& c) {
  const std::array<ProjectiveLine, 3> l{a, b, c};
  return are_concurrent(l);
}

// Exactly one concurrent triple, meeting at a point off the remaining line.
bool tetrahedral(const std::array<ProjectiveLine, 4>& l) {
  int concurrent_triples = 0;
  bool off_fourth = false;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<ProjectiveLine> t;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) t.push_back(l[i]);
    if (!three_concurrent(t[0], t[1], t[2])) continue;
    ++concurrent_triples;
    off_fourth = !incident(l[skip], meet(t[0], t[1]));
  }
  return concurrent_triples == 1 && off_fourth;
}

std::optional<CurveCoefficients> irreducible_conic_through(const std::vector<ProjectivePoint>& pts) {
  if (pts.empty()) return std::nullopt;
  // Five points usually pin the conic down; confirm on the rest by evaluation.
  if (pts.size() > 5) {
    const auto head = fit_curve(std::span(pts.data(), 5), 2);
    if (head.empty()) return std::nullopt;
    if (head.size() == 1) {
      const auto& c = head.front();
      for (const auto& p : pts)
        if (!evaluate_curve(c, p).is_zero()) return std::nullopt;
      if (conic_is_irreducible(c)) return c;
      return std::nullopt;
    }
  }
  for (const auto& c : fit_curve(pts, 2))
    if (conic_is_irreducible(c)) return c;
  return std::nullopt;
}

}  // namespace

Classification classify(const LabeledMultinet& m) {
  Classification out;
  const auto pts = m.all_points();

  const auto other = std::find_if(pts.begin(), pts.end(), [&](const auto& p) { return !(p == pts[0]); });
  if (other == pts.end()) return out;
  const ProjectiveLine first = join(pts[0], *other);
  if (std::all_of(pts.begin(), pts.end(), [&](const auto& p) { return incident(first, p); })) {
    out.verdict = Verdict::ContainedInLine;
    out.lines = {first};
    return out;
  }
  if (m.order() <= 2) return out;

  const auto candidates = rich_lines(pts);
  auto lines_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<ProjectiveLine> ls;
    for (auto i : idx) ls.push_back(candidates[i].line);
    return ls;
  };

  if (auto cover = CoverSearch(candidates, pts.size(), 3, [](const auto&) { return true; }).run()) {
    out.lines = lines_of(*cover);
    out.verdict = three_concurrent(out.lines[0], out.lines[1], out.lines[2]) ? Verdict::Pencil
                                                                              : Verdict::Triangle;
    return out;
  }

  for (const auto& cand : candidates) {
    std::vector<ProjectivePoint> rest;
    for (std::size_t i = 0, k = 0; i < pts.size(); ++i) {
      if (k < cand.points.size() && cand.points[k] == i) {
        ++k;
        continue;
      }
      rest.push_back(pts[i]);
    }
    if (auto conic = irreducible_conic_through(rest)) {
      out.verdict = Verdict::ConicLine;
      out.lines = {cand.line};
      out.conic = std::move(conic);
      return out;
    }
  }

  auto accept_tetra = [&](const std::vector<std::size_t>& idx) {
    return tetrahedral({candidates[idx[0]].line, candidates[idx[1]].line, candidates[idx[2]].line,
                        candidates[idx[3]].line});
  };
  if (auto cover = CoverSearch(candidates, pts.size(), 4, accept_tetra).run()) {
    out.verdict = Verdict::Tetrahedron;
    out.lines = lines_of(*cover);
    return out;
  }

  if (auto cubic = is_algebraic(m)) {
    out.verdict = Verdict::AlgebraicOther;
    out.cubic = std::move(cubic);
  }
  return out;
}

bool witness_covers(const LabeledMultinet& m, const Classification& c) {
  for (const auto& p : m.all_points()) {
    bool on = std::any_of(c.lines.begin(), c.lines.end(), [&](const auto& l) { return incident(l, p); });
    if (!on && c.conic) on = evaluate_curve(*c.conic, p).is_zero();
    if (!on && c.cubic) on = evaluate_curve(*c.cubic, p).is_zero();
    if (!on) return false;
  }
  return c.verdict != Verdict::Unclassified;
}

std::optional<CurveCoefficients> is_algebraic(const LabeledMultinet& m) {
  const auto pts = m.all_points();
  auto basis = fit_curve(pts, 3);
  if (basis.empty()) return std::nullopt;
  return std::move(basis.front());
}

LabeledMultinet transform(const LabeledMultinet& m, const Matrix& a) {
  std::array<Component, 3> comps;
  for (std::size_t c = 0; c < 3; ++c)
    for (const auto& p : m.component(c)) comps[c].push_back(transform(a, p));
  return LabeledMultinet(m.field(), m.labels(), std::move(comps), m.provenance());
}

}  // namespace ldm
