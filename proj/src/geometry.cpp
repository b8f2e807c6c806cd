#include "ldm/geometry.hpp"

#include <algorithm>

#include "ldm/error.hpp"

namespace ldm {

namespace {

Vector scaled_to_last_nonzero(Vector v) {
  if (v.empty()) throw Error(Errc::ZeroVector, "empty coordinate list");
  const auto it = std::find_if(v.rbegin(), v.rend(), [](const Element& x) { return !x.is_zero(); });
  if (it == v.rend()) throw Error(Errc::ZeroVector, "all coordinates vanish");
  if (it->is_one()) return v;
  const Element inv = it->inverse();
  for (auto& x : v) x = x * inv;
  return v;
}

}  // namespace

Homogeneous::Homogeneous(Vector coords) : coords_(scaled_to_last_nonzero(std::move(coords))) {}

bool operator==(const Homogeneous& a, const Homogeneous& b) {
  return a.coords_.size() == b.coords_.size() && a.coords_ == b.coords_;
}

bool canonical_less(const Homogeneous& a, const Homogeneous& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (canonical_less(a[i], b[i])) return true;
    if (canonical_less(b[i], a[i])) return false;
  }
  return false;
}

ProjectivePoint normalize(Vector coords) { return ProjectivePoint(std::move(coords)); }

bool collinear(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
  if (p.size() != 3 || q.size() != 3 || r.size() != 3)
    throw Error(Errc::BadParameters, "collinear expects points of PG(2)");
  return det3(p.coords(), q.coords(), r.coords()).is_zero();
}

bool collinear_pg3(const ProjectivePoint& p, const ProjectivePoint& q, const ProjectivePoint& r) {
  if (p.size() != 4 || q.size() != 4 || r.size() != 4)
    throw Error(Errc::BadParameters, "collinear_pg3 expects points of PG(3)");
  // Rank <= 2 iff every 3x3 minor (drop one column) vanishes.
  for (std::size_t drop = 0; drop < 4; ++drop) {
    Vector a, b, c;
    for (std::size_t i = 0; i < 4; ++i) {
      if (i == drop) continue;
      a.push_back(p[i]);
      b.push_back(q[i]);
      c.push_back(r[i]);
    }
    if (!det3(a, b, c).is_zero()) return false;
  }
  return true;
}

bool incident(const ProjectiveLine& l, const ProjectivePoint& p) {
  return dot(l.coords(), p.coords()).is_zero();
}

ProjectiveLine join(const ProjectivePoint& p, const ProjectivePoint& q) {
  if (p == q) throw Error(Errc::CoincidentArguments, "join of a point with itself");
  return ProjectiveLine(cross(p.coords(), q.coords()));
}

ProjectivePoint meet(const ProjectiveLine& l, const ProjectiveLine& m) {
  if (l == m) throw Error(Errc::CoincidentArguments, "meet of a line with itself");
  return ProjectivePoint(cross(l.coords(), m.coords()));
}

bool are_concurrent(std::span<const ProjectiveLine> lines) {
  if (lines.empty()) throw Error(Errc::FewerThanTwoDistinct, "no lines");
  const auto second = std::find_if(lines.begin() + 1, lines.end(),
                                   [&](const ProjectiveLine& l) { return !(l == lines.front()); });
  if (second == lines.end()) throw Error(Errc::FewerThanTwoDistinct, "all lines coincide");
  const ProjectivePoint common = meet(lines.front(), *second);
  return std::all_of(lines.begin(), lines.end(),
                     [&](const ProjectiveLine& l) { return incident(l, common); });
}

Plane make_plane(Vector covector) {
  const FieldPtr field = covector.front().field();
  const ProjectiveLine normalized(covector);  // rejects the zero covector
  Plane plane;
  plane.covector = normalized.coords();
  plane.basis = null_space(Matrix::from_rows(field, {plane.covector}));
  return plane;
}

ProjectivePoint project_to_plane(const ProjectivePoint& center, const Plane& target,
                                 const ProjectivePoint& q) {
  if (center.size() != 4 || q.size() != 4 || target.covector.size() != 4 ||
      target.basis.size() != 3)
    throw Error(Errc::BadParameters, "projection works in PG(3) onto a plane");
  const Element at_center = dot(target.covector, center.coords());
  if (at_center.is_zero()) throw Error(Errc::CenterOnPlane, "projection center lies on the target");
  if (q == center) throw Error(Errc::ProjectingCenter, "cannot project the center itself");
  // The point pi(q) P - pi(P) q lies on the line Pq and on the plane pi.
  const Element at_q = dot(target.covector, q.coords());
  Vector image(4, Element::zero(center.field()));
  for (std::size_t i = 0; i < 4; ++i) image[i] = at_q * center[i] - at_center * q[i];
  Matrix basis(center.field(), 4, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t i = 0; i < 4; ++i) basis(i, j) = target.basis[j][i];
  const auto coords = solve(basis, image);
  if (!coords) throw Error(Errc::BadParameters, "basis does not span the target plane");
  return ProjectivePoint(*coords);
}

ProjectivePoint transform(const Matrix& a, const ProjectivePoint& p) {
  return ProjectivePoint(a * p.coords());
}

std::vector<Monomial> monomials(int degree) {
  std::vector<Monomial> out;
  for (int a = degree; a >= 0; --a)
    for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
  return out;
}

CurveCoefficients make_curve(int degree, Vector coefficients) {
  if (coefficients.size() != monomials(degree).size())
    throw Error(Errc::BadParameters, "wrong number of curve coefficients");
  const auto first = std::find_if(coefficients.begin(), coefficients.end(),
                                  [](const Element& x) { return !x.is_zero(); });
  if (first == coefficients.end()) throw Error(Errc::ZeroVector, "zero curve");
  const Element inv = first->inverse();
  for (auto& x : coefficients) x = x * inv;
  return {degree, std::move(coefficients)};
}

namespace {

Vector monomial_values(const ProjectivePoint& p, const std::vector<Monomial>& mons) {
  Vector row;
  row.reserve(mons.size());
  for (const auto& m : mons) row.push_back(p[0].pow(m.a) * p[1].pow(m.b) * p[2].pow(m.c));
  return row;
}

}  // namespace

std::vector<CurveCoefficients> fit_curve(std::span<const ProjectivePoint> points, int degree) {
  if (points.empty()) throw Error(Errc::BadParameters, "fit_curve needs at least one point");
  if (degree != 2 && degree != 3) throw Error(Errc::BadParameters, "degree must be 2 or 3");
  const auto mons = monomials(degree);
  std::vector<Vector> rows;
  rows.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != 3) throw Error(Errc::BadParameters, "fit_curve expects points of PG(2)");
    rows.push_back(monomial_values(p, mons));
  }
  std::vector<CurveCoefficients> out;
  for (auto& v : null_space(Matrix::from_rows(points.front().field(), rows)))
    out.push_back(make_curve(degree, std::move(v)));
  return out;
}

Element evaluate_curve(const CurveCoefficients& c, const ProjectivePoint& p) {
  const auto mons = monomials(c.degree);
  const Vector values = monomial_values(p, mons);
  Element sum = Element::zero(p.field());
  for (std::size_t i = 0; i < mons.size(); ++i) sum += c.coefficients[i] * values[i];
  return sum;
}

bool conic_is_irreducible(const CurveCoefficients& c) {
  if (c.degree != 2) throw Error(Errc::BadParameters, "not a conic");
  const FieldPtr& f = c.coefficients.front().field();
  if (f->characteristic() == 2) throw Error(Errc::CharTwoUnsupported, "characteristic 2");
  // Order: X1^2, X1X2, X1X3, X2^2, X2X3, X3^2.
  const auto& k = c.coefficients;
  const Element half = Element::from_int(f, 2).inverse();
  const Vector r1{k[0], k[1] * half, k[2] * half};
  const Vector r2{k[1] * half, k[3], k[4] * half};
  const Vector r3{k[2] * half, k[4] * half, k[5]};
  return !det3(r1, r2, r3).is_zero();
}

}  // namespace ldm
