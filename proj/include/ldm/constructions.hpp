#pragma once

// Builders for the explicit multinet families and the reducible polynomial
// triple behind the triangle family.

#include <array>
#include <cstdint>
#include <map>

#include "ldm/multinet.hpp"

namespace ldm {

/// Homogeneous polynomial in X, Y, Z; zero coefficients are never stored.
class TernaryForm {
 public:
  using Exponents = std::array<int, 3>;

  TernaryForm(FieldPtr field, int degree) : field_(std::move(field)), degree_(degree) {}

  static TernaryForm monomial(FieldPtr field, Exponents e, Element c);

  const FieldPtr& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  const std::map<Exponents, Element>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponents e, const Element& c);
  Element evaluate(const Vector& point) const;

  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator-(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);

 private:
  FieldPtr field_;
  int degree_;
  std::map<Exponents, Element> terms_;
};

/// Order 3m, cyclic labels; element i is xi^i for a root xi of order 3m.
/// Components lie on X1 = 0, X2 = 0, X3 = 0 with m points on each per component.
LabeledMultinet build_triangle(int m, const FieldPtr& f);

/// The 3-net x -> (0,1,x), y -> (y,0,1), z -> (z,-1,0) over the cyclic group of
/// m-th roots of unity; element i is eta^i.
LabeledMultinet build_triangle_base(int m, const FieldPtr& f);

struct PencilTriple {
  TernaryForm f1, f2, f3;
};

/// The three completely reducible forms of degree 3m whose sum vanishes.
PencilTriple triangle_pencil_polynomials(int m, const FieldPtr& f);

/// Order 2m, labeled by biextension_table(m, k); the first m elements lie on
/// X3 = 0 and the rest on X1 X2 = X3^2.
LabeledMultinet build_conic_line(int m, int k, const FieldPtr& f);

/// Attempts made by build_tetrahedron before giving up.
inline constexpr int kTetrahedronAttempts = 1000;

/// Point maps of the spatial dual 3-net labeled by dihedral_table(m), for
/// component c in 0..2 and element index x. eta has order m.
ProjectivePoint tetrahedron_lift(std::size_t c, Index x, std::size_t m, const Element& eta);

/// Order 2m projection of the spatial 3-net from a seeded center on the face
/// X_face = 0. Samples centers until the projection verifies with exactly one
/// long line; throws Errc::SamplingExhausted after kTetrahedronAttempts.
LabeledMultinet build_tetrahedron(int m, const FieldPtr& f, int face, std::uint64_t seed);

enum class Order18Labels { FirstFit, None };

/// The sporadic order-18 multinet over any field with a 9th root of unity.
/// FirstFit completes the forced partial square row by row with the smallest
/// symbol that is collinear and keeps the square latin.
LabeledMultinet build_order18(const FieldPtr& f, Order18Labels labels = Order18Labels::FirstFit);

}  // namespace ldm
