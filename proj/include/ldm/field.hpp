#pragma once

// Exact scalars over a prime field F_p or a cyclotomic field Q(zeta_N).
//
// Both backends sit behind one value type, `Element`, which carries a shared
// pointer to its `Field`. Elements are immutable and always canonical:
// residues live in [0, p), cyclotomic elements are coefficient vectors of
// length phi(N) over reduced rationals. Equality of canonical forms is field
// equality.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ldm {

enum class FieldKind { Prime, Cyclotomic };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  FieldKind kind() const noexcept { return kind_; }
  std::int64_t modulus() const noexcept { return modulus_; }
  int conductor() const noexcept { return conductor_; }
  /// Dimension over the prime field: 1 for F_p, phi(N) for Q(zeta_N).
  int degree() const noexcept { return degree_; }
  /// p for F_p, 0 for Q(zeta_N).
  std::int64_t characteristic() const noexcept {
    return kind_ == FieldKind::Prime ? modulus_ : 0;
  }
  /// Phi_N with constant coefficient first (monic, length phi(N) + 1).
  const std::vector<mpz_class>& cyclotomic_polynomial() const noexcept { return phi_; }

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_ && a.conductor_ == b.conductor_;
  }

 private:
  friend FieldPtr make_prime_field(std::int64_t p);
  friend FieldPtr make_cyclotomic_field(int n);
  Field() = default;

  FieldKind kind_ = FieldKind::Prime;
  std::int64_t modulus_ = 0;
  int conductor_ = 0;
  int degree_ = 1;
  std::vector<mpz_class> phi_;
};

/// Throws Errc::NotPrime for composite p, Errc::BadParameters for p < 2.
FieldPtr make_prime_field(std::int64_t p);
FieldPtr make_cyclotomic_field(int n);

/// Integer polynomial Phi_n, constant coefficient first.
std::vector<mpz_class> cyclotomic_polynomial(int n);
int euler_phi(int n);
bool is_prime(std::int64_t n);

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

class Element {
 public:
  /// A detached element with no field; only useful as a placeholder.
  Element() = default;

  static Element zero(const FieldPtr& f);
  static Element one(const FieldPtr& f);
  static Element from_int(const FieldPtr& f, std::int64_t v);
  /// Rational number in either backend (denominator must be invertible).
  static Element from_rational(const FieldPtr& f, const mpq_class& q);
  /// zeta for Q(zeta_N); throws Errc::BadParameters on prime fields.
  static Element zeta(const FieldPtr& f);
  static Element from_coefficients(const FieldPtr& f, std::vector<mpq_class> coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); prime kind only.
  std::uint64_t residue() const noexcept { return residue_; }
  /// Coefficients of 1, zeta, ..., zeta^(phi-1); cyclotomic kind only.
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  Element operator-() const;
  Element inverse() const;
  Element pow(std::int64_t e) const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b);

  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::uint64_t residue_ = 0;
  std::vector<mpq_class> coeffs_;
};

/// Total order on canonical forms (residue, or lexicographic coefficients).
bool canonical_less(const Element& a, const Element& b);

/// Smallest multiplicative order d with x^d = 1; 0 if no such d <= limit.
std::int64_t multiplicative_order(const Element& x, std::int64_t limit);

/// An element of exact multiplicative order n.
///
/// Prime fields return the smallest qualifying residue; Q(zeta_N) returns
/// zeta^(N/n). Throws Errc::NoSuchRoot when n does not divide p - 1 (resp. N).
Element find_primitive_root_of_unity(const FieldPtr& f, std::int64_t n);

/// Canonical form as a string: decimal residue, or "[a/b, ...]".
std::string to_string(const Element& x);

}  // namespace ldm
