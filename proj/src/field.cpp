#include "ldm/field.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ldm/error.hpp"

namespace ldm {

namespace {

using Poly = std::vector<mpz_class>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Exact quotient of a by a monic divisor b (remainder must vanish).
Poly divide_exact(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

void require_same(const Element& a, const Element& b) {
  if (!a.field() || !b.field() || !same_field(a.field(), b.field()))
    throw Error(Errc::MixedFields, "operands belong to different fields");
}

// Reduce a coefficient vector of arbitrary length modulo Phi_N in place.
void reduce_cyclotomic(std::vector<mpq_class>& c, const Poly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = c.size(); i-- > deg;) {
    if (c[i] == 0) continue;
    mpq_class lead = c[i];
    for (std::size_t j = 0; j <= deg; ++j) c[i - deg + j] -= lead * phi[j];
  }
  c.resize(deg);
}

std::vector<mpq_class> cyclotomic_product(const std::vector<mpq_class>& a,
                                          const std::vector<mpq_class>& b, const Poly& phi) {
  std::vector<mpq_class> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  reduce_cyclotomic(r, phi);
  return r;
}

// Solve M x = rhs over Q for square nonsingular M.
std::vector<mpq_class> solve_rational(std::vector<std::vector<mpq_class>> m,
                                      std::vector<mpq_class> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw Error(Errc::DivisionByZero, "singular multiplication matrix");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const mpq_class f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int euler_phi(int n) {
  int result = n;
  for (auto q : prime_factors(n)) result -= result / static_cast<int>(q);
  return result;
}

std::vector<mpz_class> cyclotomic_polynomial(int n) {
  Poly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = divide_exact(num, cyclotomic_polynomial(d));
  return num;
}

std::string Field::name() const {
  if (kind_ == FieldKind::Prime) return "F" + std::to_string(modulus_);
  return "Q(zeta_" + std::to_string(conductor_) + ")";
}

FieldPtr make_prime_field(std::int64_t p) {
  if (p < 2) throw Error(Errc::BadParameters, "prime modulus must be >= 2");
  if (p >= (std::int64_t{1} << 62)) throw Error(Errc::BadParameters, "modulus too large");
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is composite");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Prime;
  f->modulus_ = p;
  f->degree_ = 1;
  return f;
}

FieldPtr make_cyclotomic_field(int n) {
  if (n < 1) throw Error(Errc::BadParameters, "conductor must be >= 1");
  auto f = std::shared_ptr<Field>(new Field());
  f->kind_ = FieldKind::Cyclotomic;
  f->conductor_ = n;
  f->phi_ = cyclotomic_polynomial(n);
  f->degree_ = static_cast<int>(f->phi_.size()) - 1;
  return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

Element Element::zero(const FieldPtr& f) { return from_int(f, 0); }
Element Element::one(const FieldPtr& f) { return from_int(f, 1); }

Element Element::from_int(const FieldPtr& f, std::int64_t v) {
  Element e;
  e.field_ = f;
  if (f->kind() == FieldKind::Prime) {
    const std::int64_t p = f->modulus();
    e.residue_ = static_cast<std::uint64_t>(((v % p) + p) % p);
  } else {
    e.coeffs_.assign(f->degree(), mpq_class(0));
    e.coeffs_[0] = mpq_class(static_cast<long>(v));
  }
  return e;
}

Element Element::from_rational(const FieldPtr& f, const mpq_class& q) {
  if (f->kind() == FieldKind::Cyclotomic) {
    Element e = zero(f);
    e.coeffs_[0] = q;
    e.coeffs_[0].canonicalize();
    return e;
  }
  const mpz_class p = static_cast<long>(f->modulus());
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw Error(Errc::DivisionByZero, "denominator divisible by characteristic");
  if (num < 0) num += p;
  return from_int(f, num.get_si()) / from_int(f, den.get_si());
}

Element Element::zeta(const FieldPtr& f) {
  if (f->kind() != FieldKind::Cyclotomic)
    throw Error(Errc::BadParameters, "zeta exists only in cyclotomic fields");
  Element e = zero(f);
  if (f->degree() == 1) {
    // Q(zeta_1) = Q(zeta_2) = Q; zeta is 1 or -1.
    e.coeffs_[0] = -f->cyclotomic_polynomial()[0];
  } else {
    e.coeffs_[1] = 1;
  }
  return e;
}

Element Element::from_coefficients(const FieldPtr& f, std::vector<mpq_class> coeffs) {
  if (f->kind() != FieldKind::Cyclotomic)
    throw Error(Errc::BadParameters, "coefficient vectors need a cyclotomic field");
  Element e;
  e.field_ = f;
  if (coeffs.size() < static_cast<std::size_t>(f->degree())) coeffs.resize(f->degree());
  for (auto& c : coeffs) c.canonicalize();
  reduce_cyclotomic(coeffs, f->cyclotomic_polynomial());
  e.coeffs_ = std::move(coeffs);
  return e;
}

bool Element::is_zero() const {
  if (field_->kind() == FieldKind::Prime) return residue_ == 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Element::is_one() const { return *this == one(field_); }

Element Element::operator-() const {
  Element r = *this;
  if (field_->kind() == FieldKind::Prime) {
    const auto p = static_cast<std::uint64_t>(field_->modulus());
    r.residue_ = residue_ == 0 ? 0 : p - residue_;
  } else {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;
}

Element operator+(const Element& a, const Element& b) {
  require_same(a, b);
  Element r = a;
  if (a.field_->kind() == FieldKind::Prime) {
    const auto p = static_cast<std::uint64_t>(a.field_->modulus());
    r.residue_ = (a.residue_ + b.residue_) % p;
  } else {
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  }
  return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const Element& a, const Element& b) {
  require_same(a, b);
  Element r;
  r.field_ = a.field_;
  if (a.field_->kind() == FieldKind::Prime) {
    r.residue_ = mul_mod(a.residue_, b.residue_, static_cast<std::uint64_t>(a.field_->modulus()));
  } else {
    r.coeffs_ = cyclotomic_product(a.coeffs_, b.coeffs_, a.field_->cyclotomic_polynomial());
  }
  return r;
}

Element Element::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  Element r;
  r.field_ = field_;
  if (field_->kind() == FieldKind::Prime) {
    const auto p = static_cast<std::uint64_t>(field_->modulus());
    r.residue_ = pow_mod(residue_, p - 2, p);
    return r;
  }
  // Column j of the multiplication-by-this matrix is this * zeta^j.
  const std::size_t n = coeffs_.size();
  const auto& phi = field_->cyclotomic_polynomial();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> col = coeffs_;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
    col.insert(col.begin(), mpq_class(0));
    reduce_cyclotomic(col, phi);
  }
  std::vector<mpq_class> rhs(n);
  rhs[0] = 1;
  r.coeffs_ = solve_rational(std::move(m), std::move(rhs));
  return r;
}

Element operator/(const Element& a, const Element& b) {
  require_same(a, b);
  return a * b.inverse();
}

bool operator==(const Element& a, const Element& b) {
  require_same(a, b);
  if (a.field_->kind() == FieldKind::Prime) return a.residue_ == b.residue_;
  return a.coeffs_ == b.coeffs_;
}

Element Element::pow(std::int64_t e) const {
  Element base = e < 0 ? inverse() : *this;
  std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Element r = one(field_);
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

std::string Element::to_string() const {
  if (!field_) return "<detached>";
  if (field_->kind() == FieldKind::Prime) return std::to_string(residue_);
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_num() << '/' << coeffs_[i].get_den();
  }
  os << ']';
  return os.str();
}

std::string to_string(const Element& x) { return x.to_string(); }

bool canonical_less(const Element& a, const Element& b) {
  require_same(a, b);
  if (a.field()->kind() == FieldKind::Prime) return a.residue() < b.residue();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const int c = cmp(ca[i], cb[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::int64_t multiplicative_order(const Element& x, std::int64_t limit) {
  if (x.is_zero()) return 0;
  const Element one = Element::one(x.field());
  Element acc = x;
  for (std::int64_t d = 1; d <= limit; ++d) {
    if (acc == one) return d;
    acc = acc * x;
  }
  return 0;
}

Element find_primitive_root_of_unity(const FieldPtr& f, std::int64_t n) {
  if (n < 1) throw Error(Errc::NoSuchRoot, "order must be positive");
  if (f->kind() == FieldKind::Prime) {
    const std::int64_t p = f->modulus();
    if ((p - 1) % n != 0)
      throw Error(Errc::NoSuchRoot,
                  std::to_string(n) + " does not divide " + std::to_string(p - 1));
    const auto factors = prime_factors(n);
    for (std::int64_t r = 1; r < p; ++r) {
      const auto ur = static_cast<std::uint64_t>(r);
      const auto up = static_cast<std::uint64_t>(p);
      if (pow_mod(ur, static_cast<std::uint64_t>(n), up) != 1) continue;
      const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::int64_t q) {
        return pow_mod(ur, static_cast<std::uint64_t>(n / q), up) != 1;
      });
      if (primitive) return Element::from_int(f, r);
    }
    throw Error(Errc::NoSuchRoot, "no element of order " + std::to_string(n));
  }
  const int N = f->conductor();
  if (N % n == 0) return Element::zeta(f).pow(N / n);
  throw Error(Errc::NoSuchRoot,
              std::to_string(n) + " does not divide conductor " + std::to_string(N));
}

}  // namespace ldm
