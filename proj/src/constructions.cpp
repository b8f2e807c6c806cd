#include "ldm/constructions.hpp"

#include <random>
#include <string_view>

#include "ldm/error.hpp"

namespace ldm {

// ---- ternary forms ---------------------------------------------------------

TernaryForm TernaryForm::monomial(FieldPtr field, Exponents e, Element c) {
  TernaryForm t(std::move(field), e[0] + e[1] + e[2]);
  t.add_term(e, c);
  return t;
}

void TernaryForm::add_term(Exponents e, const Element& c) {
  if (e[0] < 0 || e[1] < 0 || e[2] < 0 || e[0] + e[1] + e[2] != degree_)
    throw Error(Errc::BadParameters, "exponents do not match the degree");
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Element TernaryForm::evaluate(const Vector& p) const {
  if (p.size() != 3) throw Error(Errc::BadParameters, "forms take three coordinates");
  Element sum = Element::zero(field_);
  for (const auto& [e, c] : terms_) sum += c * p[0].pow(e[0]) * p[1].pow(e[1]) * p[2].pow(e[2]);
  return sum;
}

namespace {

void check_same_degree(const TernaryForm& a, const TernaryForm& b) {
  if (!same_field(a.field(), b.field())) throw Error(Errc::MixedFields, "forms over different fields");
  if (a.degree() != b.degree()) throw Error(Errc::BadParameters, "forms of different degree");
}

}  // namespace

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  check_same_degree(a, b);
  TernaryForm out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

TernaryForm operator-(const TernaryForm& a, const TernaryForm& b) {
  check_same_degree(a, b);
  TernaryForm out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  if (!same_field(a.field(), b.field())) throw Error(Errc::MixedFields, "forms over different fields");
  TernaryForm out(a.field(), a.degree() + b.degree());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

// ---- shared helpers --------------------------------------------------------

namespace {

void require_characteristic_above(const FieldPtr& f, std::int64_t bound) {
  if (f->kind() == FieldKind::Prime && f->modulus() <= bound)
    throw Error(Errc::CharacteristicTooSmall,
                "need p > " + std::to_string(bound) + " over " + f->name());
}

void require_positive(int m) {
  if (m < 1) throw Error(Errc::BadParameters, "m must be at least 1");
}

ProjectivePoint point(Element a, Element b, Element c) {
  return ProjectivePoint(Vector{std::move(a), std::move(b), std::move(c)});
}

std::vector<std::string> element_strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace

// ---- triangle --------------------------------------------------------------

LabeledMultinet build_triangle(int m, const FieldPtr& f) {
  require_positive(m);
  const Element xi = find_primitive_root_of_unity(f, 3 * m);
  require_characteristic_above(f, 3 * m);

  const Element zero = Element::zero(f), one = Element::one(f);
  auto f1 = [&](const Element& x) { return point(zero, one, x); };
  auto f2 = [&](const Element& y) { return point(y, zero, one); };
  auto f3 = [&](const Element& z) { return point(z, -one, zero); };

  const std::size_t n = 3 * static_cast<std::size_t>(m);
  std::array<Component, 3> comps;
  for (std::size_t i = 0; i < n; ++i) {
    const Element h = xi.pow(static_cast<std::int64_t>(i - i % 3));
    const Element hinv = h.inverse();
    switch (i % 3) {
      case 0:
        comps[0].push_back(f1(h));
        comps[1].push_back(f1(h * xi));
        comps[2].push_back(f1(hinv * xi.pow(5)));
        break;
      case 1:
        comps[0].push_back(f2(h * xi.inverse()));
        comps[1].push_back(f2(h));
        comps[2].push_back(f3(h));
        break;
      default:
        comps[0].push_back(f3(hinv * xi.pow(2)));
        comps[1].push_back(f3(hinv * xi));
        comps[2].push_back(f2(hinv * xi));
        break;
    }
  }
  nlohmann::ordered_json prov = {
      {"construction", "triangle"},
      {"m", m},
      {"xi", to_string(xi)},
      {"pencil_note", "third form uses the factor Z^m - omega X^m"}};
  return LabeledMultinet(f, cyclic_table(n), std::move(comps), std::move(prov));
}

LabeledMultinet build_triangle_base(int m, const FieldPtr& f) {
  require_positive(m);
  const Element eta = find_primitive_root_of_unity(f, m);
  const Element zero = Element::zero(f), one = Element::one(f);
  std::array<Component, 3> comps;
  for (int i = 0; i < m; ++i) {
    const Element x = eta.pow(i);
    comps[0].push_back(point(zero, one, x));
    comps[1].push_back(point(x, zero, one));
    comps[2].push_back(point(x, -one, zero));
  }
  nlohmann::ordered_json prov = {{"construction", "triangle-base"}, {"m", m}, {"eta", to_string(eta)}};
  return LabeledMultinet(f, cyclic_table(static_cast<std::size_t>(m)), std::move(comps),
                         std::move(prov));
}

PencilTriple triangle_pencil_polynomials(int m, const FieldPtr& f) {
  require_positive(m);
  const Element w = find_primitive_root_of_unity(f, 3);
  const Element w2 = w * w;
  const Element one = Element::one(f);
  // a U^m + b V^m for two of the variables X, Y, Z.
  auto binom = [&](int u, const Element& a, int v, const Element& b) {
    TernaryForm t(f, m);
    TernaryForm::Exponents eu{0, 0, 0}, ev{0, 0, 0};
    eu[u] = m;
    ev[v] = m;
    t.add_term(eu, a);
    t.add_term(ev, b);
    return t;
  };
  constexpr int X = 0, Y = 1, Z = 2;
  PencilTriple out{
      binom(X, one, Y, -one) * binom(Z, one, X, -w2) * binom(Y, one, Z, -w),
      binom(X, one, Y, -w) * binom(Z, one, X, -one) * binom(Y, one, Z, -w2),
      binom(X, one, Y, -w2) * binom(Z, one, X, -w) * binom(Y, one, Z, -one),
  };
  if (!(out.f1 + out.f2 + out.f3).is_zero())
    throw Error(Errc::InvariantViolation, "pencil forms do not sum to zero");
  return out;
}

// ---- conic-line ------------------------------------------------------------

LabeledMultinet build_conic_line(int m, int k, const FieldPtr& f) {
  require_positive(m);
  if (k < 0 || k >= m) throw Error(Errc::BadK, "k must satisfy 0 <= k < m");
  const Element xi = find_primitive_root_of_unity(f, 3 * m);
  require_characteristic_above(f, 2 * m);

  const Element one = Element::one(f), zero = Element::zero(f);
  auto f1 = [&](const Element& u) { return point(u, -one, zero); };
  auto f2 = [&](const Element& u) { return point(u, u.inverse(), one); };

  std::array<Component, 3> comps;
  for (int j = 0; j < m; ++j) {
    const Element h = xi.pow(3 * j);
    comps[0].push_back(f1(h));
    comps[1].push_back(f1(h * xi));
    comps[2].push_back(f1(h.inverse() * xi.pow(3 * k - 1)));
  }
  for (int j = 0; j < m; ++j) {
    const Element h = xi.pow(3 * j);
    comps[0].push_back(f2(h.inverse()));
    comps[1].push_back(f2(h.inverse() * xi.inverse()));
    comps[2].push_back(f2(h * xi));
  }
  nlohmann::ordered_json prov = {{"construction", "conic-line"}, {"m", m}, {"k", k}, {"xi", to_string(xi)}};
  return LabeledMultinet(f, biextension_table(static_cast<std::size_t>(m), static_cast<std::size_t>(k)),
                         std::move(comps), std::move(prov));
}

// ---- tetrahedron -----------------------------------------------------------

ProjectivePoint tetrahedron_lift(std::size_t c, Index x, std::size_t m, const Element& eta) {
  const FieldPtr& f = eta.field();
  const Element zero = Element::zero(f), one = Element::one(f);
  const bool reflected = x >= m;
  const Element h = eta.pow(static_cast<std::int64_t>(x % m));
  Vector v;
  switch (c) {
    case 0: v = reflected ? Vector{zero, one, zero, h} : Vector{h, zero, one, zero}; break;
    case 1: v = reflected ? Vector{zero, zero, one, h} : Vector{one, h, zero, zero}; break;
    case 2: v = reflected ? Vector{one, zero, zero, -h} : Vector{zero, -h, one, zero}; break;
    default: throw Error(Errc::BadParameters, "component index out of range");
  }
  return ProjectivePoint(std::move(v));
}

namespace {

Element random_nonzero(const FieldPtr& f, std::mt19937_64& rng) {
  if (f->kind() == FieldKind::Prime) {
    std::uniform_int_distribution<std::int64_t> d(1, f->modulus() - 1);
    return Element::from_int(f, d(rng));
  }
  std::uniform_int_distribution<std::int64_t> d(1, 1 << 16);
  return Element::from_int(f, d(rng));
}

}  // namespace

LabeledMultinet build_tetrahedron(int m, const FieldPtr& f, int face, std::uint64_t seed) {
  require_positive(m);
  if (face < 1 || face > 4) throw Error(Errc::BadParameters, "face must be 1..4");
  const Element eta = find_primitive_root_of_unity(f, m);
  require_characteristic_above(f, 2 * m);

  const std::size_t mm = static_cast<std::size_t>(m);
  const std::size_t n = 2 * mm;
  const MultTable labels = dihedral_table(mm);
  std::array<std::vector<ProjectivePoint>, 3> lift;
  for (std::size_t c = 0; c < 3; ++c)
    for (Index x = 0; x < n; ++x) lift[c].push_back(tetrahedron_lift(c, x, mm, eta));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (!collinear_pg3(lift[0][x], lift[1][y], lift[2][labels(x, y)]))
        throw Error(Errc::InvariantViolation, "dihedral table disagrees with the spatial point maps");

  Vector covector(4, Element::zero(f));
  covector[face == 4 ? 2 : 3] = Element::one(f);
  const Plane target = make_plane(covector);

  LengthSpectrum wanted;
  wanted[mm] += 1;
  wanted[1] += n * n - mm * mm;

  for (int attempt = 0; attempt < kTetrahedronAttempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    Vector c(4, Element::zero(f));
    for (int i = 0; i < 4; ++i)
      if (i != face - 1) c[i] = random_nonzero(f, rng);
    const ProjectivePoint center(c);

    std::array<Component, 3> comps;
    try {
      for (std::size_t k = 0; k < 3; ++k)
        for (const auto& q : lift[k]) comps[k].push_back(project_to_plane(center, target, q));
    } catch (const Error& e) {
      if (e.code() == Errc::ProjectingCenter) continue;
      throw;
    }
    nlohmann::ordered_json prov = {{"construction", "tetrahedron"},
                                   {"m", m},
                                   {"face", face},
                                   {"seed", seed},
                                   {"attempt", attempt},
                                   {"eta", to_string(eta)},
                                   {"center", element_strings(center.coords())}};
    LabeledMultinet out(f, labels, std::move(comps), std::move(prov));
    if (!verify(out).ok()) continue;
    if (length_spectrum(out) != wanted) continue;
    return out;
  }
  throw Error(Errc::SamplingExhausted,
              "no admissible center in " + std::to_string(kTetrahedronAttempts) + " attempts");
}

// ---- order 18 --------------------------------------------------------------

namespace {

// Coordinates written as "0", "1", "-1", "x<e>" (xi^e), "w" (xi^3), "w2" (xi^6),
// each optionally negated.
constexpr std::array<std::array<std::array<std::string_view, 3>, 18>, 3> kOrder18 = {{
    {{{"0", "1", "1"},       {"0", "w2", "1"},      {"0", "w", "1"},
      {"-x8", "1", "0"},     {"-x2", "1", "0"},     {"-x5", "1", "0"},
      {"x2", "0", "1"},      {"x8", "0", "1"},      {"x5", "0", "1"},
      {"-x2", "-1", "1"},    {"-x8", "-w", "1"},    {"-x5", "-w2", "1"},
      {"-x2", "-w2", "1"},   {"-x8", "-1", "1"},    {"-x5", "-w", "1"},
      {"-x2", "-w", "1"},    {"-x8", "-w2", "1"},   {"-x5", "-1", "1"}}},
    {{{"0", "x2", "1"},      {"0", "x8", "1"},      {"0", "x5", "1"},
      {"-x1", "1", "0"},     {"-x4", "1", "0"},     {"-x7", "1", "0"},
      {"1", "0", "1"},       {"w2", "0", "1"},      {"w", "0", "1"},
      {"-1", "-x5", "1"},    {"-w2", "-x8", "1"},   {"-w", "-x2", "1"},
      {"-1", "-x2", "1"},    {"-w2", "-x5", "1"},   {"-w", "-x8", "1"},
      {"-1", "-x8", "1"},    {"-w2", "-x2", "1"},   {"-w", "-x5", "1"}}},
    {{{"0", "x4", "1"},      {"0", "x1", "1"},      {"0", "x7", "1"},
      {"x1", "0", "1"},      {"x4", "0", "1"},      {"x7", "0", "1"},
      {"-1", "1", "0"},      {"-w2", "1", "0"},     {"-w", "1", "0"},
      {"-x4", "-x4", "1"},   {"-x7", "-x1", "1"},   {"-x1", "-x7", "1"},
      {"-x7", "-x7", "1"},   {"-x1", "-x4", "1"},   {"-x4", "-x1", "1"},
      {"-x1", "-x1", "1"},   {"-x4", "-x7", "1"},   {"-x7", "-x4", "1"}}},
}};

Element order18_coordinate(std::string_view s, const Element& xi) {
  const FieldPtr& f = xi.field();
  bool negative = false;
  if (s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  Element v = Element::zero(f);
  if (s == "0") return v;
  if (s == "1") v = Element::one(f);
  else if (s == "w") v = xi.pow(3);
  else if (s == "w2") v = xi.pow(6);
  else if (s.front() == 'x') v = xi.pow(s[1] - '0');
  else throw Error(Errc::InvariantViolation, "bad coordinate code");
  return negative ? -v : v;
}

// Row-major backtracking: each cell takes the smallest collinear symbol not
// yet used in its row or column.
class FirstFitCompletion {
 public:
  explicit FirstFitCompletion(const LabeledMultinet& m)
      : n_(m.order()), table_(n_, std::vector<Index>(n_)), row_used_(n_, std::vector<bool>(n_)),
        col_used_(n_, std::vector<bool>(n_)), candidates_(n_ * n_) {
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_; ++j)
        for (Index k = 0; k < n_; ++k)
          if (collinear(m.point(0, i), m.point(1, j), m.point(2, k))) candidates_[i * n_ + j].push_back(k);
  }

  std::optional<MultTable> run() {
    if (!fill(0)) return std::nullopt;
    return MultTable::validate(table_);
  }

 private:
  bool fill(std::size_t cell) {
    if (cell == n_ * n_) return true;
    if (++nodes_ > kNodeBudget) throw Error(Errc::CapExceeded, "latin completion search too large");
    const Index i = cell / n_, j = cell % n_;
    for (Index k : candidates_[cell]) {
      if (row_used_[i][k] || col_used_[j][k]) continue;
      row_used_[i][k] = col_used_[j][k] = true;
      table_[i][j] = k;
      if (fill(cell + 1)) return true;
      row_used_[i][k] = col_used_[j][k] = false;
    }
    return false;
  }

  static constexpr std::size_t kNodeBudget = 10000000;
  std::size_t n_;
  std::vector<std::vector<Index>> table_;
  std::vector<std::vector<bool>> row_used_, col_used_;
  std::vector<std::vector<Index>> candidates_;
  std::size_t nodes_ = 0;
};

}  // namespace

LabeledMultinet build_order18(const FieldPtr& f, Order18Labels labels) {
  const Element xi = find_primitive_root_of_unity(f, 9);
  std::array<Component, 3> comps;
  for (std::size_t c = 0; c < 3; ++c)
    for (const auto& row : kOrder18[c])
      comps[c].push_back(ProjectivePoint(Vector{order18_coordinate(row[0], xi),
                                                order18_coordinate(row[1], xi),
                                                order18_coordinate(row[2], xi)}));
  nlohmann::ordered_json prov = {{"construction", "order18"},
                                 {"xi", to_string(xi)},
                                 {"labels", labels == Order18Labels::FirstFit ? "first-fit" : "none"}};
  LabeledMultinet geometric(f, std::nullopt, comps, prov);
  if (labels == Order18Labels::None) return geometric;

  auto table = FirstFitCompletion(geometric).run();
  if (!table) throw Error(Errc::InvariantViolation, "no latin completion compatible with the points");
  return LabeledMultinet(f, std::move(table), std::move(comps), std::move(prov));
}

}  // namespace ldm
