#include "ldm/loops.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "ldm/error.hpp"

namespace ldm {

MultTable MultTable::validate(std::vector<std::vector<Index>> table, std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(Errc::BadParameters, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(Errc::BadParameters, "table is not square");
    for (auto v : row)
      if (v >= n) throw Error(Errc::BadParameters, "entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (auto v : table[i]) {
      if (seen[v]) throw Error(Errc::NotLatin, "row " + std::to_string(i + 1));
      seen[v] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[table[i][j]]) throw Error(Errc::NotLatin, "col " + std::to_string(j + 1));
      seen[table[i][j]] = true;
    }
  }
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));
  if (names.size() != n) throw Error(Errc::BadParameters, "wrong number of element names");
  if (std::set<std::string>(names.begin(), names.end()).size() != n)
    throw Error(Errc::BadParameters, "element names are not distinct");

  MultTable t;
  t.left_div_.assign(n, std::vector<Index>(n));
  t.right_div_.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < n; ++x) {
      t.left_div_[a][table[a][x]] = x;   // a x = b  =>  a \ b = x
      t.right_div_[a][table[x][a]] = x;  // x a = b  =>  b / a = x
    }
  t.table_ = std::move(table);
  t.names_ = std::move(names);
  return t;
}

std::optional<Index> MultTable::find(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Index>(it - names_.begin());
}

Index divide(const MultTable& t, Side side, Index a, Index b) {
  return side == Side::Left ? t.left_divide(a, b) : t.right_divide(b, a);
}

MultTable principal_isotope(const MultTable& t, Index u, Index v) {
  const std::size_t n = t.order();
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) table[x][y] = t(t.right_divide(x, v), t.left_divide(u, y));
  return MultTable::validate(std::move(table), t.names());
}

std::optional<Index> unit(const MultTable& t) {
  for (Index e = 0; e < t.order(); ++e) {
    bool ok = true;
    for (Index x = 0; x < t.order() && ok; ++x) ok = t(e, x) == x && t(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

bool is_associative(const MultTable& t) {
  const std::size_t n = t.order();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index ab = t(a, b);
      for (Index c = 0; c < n; ++c)
        if (t(ab, c) != t(a, t(b, c))) return false;
    }
  return true;
}

bool is_group(const MultTable& t) { return unit(t).has_value() && is_associative(t); }

MultTable cyclic_table(std::size_t n) {
  if (n == 0) throw Error(Errc::BadParameters, "cyclic order must be positive");
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (Index j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return MultTable::validate(std::move(table), std::move(names));
}

MultTable dihedral_table(std::size_t m) {
  if (m == 0) throw Error(Errc::BadParameters, "dihedral parameter must be positive");
  const std::size_t n = 2 * m;
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names;
  for (Index j = 0; j < m; ++j) names.push_back("r" + std::to_string(j));
  for (Index j = 0; j < m; ++j) names.push_back("s" + std::to_string(j));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const std::size_t x = a % m, y = b % m;
      const bool xs = a >= m, ys = b >= m;
      if (!xs && !ys) table[a][b] = (x + y) % m;
      else if (!xs) table[a][b] = m + (y + m - x) % m;
      else if (!ys) table[a][b] = m + (x + y) % m;
      else table[a][b] = (y + m - x) % m;
    }
  return MultTable::validate(std::move(table), std::move(names));
}

MultTable biextension_table(std::size_t m, std::size_t k) {
  if (m == 0) throw Error(Errc::BadParameters, "biextension parameter must be positive");
  if (k >= m) throw Error(Errc::BadK, "k must lie in 0..m-1");
  const std::size_t n = 2 * m;
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names;
  for (Index j = 0; j < m; ++j) names.push_back("h" + std::to_string(j));
  for (Index j = 0; j < m; ++j) names.push_back("h" + std::to_string(j) + "'");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const std::size_t x = a % m, y = b % m;
      const bool xp = a >= m, yp = b >= m;
      if (!xp && !yp) table[a][b] = (x + y) % m;
      else if (xp != yp) table[a][b] = m + (x + y) % m;
      else table[a][b] = (x + y + k) % m;
    }
  return MultTable::validate(std::move(table), std::move(names));
}

MultTable elementary_abelian_table(std::size_t r, std::size_t k) {
  if (r < 2 || k == 0) throw Error(Errc::BadParameters, "need r >= 2 and k >= 1");
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) n *= r;
  auto digits = [&](Index v) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = v % r;
      v /= r;
    }
    return d;
  };
  std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
  std::vector<std::string> names;
  for (Index a = 0; a < n; ++a) {
    const auto da = digits(a);
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) name += (i ? "," : "") + std::to_string(da[i]);
    names.push_back(name + ")");
    for (Index b = 0; b < n; ++b) {
      const auto db = digits(b);
      Index v = 0;
      for (std::size_t i = 0; i < k; ++i) v = v * r + (da[i] + db[i]) % r;
      table[a][b] = v;
    }
  }
  return MultTable::validate(std::move(table), std::move(names));
}

std::vector<std::size_t> element_order_census(const MultTable& t) {
  if (!is_group(t)) throw Error(Errc::NotAGroup, "element orders need a group table");
  const Index e = *unit(t);
  std::vector<std::size_t> census;
  for (Index g = 0; g < t.order(); ++g) {
    std::size_t k = 1;
    for (Index acc = g; acc != e; acc = t(acc, g)) ++k;
    census.push_back(k);
  }
  std::sort(census.begin(), census.end());
  return census;
}

MultTable restrict_table(const MultTable& t, const std::vector<Index>& subset) {
  std::vector<Index> position(t.order(), t.order());
  for (Index i = 0; i < subset.size(); ++i) {
    if (subset[i] >= t.order() || position[subset[i]] != t.order())
      throw Error(Errc::NotASubgroup, "subset has repeated or unknown elements");
    position[subset[i]] = i;
  }
  std::vector<std::vector<Index>> table(subset.size(), std::vector<Index>(subset.size()));
  std::vector<std::string> names;
  for (Index i = 0; i < subset.size(); ++i) {
    names.push_back(t.names()[subset[i]]);
    for (Index j = 0; j < subset.size(); ++j) {
      const Index p = position[t(subset[i], subset[j])];
      if (p == t.order()) throw Error(Errc::NotASubgroup, "subset is not closed");
      table[i][j] = p;
    }
  }
  return MultTable::validate(std::move(table), std::move(names));
}

// ---- permutations --------------------------------------------------------

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw Error(Errc::BadParameters, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(Errc::BadParameters, "degree mismatch");
  std::vector<std::uint32_t> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(i));
  return Permutation(std::move(images));
}

std::size_t closure_cap_from_env() {
  if (const char* v = std::getenv("LDM_CLOSURE_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && cap > 0) return static_cast<std::size_t>(cap);
  }
  return kDefaultClosureCap;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators, std::size_t cap)
    : degree_(degree), generators_(std::move(generators)), cap_(cap) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw Error(Errc::BadParameters, "generator degree mismatch");
}

const std::set<Permutation>& PermGroup::elements() const {
  if (elements_) return *elements_;
  std::set<Permutation> seen{Permutation::identity(degree_)};
  std::deque<Permutation> frontier{Permutation::identity(degree_)};
  while (!frontier.empty()) {
    const Permutation g = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : generators_) {
      Permutation h = s * g;
      if (seen.insert(h).second) {
        if (seen.size() > cap_)
          throw Error(Errc::CapExceeded, "closure exceeds " + std::to_string(cap_) + " elements");
        frontier.push_back(std::move(h));
      }
    }
  }
  elements_ = std::move(seen);
  return *elements_;
}

PermGroup perm_closure(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(Errc::BadParameters, "no generators");
  return PermGroup(generators.front().degree(), generators, cap);
}

// ---- partial latin squares -------------------------------------------------

PartialSquare::PartialSquare(std::size_t order)
    : cells_(order, std::vector<std::optional<Index>>(order)) {}

PartialSquare PartialSquare::from_one_based(const std::vector<std::vector<int>>& entries) {
  PartialSquare s(entries.size());
  for (Index i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != entries.size()) throw Error(Errc::BadParameters, "square is not square");
    for (Index j = 0; j < entries.size(); ++j) {
      const int v = entries[i][j];
      if (v < 0 || v > static_cast<int>(entries.size()))
        throw Error(Errc::BadParameters, "symbol out of range");
      if (v > 0) s.cells_[i][j] = static_cast<Index>(v - 1);
    }
  }
  return s;
}

bool PartialSquare::row_complete(Index i) const {
  return std::all_of(cells_[i].begin(), cells_[i].end(), [](const auto& c) { return c.has_value(); });
}

std::vector<Index> PartialSquare::complete_rows() const {
  std::vector<Index> out;
  for (Index i = 0; i < order(); ++i)
    if (row_complete(i)) out.push_back(i);
  return out;
}

std::size_t PartialSquare::undetermined_count() const {
  std::size_t count = 0;
  for (const auto& row : cells_)
    for (const auto& c : row) count += !c.has_value();
  return count;
}

bool PartialSquare::is_consistent() const {
  const std::size_t n = order();
  for (Index i = 0; i < n; ++i) {
    std::vector<bool> row_seen(n, false), col_seen(n, false);
    for (Index j = 0; j < n; ++j) {
      if (const auto& c = cells_[i][j]) {
        if (row_seen[*c]) return false;
        row_seen[*c] = true;
      }
      if (const auto& c = cells_[j][i]) {
        if (col_seen[*c]) return false;
        col_seen[*c] = true;
      }
    }
  }
  return true;
}

std::vector<std::vector<int>> PartialSquare::to_one_based() const {
  std::vector<std::vector<int>> out(order(), std::vector<int>(order(), 0));
  for (Index i = 0; i < order(); ++i)
    for (Index j = 0; j < order(); ++j)
      if (cells_[i][j]) out[i][j] = static_cast<int>(*cells_[i][j]) + 1;
  return out;
}

Permutation row_permutation(const PartialSquare& s, Index x) {
  if (!s.row_complete(x)) throw Error(Errc::IncompleteRow, "row " + std::to_string(x + 1));
  std::vector<std::uint32_t> images(s.order());
  for (Index j = 0; j < s.order(); ++j) images[j] = static_cast<std::uint32_t>(*s.at(x, j));
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    throw Error(Errc::IncompleteRow, "row " + std::to_string(x + 1) + " repeats a symbol");
  }
}

PermGroup row_quotient_group(const PartialSquare& s, const std::set<Index>& rows, std::size_t cap) {
  if (rows.empty()) throw Error(Errc::BadParameters, "no rows chosen");
  const Permutation base_inverse = row_permutation(s, *rows.begin()).inverse();
  std::vector<Permutation> gens;
  for (Index x : rows) gens.push_back(row_permutation(s, x) * base_inverse);
  return PermGroup(s.order(), std::move(gens), cap);
}

}  // namespace ldm
