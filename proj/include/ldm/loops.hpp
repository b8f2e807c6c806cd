#pragma once

// Finite quasigroups, loops and groups as latin squares, plus the
// permutation-group machinery behind the group-labelability test.
//
// Elements are addressed by 0-based indices internally; the JSON layer
// converts to the 1-based indices used in files.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ldm {

using Index = std::size_t;

class MultTable {
 public:
  /// Validates the latin property; throws Errc::NotLatin naming the first
  /// offending row or column. Names default to "1".."n".
  static MultTable validate(std::vector<std::vector<Index>> table,
                            std::vector<std::string> names = {});

  std::size_t order() const noexcept { return table_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<Index>>& rows() const noexcept { return table_; }
  Index operator()(Index a, Index b) const { return table_[a][b]; }

  /// a \ b: the unique x with a x = b.
  Index left_divide(Index a, Index b) const { return left_div_[a][b]; }
  /// b / a: the unique x with x a = b.
  Index right_divide(Index b, Index a) const { return right_div_[a][b]; }

  /// Index of the element with this name, if any.
  std::optional<Index> find(const std::string& name) const;

  friend bool operator==(const MultTable& a, const MultTable& b) {
    return a.table_ == b.table_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::vector<Index>> table_;
  std::vector<std::string> names_;
  std::vector<std::vector<Index>> left_div_;   // [a][b] = a \ b
  std::vector<std::vector<Index>> right_div_;  // [a][b] = b / a
};

enum class Side { Left, Right };

/// Left: the x with a x = b. Right: the x with x a = b.
Index divide(const MultTable& t, Side side, Index a, Index b);

/// x o y = (x / v)(u \ y); a loop with unit u v.
MultTable principal_isotope(const MultTable& t, Index u, Index v);

/// Two-sided unit, if one exists.
std::optional<Index> unit(const MultTable& t);
bool is_associative(const MultTable& t);
bool is_group(const MultTable& t);

MultTable cyclic_table(std::size_t n);
/// Elements h (index j) and h sigma (index m + j) for h = j in Z/m with
/// x.y = x+y, x.(y s) = (y-x)s, (x s).y = (x+y)s, (x s).(y s) = y-x.
MultTable dihedral_table(std::size_t m);
/// H u H' over H = Z/m: x*y = x+y, x*y' = x'*y = (x+y)', x'*y' = x+y+k.
MultTable biextension_table(std::size_t m, std::size_t k);
/// (Z/r)^k with lexicographic digit order.
MultTable elementary_abelian_table(std::size_t r, std::size_t k);

/// Sorted multiset of element orders; throws Errc::NotAGroup.
std::vector<std::size_t> element_order_census(const MultTable& t);

/// Restriction of a group table to a subset closed under the product
/// (throws Errc::NotASubgroup otherwise); element i of the result is
/// subset[i].
MultTable restrict_table(const MultTable& t, const std::vector<Index>& subset);

// ---- permutations --------------------------------------------------------

class Permutation {
 public:
  Permutation() = default;
  /// images[i] is the image of i; throws Errc::BadParameters if not a bijection.
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<std::uint32_t> images_;
};

/// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

inline constexpr std::size_t kDefaultClosureCap = 1000000;

/// Cap from the LDM_CLOSURE_CAP environment variable, else the default.
std::size_t closure_cap_from_env();

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::size_t cap = kDefaultClosureCap);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::size_t order() const { return elements().size(); }
  /// Breadth-first closure; throws Errc::CapExceeded past the cap.
  const std::set<Permutation>& elements() const;
  bool contains(const Permutation& p) const { return elements().count(p) != 0; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::size_t cap_;
  mutable std::optional<std::set<Permutation>> elements_;
};

PermGroup perm_closure(const std::vector<Permutation>& generators,
                       std::size_t cap = kDefaultClosureCap);

// ---- partial latin squares -------------------------------------------------

class PartialSquare {
 public:
  explicit PartialSquare(std::size_t order);
  /// entries[i][j] is 0 for an undetermined cell, else a 1-based symbol.
  static PartialSquare from_one_based(const std::vector<std::vector<int>>& entries);

  std::size_t order() const noexcept { return cells_.size(); }
  const std::optional<Index>& at(Index i, Index j) const { return cells_[i][j]; }
  void set(Index i, Index j, std::optional<Index> symbol) { cells_[i][j] = symbol; }

  bool row_complete(Index i) const;
  std::vector<Index> complete_rows() const;
  std::size_t undetermined_count() const;
  /// Each determined symbol at most once per row and column.
  bool is_consistent() const;
  /// 1-based symbols, 0 for undetermined.
  std::vector<std::vector<int>> to_one_based() const;

  friend bool operator==(const PartialSquare&, const PartialSquare&) = default;

 private:
  std::vector<std::vector<std::optional<Index>>> cells_;
};

/// The permutation j -> S[x][j] of a complete row; Errc::IncompleteRow otherwise.
Permutation row_permutation(const PartialSquare& s, Index x);

/// Group generated by rho_x rho_b^{-1} for x in rows, b = min(rows).
PermGroup row_quotient_group(const PartialSquare& s, const std::set<Index>& rows,
                             std::size_t cap = kDefaultClosureCap);

}  // namespace ldm
