#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "ldm/error.hpp"
#include "support.hpp"

using namespace ldm;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ldm::Error");
  return Errc::FormatError;
}

Permutation cycle(std::size_t degree, std::vector<std::uint32_t> c) {
  std::vector<std::uint32_t> images(degree);
  for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
  for (std::size_t i = 0; i < c.size(); ++i) images[c[i]] = c[(i + 1) % c.size()];
  return Permutation(images);
}

// A nonassociative loop of order 5.
MultTable loop5() {
  return MultTable::validate({{0, 1, 2, 3, 4},
                              {1, 0, 3, 4, 2},
                              {2, 4, 0, 1, 3},
                              {3, 2, 4, 0, 1},
                              {4, 3, 1, 2, 0}});
}

}  // namespace

TEST_CASE("latin validation") {
  CHECK(MultTable::validate({{0, 1}, {1, 0}}).order() == 2);
  try {
    MultTable::validate({{0, 0}, {1, 1}});
    FAIL("not latin");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotLatin);
    CHECK(std::string(e.what()).find("row 1") != std::string::npos);
  }
  CHECK(code_of([] { MultTable::validate({{0, 1}, {0, 1}}); }) == Errc::NotLatin);
  CHECK(code_of([] { MultTable::validate({{0, 1}}); }) == Errc::BadParameters);
  CHECK(code_of([] { MultTable::validate({{0, 1}, {1, 0}}, {"a", "a"}); }) == Errc::BadParameters);
  CHECK(is_group(cyclic_table(6)));
}

TEST_CASE("division") {
  const auto c6 = cyclic_table(6);
  CHECK(divide(c6, Side::Left, 2, 5) == 3);
  CHECK(divide(c6, Side::Right, 2, 5) == 3);
  for (Index a = 0; a < 6; ++a) CHECK(divide(c6, Side::Left, a, a) == 0);

  const auto d3 = dihedral_table(3);
  const Index sigma = 3, identity = 0;
  CHECK(divide(d3, Side::Right, sigma, identity) == sigma);
  const auto l5 = loop5();
  for (Index a = 0; a < 5; ++a)
    for (Index b = 0; b < 5; ++b) {
      CHECK(l5(a, l5.left_divide(a, b)) == b);
      CHECK(l5(l5.right_divide(b, a), a) == b);
    }
}

TEST_CASE("standard tables") {
  CHECK(element_order_census(cyclic_table(4)) == std::vector<std::size_t>{1, 2, 4, 4});
  CHECK(element_order_census(biextension_table(2, 0)) == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK(element_order_census(biextension_table(2, 1)) == std::vector<std::size_t>{1, 2, 4, 4});
  CHECK(element_order_census(dihedral_table(3)) == std::vector<std::size_t>{1, 2, 2, 2, 3, 3});
  CHECK(element_order_census(elementary_abelian_table(2, 3)) ==
        std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2, 2});

  const auto d3 = dihedral_table(3);
  CHECK(is_group(d3));
  CHECK(d3(1, 3) != d3(3, 1));  // nonabelian
  for (Index x = 3; x < 6; ++x) CHECK(d3(x, x) == 0);
  CHECK(d3.names()[4] == "s1");
  CHECK(biextension_table(3, 1).names()[3] == "h0'");
  CHECK(code_of([] { biextension_table(3, 3); }) == Errc::BadK);

  for (std::size_t m : {2, 4, 6}) {
    const auto k0 = element_order_census(biextension_table(m, 0));
    const auto k1 = element_order_census(biextension_table(m, 1));
    CHECK(k0.back() == m);
    CHECK(k1.back() == 2 * m);
  }
}

TEST_CASE("principal isotopes") {
  const auto c4 = cyclic_table(4);
  CHECK(principal_isotope(c4, 0, 0) == c4);
  const auto iso = principal_isotope(c4, 1, 1);
  CHECK(unit(iso) == Index{2});
  CHECK(is_group(iso));

  const auto d4 = dihedral_table(4);
  for (Index u = 0; u < 8; ++u)
    for (Index v = 0; v < 8; ++v) {
      const auto t = principal_isotope(d4, u, v);
      CHECK(unit(t) == d4(u, v));
      CHECK(is_associative(t));
    }

  const auto l5 = loop5();
  CHECK_FALSE(is_group(l5));
  CHECK_FALSE(is_associative(l5));
  for (Index u = 0; u < 5; ++u)
    for (Index v = 0; v < 5; ++v) CHECK(unit(principal_isotope(l5, u, v)) == l5(u, v));
  CHECK(code_of([&] { element_order_census(l5); }) == Errc::NotAGroup);
}

TEST_CASE("subgroup restriction") {
  const auto c6 = cyclic_table(6);
  const auto sub = restrict_table(c6, {0, 2, 4});
  CHECK(sub.order() == 3);
  CHECK(is_group(sub));
  CHECK(code_of([&] { restrict_table(c6, {0, 1}); }) == Errc::NotASubgroup);
}

TEST_CASE("permutation closure") {
  CHECK(perm_closure({cycle(3, {0, 1})}).order() == 2);
  CHECK(perm_closure({cycle(3, {0, 1, 2}), cycle(3, {0, 1})}).order() == 6);
  CHECK(perm_closure({cycle(3, {0, 1}), cycle(3, {0, 1, 2})}).order() == 6);
  CHECK(perm_closure({cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})}).order() == 120);
  CHECK(code_of([] { perm_closure({cycle(6, {0, 1, 2, 3, 4, 5}), cycle(6, {0, 1})}, 100).order(); }) ==
        Errc::CapExceeded);

  const Permutation a = cycle(4, {0, 1, 2}), b = cycle(4, {1, 3});
  CHECK((a * b)(3) == a(b(3)));
  CHECK(a * a.inverse() == Permutation::identity(4));
}

TEST_CASE("closure cap from the environment") {
  ::unsetenv("LDM_CLOSURE_CAP");
  CHECK(closure_cap_from_env() == kDefaultClosureCap);
  ::setenv("LDM_CLOSURE_CAP", "42", 1);
  CHECK(closure_cap_from_env() == 42);
  ::unsetenv("LDM_CLOSURE_CAP");
}

TEST_CASE("row quotient group of the order-18 square") {
  const auto s = PartialSquare::from_one_based(test::order18_square());
  CHECK(s.is_consistent());
  CHECK(s.undetermined_count() == 27);
  CHECK(s.complete_rows() == std::vector<Index>{9, 10, 11, 12, 13, 14, 15, 16, 17});
  const std::set<Index> rows{9, 10, 11, 12, 13, 14, 15, 16, 17};
  CHECK(row_quotient_group(s, rows).order() == 27);

  // Generating by every pair rho_x rho_y^-1 gives the same group.
  std::vector<Permutation> all_pairs;
  for (Index x : rows)
    for (Index y : rows) all_pairs.push_back(row_permutation(s, x) * row_permutation(s, y).inverse());
  CHECK(perm_closure(all_pairs).order() == 27);
  // Independent of the base row.
  std::vector<Permutation> from_last;
  for (Index x : rows) from_last.push_back(row_permutation(s, x) * row_permutation(s, 17).inverse());
  CHECK(perm_closure(from_last).order() == 27);

  CHECK(row_quotient_group(s, {12}).order() == 1);
  CHECK(code_of([&] { row_permutation(s, 0); }) == Errc::IncompleteRow);
}

TEST_CASE("row quotients of Cayley tables divide the group order") {
  for (const auto& t : {cyclic_table(6), dihedral_table(5), biextension_table(4, 1), elementary_abelian_table(3, 2)}) {
    PartialSquare s(t.order());
    for (Index i = 0; i < t.order(); ++i)
      for (Index j = 0; j < t.order(); ++j) s.set(i, j, t(i, j));
    std::set<Index> rows;
    for (Index i = 0; i < t.order(); ++i) rows.insert(i);
    CHECK(t.order() % row_quotient_group(s, rows).order() == 0);
    CHECK(t.order() % row_quotient_group(s, {0, 1}).order() == 0);
  }
}
