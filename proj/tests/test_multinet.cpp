#include <doctest.h>

#include <algorithm>

#include "ldm/error.hpp"
#include "support.hpp"

using namespace ldm;
using ldm::test::el;
using ldm::test::ln;
using ldm::test::pt;
using ldm::test::spectrum;

namespace {

LabeledMultinet with_point(const LabeledMultinet& m, std::size_t c, Index x, ProjectivePoint p) {
  auto comps = m.components();
  comps[c][x] = std::move(p);
  return LabeledMultinet(m.field(), m.labels(), comps, m.provenance());
}

const LineRecord* find_line(const std::vector<LineRecord>& lines, const ProjectiveLine& l) {
  for (const auto& r : lines)
    if (r.line == l) return &r;
  return nullptr;
}

bool contains(const std::vector<Index>& v, Index x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace

TEST_CASE("verify catches perturbations") {
  const auto f = make_prime_field(19);
  const auto m = build_triangle(3, f);
  CHECK(verify(m).ok());

  const auto moved = with_point(m, 2, 4, pt(f, {5, 7, 1}));
  const auto r = verify(moved);
  CHECK(r.injective);
  CHECK_FALSE(r.multinet_law);
  REQUIRE(r.law_witness.has_value());
  const auto [x, y] = *r.law_witness;
  CHECK((*m.labels())(x, y) == 4);

  const auto dup = with_point(m, 0, 1, m.point(0, 0));
  CHECK_FALSE(verify(dup).injective);
  CHECK(verify(dup).injective_witness == std::array<std::size_t, 3>{0, 0, 1});

  const auto shared = with_point(m, 1, 0, m.point(0, 0));
  CHECK_FALSE(verify(shared).disjoint);
  CHECK(verify(shared).disjoint_witness.has_value());
}

TEST_CASE("structural checks on construction") {
  const auto f = make_prime_field(7);
  const auto g = make_prime_field(13);
  const auto m = build_triangle(2, f);
  auto comps = m.components();
  comps[2].pop_back();
  CHECK_THROWS_AS(LabeledMultinet(f, m.labels(), comps), Error);
  CHECK_THROWS_AS(LabeledMultinet(g, m.labels(), m.components()), Error);
  CHECK_THROWS_AS(LabeledMultinet(f, cyclic_table(5), m.components()), Error);
}

TEST_CASE("belonging lines of the explicit families") {
  const auto f7 = make_prime_field(7);
  const auto tri = belonging_lines(build_triangle(2, f7));
  for (const auto& l : {ln(f7, {1, 0, 0}), ln(f7, {0, 1, 0}), ln(f7, {0, 0, 1})}) {
    const auto* r = find_line(tri, l);
    REQUIRE(r != nullptr);
    CHECK(r->length() == 2);
  }
  CHECK(std::is_sorted(tri.begin(), tri.end(),
                       [](const auto& a, const auto& b) { return canonical_less(a.line, b.line); }));

  const auto f31 = make_prime_field(31);
  const auto cl = belonging_lines(build_conic_line(5, 0, f31));
  const auto* x3 = find_line(cl, ln(f31, {0, 0, 1}));
  REQUIRE(x3 != nullptr);
  CHECK(x3->length() == 5);

  const auto f37 = make_prime_field(37);
  const auto o18 = belonging_lines(build_order18(f37));
  for (const auto& l : {ln(f37, {1, 0, 0}), ln(f37, {0, 1, 0}), ln(f37, {0, 0, 1})}) {
    const auto* r = find_line(o18, l);
    REQUIRE(r != nullptr);
    CHECK(r->length() == 3);
  }
}

TEST_CASE("length spectra match the brute-force oracle") {
  CHECK(length_spectrum(build_triangle(1, make_prime_field(7))) == spectrum({{1, 9}}));
  CHECK(length_spectrum(build_triangle(2, make_prime_field(7))) == spectrum({{2, 3}, {1, 24}}));
  CHECK(length_spectrum(build_triangle(3, make_prime_field(19))) == spectrum({{3, 3}, {1, 54}}));
  CHECK(length_spectrum(build_triangle(4, make_prime_field(13))) == spectrum({{4, 3}, {1, 96}}));
  CHECK(length_spectrum(build_conic_line(2, 0, make_prime_field(7))) == spectrum({{2, 1}, {1, 12}}));
  CHECK(length_spectrum(build_conic_line(5, 1, make_prime_field(31))) == spectrum({{5, 1}, {1, 75}}));
  CHECK(length_spectrum(build_order18(make_prime_field(37))) == spectrum({{3, 3}, {1, 297}}));
  CHECK(length_spectrum(build_order18(make_prime_field(19))) == spectrum({{3, 3}, {2, 27}, {1, 189}}));
}

TEST_CASE("each line meets the three components equally") {
  const std::vector<LabeledMultinet> cases = {build_triangle(3, make_prime_field(19)),
                                              build_conic_line(4, 1, make_prime_field(13)),
                                              build_tetrahedron(5, make_prime_field(31), 1, 0)};
  for (const auto& m : cases) {
    const MultTable& t = *m.labels();
    std::size_t pairs = 0;
    for (const auto& l : belonging_lines(m)) {
      CHECK(l.members[0].size() == l.members[1].size());
      CHECK(l.members[1].size() == l.members[2].size());
      pairs += l.length() * l.length();
      for (Index a : l.members[0])
        for (Index b : l.members[1]) CHECK(contains(l.members[2], t(a, b)));
      for (Index c : l.members[2])
        for (Index b : l.members[1]) CHECK(contains(l.members[0], t.right_divide(c, b)));
      for (Index a : l.members[0])
        for (Index c : l.members[2]) CHECK(contains(l.members[1], t.left_divide(a, c)));
    }
    CHECK(pairs == m.order() * m.order());
  }
}

TEST_CASE("dual 3-nets") {
  const auto f13 = make_prime_field(13);
  CHECK(is_dual_3net(build_triangle_base(4, f13)));
  CHECK(verify(build_triangle_base(4, f13)).ok());
  CHECK(is_dual_3net(build_triangle(1, make_prime_field(7))));
  CHECK_FALSE(is_dual_3net(build_triangle(2, make_prime_field(7))));
  CHECK_FALSE(is_dual_3net(build_conic_line(2, 1, make_prime_field(7))));

  // Any dual 3-net: the forced square is total and equals the labels.
  const auto base = build_triangle_base(6, f13);
  const auto s = partial_latin_square(base);
  CHECK(s.undetermined_count() == 0);
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) CHECK(s.at(i, j) == (*base.labels())(i, j));
  CHECK_FALSE(group_labeling_obstruction(base).obstructed);
}

TEST_CASE("relabeling through a line") {
  const auto f19 = make_prime_field(19);
  const auto m = build_triangle(3, f19);
  const auto lines = belonging_lines(m);
  const auto* x1 = find_line(lines, ln(f19, {1, 0, 0}));
  REQUIRE(x1 != nullptr);
  for (Index u : x1->members[0])
    for (Index v : x1->members[1]) {
      const auto r = relabel_through_line(m, *x1, u, v);
      CHECK(verify(r).ok());
      const Index e = (*m.labels())(u, v);
      CHECK(unit(*r.labels()) == e);
      CHECK(is_associative(*r.labels()));
      for (std::size_t c = 0; c < 3; ++c) CHECK(incident(x1->line, r.point(c, e)));
    }
  Index off = 0;
  while (contains(x1->members[0], off)) ++off;
  try {
    relabel_through_line(m, *x1, off, x1->members[1].front());
    FAIL("expected LabelNotOnLine");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LabelNotOnLine);
  }

  // Identity isotope through the long line of a conic-line instance.
  const auto f31 = make_prime_field(31);
  const auto cl = build_conic_line(5, 0, f31);
  const auto cl_lines = belonging_lines(cl);
  const auto* l = find_line(cl_lines, ln(f31, {0, 0, 1}));
  REQUIRE(l != nullptr);
  REQUIRE(contains(l->members[0], 0));
  const auto same = relabel_through_line(cl, *l, 0, 0);
  CHECK(same.components() == cl.components());
  CHECK(*same.labels() == *cl.labels());
}

TEST_CASE("coset sub-multinets") {
  const auto f31 = make_prime_field(31);
  const auto m = build_conic_line(5, 0, f31);
  std::vector<Index> all(10);
  for (Index i = 0; i < 10; ++i) all[i] = i;
  const auto whole = coset_submultinet(m, all, 0, 0);
  CHECK(whole.components() == m.components());

  const std::vector<Index> h = {0, 1, 2, 3, 4};
  const auto sub = coset_submultinet(m, h, 0, 0);
  CHECK(verify(sub).ok());
  CHECK(sub.order() == 5);
  for (std::size_t c = 0; c < 3; ++c)
    for (const auto& p : sub.component(c)) CHECK(incident(ln(f31, {0, 0, 1}), p));

  for (Index g1 = 0; g1 < 10; ++g1)
    for (Index g2 = 0; g2 < 10; ++g2) CHECK(verify(coset_submultinet(m, h, g1, g2)).ok());

  CHECK_THROWS_AS(coset_submultinet(m, {0, 1}, 0, 0), Error);
  CHECK(verify(coset_submultinet(m, {0, 5}, 1, 3)).ok());
  const auto unlabeled = build_order18(make_prime_field(37), Order18Labels::None);
  try {
    coset_submultinet(unlabeled, {0}, 0, 0);
    FAIL("expected NotAGroupLabel");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAGroupLabel);
  }
}

TEST_CASE("partial square and obstruction of the order-18 instance") {
  for (const auto& f : {make_prime_field(37), make_cyclotomic_field(9)}) {
    const auto m = build_order18(f);
    const auto s = partial_latin_square(m);
    CHECK(s.to_one_based() == test::order18_square());
    CHECK(s.at(0, 3) == Index{3});
    CHECK(s.at(9, 0) == Index{9});
    CHECK(s.at(17, 17) == Index{2});
    const auto v = group_labeling_obstruction(m);
    CHECK(v.obstructed);
    CHECK(v.quotient_order == std::size_t{27});
  }
  // A group-labeled instance is never obstructed.
  CHECK_FALSE(group_labeling_obstruction(build_triangle(3, make_prime_field(19))).obstructed);
}

TEST_CASE("classification") {
  const auto f13 = make_prime_field(13);
  const auto tri = build_triangle(4, f13);
  const auto c = classify(tri);
  CHECK(c.verdict == Verdict::Triangle);
  CHECK(c.lines == std::vector<ProjectiveLine>{ln(f13, {0, 0, 1}), ln(f13, {0, 1, 0}), ln(f13, {1, 0, 0})});
  CHECK(witness_covers(tri, c));

  const auto f31 = make_prime_field(31);
  const auto cl = build_conic_line(5, 1, f31);
  const auto cc = classify(cl);
  CHECK(cc.verdict == Verdict::ConicLine);
  REQUIRE(cc.conic.has_value());
  CHECK(cc.conic->coefficients == test::vec(f31, {0, 1, 0, 0, 0, -1}));
  CHECK(cc.lines == std::vector<ProjectiveLine>{ln(f31, {0, 0, 1})});
  CHECK(witness_covers(cl, cc));

  const auto tet = build_tetrahedron(5, f31, 1, 0);
  const auto ct = classify(tet);
  CHECK(ct.verdict == Verdict::Tetrahedron);
  REQUIRE(ct.lines.size() == 4);
  CHECK(witness_covers(tet, ct));
  int concurrent = 0;
  for (std::size_t skip = 0; skip < 4; ++skip) {
    std::vector<ProjectiveLine> three;
    for (std::size_t i = 0; i < 4; ++i)
      if (i != skip) three.push_back(ct.lines[i]);
    concurrent += are_concurrent(three);
  }
  CHECK(concurrent == 1);

  const auto o18 = build_order18(make_prime_field(37));
  CHECK(classify(o18).verdict == Verdict::Unclassified);
  CHECK(to_string(Verdict::ConicLine) == "CONIC_LINE");
}

TEST_CASE("pencil and degenerate verdicts") {
  const auto f = make_prime_field(13);
  // Three concurrent lines through (0,0,1), one point per line per component.
  std::array<Component, 3> comps;
  for (std::int64_t i = 1; i <= 3; ++i) {
    comps[0].push_back(pt(f, {1, 0, i}));
    comps[1].push_back(pt(f, {0, 1, i}));
    comps[2].push_back(pt(f, {1, 1, i}));
  }
  const LabeledMultinet pencil(f, std::nullopt, comps);
  CHECK(classify(pencil).verdict == Verdict::Pencil);

  std::array<Component, 3> flat;
  for (std::int64_t i = 0; i < 3; ++i) {
    flat[0].push_back(pt(f, {i, 1, 0}));
    flat[1].push_back(pt(f, {i + 3, 1, 0}));
    flat[2].push_back(pt(f, {i + 6, 1, 0}));
  }
  CHECK(classify(LabeledMultinet(f, std::nullopt, flat)).verdict == Verdict::ContainedInLine);

  CHECK(classify(build_conic_line(1, 0, make_prime_field(7))).verdict == Verdict::Unclassified);
}

TEST_CASE("algebraicity") {
  const auto tri = build_triangle(3, make_prime_field(19));
  const auto c = is_algebraic(tri);
  REQUIRE(c.has_value());
  CHECK(c->coefficients == test::vec(make_prime_field(19), {0, 0, 0, 0, 1, 0, 0, 0, 0, 0}));
  const auto f31 = make_prime_field(31);
  const auto cl = is_algebraic(build_conic_line(5, 0, f31));
  REQUIRE(cl.has_value());
  for (const auto& p : build_conic_line(5, 0, f31).all_points()) CHECK(evaluate_curve(*cl, p).is_zero());
  CHECK_FALSE(is_algebraic(build_tetrahedron(5, f31, 2, 4)).has_value());
  CHECK_FALSE(is_algebraic(build_order18(make_prime_field(37))).has_value());
}

TEST_CASE("projective invariance") {
  const auto f = make_prime_field(31);
  const auto m = build_conic_line(5, 1, f);
  const Matrix a = Matrix::from_rows(f, {test::vec(f, {1, 2, 3}), test::vec(f, {0, 1, 4}), test::vec(f, {5, 0, 1})});
  REQUIRE_FALSE(determinant(a).is_zero());
  const auto moved = transform(m, a);
  CHECK(verify(moved).ok());
  CHECK(length_spectrum(moved) == length_spectrum(m));
  CHECK(classify(moved).verdict == Verdict::ConicLine);
  CHECK(partial_latin_square(moved) == partial_latin_square(m));
}
