#include <doctest.h>

#include "helpers.hpp"
#include "qcy/cyclotomic_field.hpp"
#include "qcy/path_algebra.hpp"

using namespace qcy;
using testutil::idp;
using testutil::im;

namespace {

// one vertex, three loops x = 0, y = 1, z = 2
Quiver trefoil() { return Quiver(im({{3}})); }

Path pth(std::initializer_list<int> arrows, int start = 0) {
  Path p;
  p.start = start;
  p.arrows = arrows;
  return p;
}

// x y z - x z y and cyclic rotations, the commutator superpotential
template <typename F>
PathElement<F> commutator_cubic() {
  PathElement<F> w;
  w.add(pth({0, 1, 2}), F(1));
  w.add(pth({1, 2, 0}), F(1));
  w.add(pth({2, 0, 1}), F(1));
  w.add(pth({0, 2, 1}), -F(1));
  w.add(pth({2, 1, 0}), -F(1));
  w.add(pth({1, 0, 2}), -F(1));
  return w;
}

// y y x x + x y y x + x x y y + y x x y on two loops x = 0, y = 1
template <typename F>
PathElement<F> symmetric_quartic() {
  PathElement<F> w;
  w.add(pth({1, 1, 0, 0}), F(1));
  w.add(pth({0, 1, 1, 0}), F(1));
  w.add(pth({0, 0, 1, 1}), F(1));
  w.add(pth({1, 0, 0, 1}), F(1));
  return w;
}

}  // namespace

TEST_CASE("path composition") {
  Quiver q(im({{0, 2, 0}, {0, 0, 1}, {1, 0, 0}}));
  // arrows: 0,1: v0->v1; 2: v1->v2; 3: v2->v0
  Path a = pth({0}, 0), b = pth({2}, 1), c = pth({3}, 2);
  CHECK(composable(a, b, q));
  CHECK(!composable(b, a, q));
  Path ab = concat(a, b, q);
  CHECK(ab == pth({0, 2}, 0));
  CHECK(ab.target(q) == 2);
  CHECK(concat(ab, c, q).target(q) == 0);
  CHECK(a.composable_in(q));
  Path broken = pth({2, 0}, 1);
  CHECK(!broken.composable_in(q));
  // trivial paths compose when endpoints agree
  Path e1 = pth({}, 1);
  CHECK(composable(a, e1, q));
  CHECK(concat(a, e1, q) == a);
  CHECK(!composable(e1, a, q));
  CHECK(!path_to_string(ab).empty());
}

TEST_CASE("path element arithmetic cancels exactly") {
  PathElement<Fp> w;
  w.add(pth({0, 1}), Fp(5));
  w.add(pth({0, 1}), Fp(-5));
  CHECK(w.is_zero());
  w.add(pth({0, 1}), Fp(2));
  w.add(pth({1, 0}), Fp(3));
  CHECK(w.term_count() == 2);
  REQUIRE(w.homogeneous_degree().has_value());
  CHECK(*w.homogeneous_degree() == 2);
  w.add(pth({0}), Fp(1));
  CHECK(!w.homogeneous_degree().has_value());
}

TEST_CASE("path element block data") {
  Quiver q(im({{0, 2, 0}, {0, 0, 1}, {1, 0, 0}}));
  PathElement<Fp> w;
  w.add(pth({0, 2}, 0), Fp(1));
  w.add(pth({1, 2}, 0), Fp(4));
  auto blk = w.block(q);
  REQUIRE(blk.has_value());
  CHECK(blk->first == 0);
  CHECK(blk->second == 2);
  w.add(pth({3}, 2), Fp(1));
  CHECK(!w.block(q).has_value());
}

TEST_CASE("product respects composability") {
  Quiver q = trefoil();
  PathElement<Fp> x = PathElement<Fp>::term(pth({0}), Fp(1));
  PathElement<Fp> y = PathElement<Fp>::term(pth({1}), Fp(1));
  PathElement<Fp> xy = mul(x, y, q);
  REQUIRE(xy.term_count() == 1);
  CHECK(xy.terms().begin()->first == pth({0, 1}));

  Quiver two(im({{0, 1}, {0, 0}}));
  PathElement<Fp> a = PathElement<Fp>::term(pth({0}, 0), Fp(1));
  CHECK(mul(a, a, two).is_zero());
}

TEST_CASE("cyclic derivative of the commutator superpotential") {
  Quiver q = trefoil();
  auto w = commutator_cubic<Fp>();
  PathElement<Fp> dx = cyclic_derivative(w, 0, q);
  PathElement<Fp> expect;
  expect.add(pth({1, 2}), Fp(1));
  expect.add(pth({2, 1}), Fp(-1));
  CHECK(dx == expect);
  // right derivative strips from the other side and agrees here
  CHECK(right_derivative(w, 0) == expect);
  // derivative by an absent arrow is zero
  PathElement<Fp> only_x = PathElement<Fp>::term(pth({0, 0, 0}), Fp(1));
  CHECK(cyclic_derivative(only_x, 1, q).is_zero());
}

TEST_CASE("rotation invariance of superpotentials") {
  Quiver q = trefoil();
  auto id = ArrowMap<Fp>::identity(q);
  CHECK(is_twisted_superpotential(commutator_cubic<Fp>(), id, q));
  Quiver two_loops(im({{2}}));
  auto id2 = ArrowMap<Fp>::identity(two_loops);
  CHECK(is_twisted_superpotential(symmetric_quartic<Fp>(), id2, two_loops));
  // x y alone is not rotation closed
  PathElement<Fp> open_term = PathElement<Fp>::term(pth({0, 1}), Fp(1));
  CHECK(!is_twisted_superpotential(open_term, id2, two_loops));
}

TEST_CASE("homological determinant of diagonal twists") {
  CycQ one(1);
  CycQ w3 = CycQ::zeta(3);
  CycQ w3sq = CycQ::zeta(3, 2);

  // x -> z x, y -> z^2 y on the symmetric quartic scales by z^6 = 1
  Quiver two_loops(im({{2}}));
  auto sigma = ArrowMap<CycQ>::on_loops({{w3, CycQ(0)}, {CycQ(0), w3sq}});
  auto hd = hdet_of(sigma, symmetric_quartic<CycQ>(), two_loops);
  REQUIRE(hd.has_value());
  CHECK(*hd == one);

  // z -> w^2 z on the commutator cubic scales every term once
  Quiver q = trefoil();
  auto tau = ArrowMap<CycQ>::on_loops(
      {{one, CycQ(0), CycQ(0)}, {CycQ(0), one, CycQ(0)}, {CycQ(0), CycQ(0), w3sq}});
  auto hd2 = hdet_of(tau, commutator_cubic<CycQ>(), q);
  REQUIRE(hd2.has_value());
  CHECK(*hd2 == w3sq);

  // swapping the two loops does not rescale x x y
  PathElement<CycQ> asym = PathElement<CycQ>::term(pth({0, 0, 1}), one);
  auto swp = ArrowMap<CycQ>::on_loops({{CycQ(0), one}, {one, CycQ(0)}});
  CHECK(!hdet_of(swp, asym, two_loops).has_value());
  CHECK(!hdet_of(sigma, PathElement<CycQ>(), two_loops).has_value());
}

TEST_CASE("span rank over the prime field") {
  PathElement<Fp> xy = PathElement<Fp>::term(pth({0, 1}), Fp(1));
  PathElement<Fp> yx = PathElement<Fp>::term(pth({1, 0}), Fp(1));
  CHECK(span_rank<Fp>({xy, yx, xy + yx}) == 2);
  CHECK(span_rank<Fp>({xy, Fp(7) * xy}) == 1);
  CHECK(span_rank<Fp>({PathElement<Fp>()}) == 0);
  CHECK(span_rank<Fp>({}) == 0);
}

TEST_CASE("rotation classes on the reference quivers") {
  auto ones = cycle_rotation_classes(Quiver(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})), 3);
  CHECK(ones.size() == 11);
  int singles = 0, triples = 0;
  std::size_t walks = 0;
  for (const auto& cls : ones) {
    walks += cls.size();
    if (cls.size() == 1) ++singles;
    if (cls.size() == 3) ++triples;
  }
  CHECK(singles == 3);
  CHECK(triples == 8);
  CHECK(walks == 27);

  auto markov = cycle_rotation_classes(Quiver(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}})), 3);
  CHECK(markov.size() == 27);
  for (const auto& cls : markov) CHECK(cls.size() == 3);
}

TEST_CASE("generic superpotentials are cyclic, homogeneous, and seeded") {
  Quiver q(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  auto w1 = generic_superpotential(q, 3, 12345);
  auto w2 = generic_superpotential(q, 3, 12345);
  auto w3 = generic_superpotential(q, 3, 54321);
  CHECK(w1 == w2);
  CHECK(w1 != w3);
  CHECK(w1.term_count() == 27);
  REQUIRE(w1.homogeneous_degree().has_value());
  CHECK(*w1.homogeneous_degree() == 3);
  CHECK(is_twisted_superpotential(w1, ArrowMap<Fp>::identity(q), q));
}

TEST_CASE("subquiver projection") {
  Quiver q(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  Subquiver sub = full_subquiver(q, {0, 1});
  CHECK(sub.quiver.vertex_count() == 2);
  CHECK(sub.quiver.arrow_count() == 4);
  for (int a = 0; a < sub.quiver.arrow_count(); ++a)
    CHECK(sub.arrow_from_parent[static_cast<std::size_t>(sub.arrow_to_parent[static_cast<std::size_t>(a)])] == a);

  auto w = generic_superpotential(q, 3, 99);
  auto proj = project_to_subquiver(sub, w);
  // exactly the closed 3-walks on two vertices survive
  std::size_t expect = enumerate_cycles(sub.quiver, 3).size();
  CHECK(proj.term_count() == expect);

  // the three-cycle potential dies entirely on any two vertices
  Quiver mk(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}));
  auto wm = generic_superpotential(mk, 3, 7);
  CHECK(project_to_subquiver(full_subquiver(mk, {0, 1}), wm).is_zero());

  CHECK_THROWS_AS(full_subquiver(q, {1, 0}), std::invalid_argument);
}

TEST_CASE("explicit superpotential series comparison on one vertex") {
  CYType t = make_type(im({{3}}), idp(1), 3);
  TrialResult good = superpotential_match(t, commutator_cubic<Fp>(), 6);
  CHECK(good.match);
  CHECK(!good.first_mismatch.has_value());

  // x^3 + y^3 + z^3 relations are too thin: the quotient overshoots at degree 3
  PathElement<Fp> cubes;
  cubes.add(pth({0, 0, 0}), Fp(1));
  cubes.add(pth({1, 1, 1}), Fp(1));
  cubes.add(pth({2, 2, 2}), Fp(1));
  TrialResult bad = superpotential_match(t, cubes, 6);
  CHECK(!bad.match);
  REQUIRE(bad.first_mismatch.has_value());
  CHECK(bad.first_mismatch->degree == 3);
  CHECK(bad.first_mismatch->predicted == 10);
  CHECK(bad.first_mismatch->actual == 12);
}

TEST_CASE("random superpotential trials against the predictive series") {
  SuperpotentialReport rep = superpotential_cy_test(make_type(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}), idp(3), 3),
                                                    3, 6, 2024);
  CHECK(rep.trials == 3);
  CHECK(rep.truncation == 6);
  REQUIRE(rep.results.size() == 3);
  CHECK(rep.match_count == 3);
  CHECK(rep.majority_match);

  SuperpotentialReport one = superpotential_cy_test(make_type(im({{3}}), idp(1), 3), 2, 6, 11);
  CHECK(one.match_count == 2);
}

TEST_CASE("subquiver series check clears the survivors") {
  CHECK(subquiver_series_check(make_type(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), idp(3), 3)).status ==
        FilterStatus::pass);
  CHECK(subquiver_series_check(make_type(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}), idp(3), 3)).status ==
        FilterStatus::pass);
  SubquiverSeriesVerdict v = subquiver_series_check(make_type(im({{1, 4, 0}, {1, 0, 2}, {5, 0, 0}}), idp(3), 3));
  CHECK(v.status == FilterStatus::fail);
  CHECK(v.detail.find("forces at least 12") != std::string::npos);
  // twisted or quartic types are out of scope for this argument
  CHECK(subquiver_series_check(make_type(im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), idp(3), 4)).status ==
        FilterStatus::not_applicable);
}
