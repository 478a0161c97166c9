#include <doctest.h>

#include "helpers.hpp"
#include "qcy/growth.hpp"

using namespace qcy;
using testutil::idp;
using testutil::im;
using testutil::swap23;

TEST_CASE("gk dimension of the survivors is three") {
  for (auto M : {im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}),
                 im({{0, 1, 1}, {1, 0, 1}, {1, 1, 2}})}) {
    GrowthReport g = gk_dimension(make_type(M, idp(3), 3));
    CHECK(g.roots_on_unit_circle);
    REQUIRE(g.gk.has_value());
    CHECK(*g.gk == 3);
    CHECK(g.m_d - g.m_a == 3);
  }
  GrowthReport one = gk_dimension(make_type(im({{2}}), idp(1), 4));
  REQUIRE(one.gk.has_value());
  CHECK(*one.gk == 3);
}

TEST_CASE("gk dimension five fixture") {
  GrowthReport g = gk_dimension(make_type(im({{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}), idp(3), 3));
  CHECK(g.det.to_string() == "1 - 2*t - t^2 + 3*t^3 + t^4 - t^5 - 3*t^6 + t^7 + 2*t^8 - t^9");
  CHECK(g.roots_on_unit_circle);
  REQUIRE(g.gk.has_value());
  CHECK(*g.gk == 5);
  CHECK(g.m_d == 5);
  CHECK(g.m_a == 0);
  REQUIRE(g.factorization.is_product);
  CHECK(g.factorization.factors ==
        std::vector<std::pair<int, int>>{{1, 5}, {2, 2}, {3, 1}});
}

TEST_CASE("non cyclotomic determinant reports unbounded growth") {
  GrowthReport g = gk_dimension(make_type(im({{3}}), idp(1), 4));
  CHECK(!g.roots_on_unit_circle);
  CHECK(!g.gk.has_value());
  CHECK(!g.factorization.is_product);
}

TEST_CASE("spectral filter accepts all survivors and the symmetric edge case") {
  CHECK(normal_spectral_filter(make_type(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), idp(3), 3)).status ==
        FilterStatus::pass);
  CHECK(normal_spectral_filter(make_type(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}), idp(3), 3)).status ==
        FilterStatus::pass);
  // eigenvalue -1 with multiplicity: the repeated-root boundary must pass
  CHECK(normal_spectral_filter(make_type(im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), idp(3), 4)).status ==
        FilterStatus::pass);
  CHECK(normal_spectral_filter(make_type(im({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}), idp(3), 4)).status ==
        FilterStatus::pass);
}

TEST_CASE("spectral filter rejects off-radius and off-interval matrices") {
  // symmetric, eigenvalues {4, 1, 1}: radius exceeds 3
  CHECK(normal_spectral_filter(make_type(im({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}), idp(3), 3)).status ==
        FilterStatus::fail);
  // symmetric with roots both above 3 and below -1
  SpectralVerdict v = normal_spectral_filter(make_type(im({{1, 2, 0}, {2, 1, 1}, {0, 1, 1}}), idp(3), 3));
  CHECK(v.status == FilterStatus::fail);
  CHECK(!v.detail.empty());
  // radius 2 while degree 3 demands a root at 3
  CHECK(normal_spectral_filter(make_type(im({{0, 2}, {2, 0}}), idp(2), 3)).status == FilterStatus::fail);
  // the same matrix at d = 4 has its radius exactly at 6 - d = 2
  CHECK(normal_spectral_filter(make_type(im({{0, 2}, {2, 0}}), idp(2), 4)).status == FilterStatus::pass);
}

TEST_CASE("spectral filter skips non normal matrices") {
  CHECK(normal_spectral_filter(make_type(im({{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}), idp(3), 3)).status ==
        FilterStatus::pass);  // circulant, normal
  CHECK(normal_spectral_filter(make_type(im({{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}), idp(3), 3)).status ==
        FilterStatus::not_applicable);
}

TEST_CASE("loop bound by degree") {
  CHECK(loop_bound(3) == 3);
  CHECK(loop_bound(4) == 2);
  CHECK(loop_bound(5) == 2);
  CHECK(loop_bound(9) == 1);
}

TEST_CASE("loop bound filter flags the offending vertex") {
  LoopBoundVerdict v = loop_bound_filter(make_type(im({{1, 1}, {1, 3}}), idp(2), 4));
  CHECK(v.status == FilterStatus::fail);
  CHECK(v.vertex == 1);
  CHECK(loop_bound_filter(make_type(im({{3, 1}, {1, 0}}), idp(2), 3)).status == FilterStatus::pass);
  // swapped vertices are not mu-fixed, so their loops are exempt
  CHECK(loop_bound_filter(make_type(im({{0, 1, 1}, {1, 3, 3}, {1, 3, 3}}), swap23(), 4)).status ==
        FilterStatus::pass);
}

TEST_CASE("loop recurrence decreases to its root") {
  LoopRecurrence lr = gs_loop_recurrence(3, 3, 60);
  CHECK(lr.hypothesis_met);
  REQUIRE(lr.r.size() >= 50);
  CHECK(lr.r[0] == Rational(3));
  CHECK(lr.r[1] == Rational(3));
  // r_3 = 3(1 - 1/9) = 8/3
  CHECK(lr.r[2] == Rational("8/3"));
  CHECK(lr.monotone_ok);
  CHECK(lr.above_root_ok);
  CHECK(!lr.division_by_zero_at.has_value());
  // x^3 - 3x^2 + 3 has no rational root; bisection still localizes it
  CHECK(!lr.u_exact.has_value());
  CHECK(lr.u_approx > 2.0);
  CHECK(lr.u_approx < 3.0);
}

TEST_CASE("loop recurrence hypothesis boundary") {
  // s^s <= (m(s-1))^(s-1): m = 2, s = 2 gives 4 <= 2, hypothesis fails
  CHECK(!gs_loop_recurrence(2, 2, 10).hypothesis_met);
  CHECK(gs_loop_recurrence(4, 2, 10).hypothesis_met);
  // u exact when the root is rational: x^2 - 4x + 4 = (x-2)^2
  LoopRecurrence lr = gs_loop_recurrence(4, 2, 30);
  REQUIRE(lr.u_exact.has_value());
  CHECK(*lr.u_exact == Rational(2));
  CHECK(lr.monotone_ok);
  CHECK(lr.above_root_ok);
}

TEST_CASE("subquiver bound series truncates at the first negative matrix") {
  CYType t = make_type(im({{1, 4, 0}, {1, 0, 2}, {5, 0, 0}}), idp(3), 3);
  GSBoundSeries full = gs_subquiver_bound(t, {0, 1, 2}, 8);
  CHECK(full.N == 8);
  REQUIRE(static_cast<int>(full.G.size()) == 9);
  // restricted to two vertices the series stays a genuine nonnegative bound
  GSBoundSeries sub = gs_subquiver_bound(t, {0, 1}, 8);
  for (const auto& g : sub.G)
    for (Eigen::Index i = 0; i < g.rows(); ++i)
      for (Eigen::Index j = 0; j < g.cols(); ++j) CHECK(g(i, j) >= BigInt(0));
}

TEST_CASE("forbidden block filter") {
  // (2 2 / 2 2) block between vertices 0 and 1
  BlockVerdict v = forbidden_block_filter(make_type(im({{2, 2, 0}, {2, 2, 0}, {0, 0, 1}}), idp(3), 3));
  CHECK(v.status == FilterStatus::fail);
  CHECK(v.v1 == 0);
  CHECK(v.v2 == 1);
  CHECK(!v.block.empty());
  // (3 3 / 3 3) also dies
  CHECK(forbidden_block_filter(make_type(im({{3, 3}, {3, 3}}), idp(2), 3)).status == FilterStatus::fail);
  // (2 1 / 1 2) is fine, and d = 4 is out of scope
  CHECK(forbidden_block_filter(make_type(im({{2, 1}, {1, 2}}), idp(2), 3)).status == FilterStatus::pass);
  CHECK(forbidden_block_filter(make_type(im({{2, 2}, {2, 2}}), idp(2), 4)).status ==
        FilterStatus::not_applicable);
}

TEST_CASE("sturm counts distinct real roots in half open intervals") {
  // (t-1)(t-2)(t-3)
  Poly<Rational> f;
  f.set_coeff(0, Rational(-6));
  f.set_coeff(1, Rational(11));
  f.set_coeff(2, Rational(-6));
  f.set_coeff(3, Rational(1));
  CHECK(sturm_count(f, Rational(0), Rational(3)) == 3);
  CHECK(sturm_count(f, Rational(1), Rational(3)) == 2);
  CHECK(sturm_count(f, Rational(0), Rational("5/2")) == 2);
  CHECK(sturm_count_above(f, Rational(0)) == 3);
  CHECK(sturm_count_above(f, Rational(2)) == 1);
  // repeated roots are counted once
  Poly<Rational> g;
  g.set_coeff(0, Rational(1));
  g.set_coeff(1, Rational(-2));
  g.set_coeff(2, Rational(1));
  CHECK(sturm_count(g, Rational(0), Rational(2)) == 1);
  CHECK(sturm_count_above(g, Rational(-5)) == 1);
}
