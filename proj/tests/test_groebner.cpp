#include <doctest.h>

#include "helpers.hpp"
#include "qcy/groebner.hpp"

using namespace qcy;
using testutil::idp;
using testutil::im;

namespace {

Path pth(std::initializer_list<int> arrows, int start = 0) {
  Path p;
  p.start = start;
  p.arrows = arrows;
  return p;
}

PathElement<Fp> binom(Path a, Path b) {
  PathElement<Fp> r;
  r.add(std::move(a), Fp(1));
  r.add(std::move(b), Fp(-1));
  return r;
}

// commutator relations of the polynomial ring on three loops
std::vector<PathElement<Fp>> poly3_relations() {
  return {binom(pth({1, 2}), pth({2, 1})), binom(pth({2, 0}), pth({0, 2})), binom(pth({0, 1}), pth({1, 0}))};
}

}  // namespace

TEST_CASE("commutative plane from one commutator") {
  Quiver q(im({{2}}));
  TruncatedGB<Fp> gb(q, MonomialOrder::standard(2), {binom(pth({0, 1}), pth({1, 0}))}, 8);
  // single rule x y -> y x; no overlaps survive
  REQUIRE(gb.rules().size() == 1);
  CHECK(gb.lead_words() == std::vector<Path>{pth({0, 1})});
  auto H = gb.hilbert(8);
  for (int n = 0; n <= 8; ++n) CHECK(H.at(n)(0, 0) == n + 1);
}

TEST_CASE("square-zero letters leave alternating words") {
  Quiver q(im({{2}}));
  std::vector<PathElement<Fp>> rels = {PathElement<Fp>::term(pth({0, 0}), Fp(1)),
                                       PathElement<Fp>::term(pth({1, 1}), Fp(1))};
  auto H = quotient_hilbert(q, rels, 7, MonomialOrder::standard(2));
  CHECK(H.at(0)(0, 0) == 1);
  for (int n = 1; n <= 7; ++n) CHECK(H.at(n)(0, 0) == 2);
}

TEST_CASE("polynomial ring in three variables via overlap completion") {
  Quiver q(im({{3}}));
  for (auto ord : {MonomialOrder::standard(3), MonomialOrder::with_priority({2, 1, 0})}) {
    auto H = quotient_hilbert(q, poly3_relations(), 7, ord);
    for (int n = 0; n <= 7; ++n) CHECK(H.at(n)(0, 0) == (n + 2) * (n + 1) / 2);
  }
}

TEST_CASE("reduction is idempotent and kills ideal members") {
  Quiver q(im({{3}}));
  TruncatedGB<Fp> gb(q, MonomialOrder::standard(3), poly3_relations(), 6);
  for (const auto& r : poly3_relations()) CHECK(gb.reduce(r).is_zero());
  PathElement<Fp> w;
  w.add(pth({2, 1, 0}), Fp(3));
  w.add(pth({0, 0}), Fp(5));
  auto once = gb.reduce(w);
  CHECK(gb.reduce(once) == once);
  // x z y reduces to the normal word with ascending ids from the right
  auto nf = gb.reduce(PathElement<Fp>::term(pth({0, 2, 1}), Fp(1)));
  REQUIRE(nf.term_count() == 1);
  CHECK(nf.terms().begin()->first == pth({2, 1, 0}));
}

TEST_CASE("two vertex fixture with a tailored elimination order") {
  // M = (1 4 / 1 0): loop 0 at vertex 1, arrows 1..4 to vertex 2, arrow 5 back
  Quiver q(im({{1, 4}, {1, 0}}));
  const Fp c[6] = {Fp(0), Fp(1), Fp(2), Fp(3), Fp(4), Fp(5)};

  PathElement<Fp> r1 = PathElement<Fp>::term(pth({0, 0}), c[1]);
  for (int k = 2; k <= 5; ++k) r1.add(pth({k - 1, 5}), c[k]);
  PathElement<Fp> r2 = PathElement<Fp>::term(pth({5, 0}, 1), Fp(1));
  PathElement<Fp> r3;
  for (int k = 2; k <= 5; ++k) r3.add(pth({0, k - 1}), c[k]);

  MonomialOrder ord = MonomialOrder::with_priority({1, 2, 3, 4, 5, 0});
  TruncatedGB<Fp> gb(q, ord, {r1, r2, r3}, 4);

  // completion adds the cube of the loop to the three input leads
  auto leads = gb.lead_words();
  REQUIRE(leads.size() == 4);
  CHECK(leads[0] == pth({0, 1}));
  CHECK(leads[1] == pth({1, 5}));
  CHECK(leads[2] == pth({5, 0}, 1));
  CHECK(leads[3] == pth({0, 0, 0}));

  // 29 free words of length 4 based at the first vertex; 12 survive, one more
  // than a degree-three growth profile would allow there
  auto H = gb.hilbert(4);
  CHECK(H.at(4)(0, 0) == 12);
  CHECK(H.at(1)(0, 0) == 1);
  CHECK(H.at(1)(0, 1) == 4);
  CHECK(H.at(2)(0, 0) == 4);
}

TEST_CASE("derivation quotient of the cycle quiver matches its predictive series") {
  // determinant-shaped potential on the (3,3,3) cycle quiver: x_i at 0->1,
  // y_j at 1->2, z_k at 2->0, signed over the alternating symbol
  Quiver q(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}));
  PathElement<Fp> w;
  int eps[3][3][3] = {};
  eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
  eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        if (eps[i][j][k] == 0) continue;
        Fp cf(eps[i][j][k]);
        w.add(Path{0, {i, 3 + j, 6 + k}}, cf);
        w.add(Path{1, {3 + j, 6 + k, i}}, cf);
        w.add(Path{2, {6 + k, i, 3 + j}}, cf);
      }
  CHECK(w.term_count() == 18);

  std::vector<PathElement<Fp>> rels;
  for (int a = 0; a < q.arrow_count(); ++a) rels.push_back(cyclic_derivative(w, a, q));

  auto H = quotient_hilbert(q, rels, 5, MonomialOrder::standard(q.arrow_count()));
  CYType t = make_type(q.incidence(), idp(3), 3);
  auto predicted = invert_series(build_p(t).convert<BigInt>(), 5);
  for (int n = 0; n <= 5; ++n)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(BigInt(H.at(n)(i, j)) == predicted.at(n)(i, j));
}

TEST_CASE("input validation") {
  Quiver q(im({{2}}));
  PathElement<Fp> mixed;
  mixed.add(pth({0, 1}), Fp(1));
  mixed.add(pth({0}), Fp(1));
  CHECK_THROWS_AS(TruncatedGB<Fp>(q, MonomialOrder::standard(2), {mixed}, 5), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedGB<Fp>(q, MonomialOrder::standard(2), {binom(pth({0, 1}), pth({1, 0}))}, 1),
                  std::invalid_argument);
  TruncatedGB<Fp> gb(q, MonomialOrder::standard(2), {binom(pth({0, 1}), pth({1, 0}))}, 3);
  CHECK_THROWS_AS(gb.hilbert(9), std::invalid_argument);
  CHECK_THROWS_AS(MonomialOrder::with_priority({0, 0, 1}), std::invalid_argument);
}
