#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "helpers.hpp"
#include "qcy/constructions.hpp"
#include "qcy/reference.hpp"

using namespace qcy;
using testutil::cycle123;
using testutil::idp;
using testutil::im;
using testutil::swap23;

namespace {

const GroupData& group_by_name(const std::string& name) {
  if (name == "Z2") return GroupData::z2();
  if (name == "Z3") return GroupData::z3();
  if (name == "S3") return GroupData::s3();
  throw std::invalid_argument("unknown group in fixture: " + name);
}

Quiver loops(int n) {
  IMat m = IMat::Zero(1, 1);
  m(0, 0) = n;
  return Quiver(m);
}

// determinant-shaped degree-3 potential on the symmetric cycle quiver
PathElement<Fp> markov_eps_potential() {
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
  return w;
}

}  // namespace

TEST_CASE("built-in groups are valid and have the advertised shapes") {
  for (const GroupData* g :
       {&GroupData::z2(), &GroupData::z3(), &GroupData::s3(), &GroupData::z6z6_semidirect()}) {
    CHECK_NOTHROW(g->validate());
    CHECK(g->identity() == 0);
    std::int64_t sq = 0;
    for (int d : g->degrees()) sq += static_cast<std::int64_t>(d) * d;
    CHECK(sq == g->order());
    for (int e = 0; e < g->order(); ++e) CHECK(g->mul[e][g->inverse[e]] == 0);
  }
  CHECK(GroupData::z2().order() == 2);
  CHECK(GroupData::z3().order() == 3);
  CHECK(GroupData::s3().order() == 6);
  CHECK(GroupData::z6z6_semidirect().order() == 72);
  // vertex 1 is the two-dimensional irreducible, then sign, then trivial
  CHECK(GroupData::s3().degrees() == std::vector<int>{2, 1, 1});
}

TEST_CASE("generator scalars extend to multiplicative characters") {
  const GroupData& g = GroupData::z3();
  auto chi = character_from_generator_values(g, {CycQ::zeta(3, 2)});
  REQUIRE(static_cast<int>(chi.size()) == g.order());
  CHECK(chi[0] == cyc(1));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) CHECK(chi[g.mul[a][b]] == chi[a] * chi[b]);
}

TEST_CASE("small McKay matrices by hand") {
  const GroupData& z2 = GroupData::z2();
  // triv + sign tensors every character into the full pair
  CHECK(mat_eq(mckay_matrix(z2, Representation{{1, 2}}), im({{1, 1}, {1, 1}})));
  // twice the sign character swaps the two vertices with multiplicity 2
  CHECK(mat_eq(mckay_matrix(z2, Representation{{2, 2}}), im({{0, 2}, {2, 0}})));
  // a non-character forces a fractional multiplicity
  CHECK_THROWS_AS(mckay_matrix(z2, std::vector<CycQ>{cyc(1), cyc(0)}), std::invalid_argument);
}

TEST_CASE("catalog of McKay incidence rows recomputes") {
  const auto& rows = reference::mckay_rows();
  REQUIRE(rows.size() == 33);
  for (const auto& row : rows) {
    const GroupData& g = group_by_name(row.group);
    IMat M = mckay_matrix(g, Representation{row.parts});
    CHECK(mat_eq(M, row.M));
    // tensoring is compatible with the contragredient pairing
    CHECK(mat_eq(IMat(M * M.transpose()), IMat(M.transpose() * M)));
  }
}

TEST_CASE("winding permutation of a degree-one character") {
  const GroupData& z2 = GroupData::z2();
  auto sign = character_from_generator_values(z2, {cyc(-1)});
  CHECK(mat_eq(winding_vertex_permutation(z2, sign), im({{0, 1}, {1, 0}})));
  auto triv = character_from_generator_values(z2, {cyc(1)});
  CHECK(mat_eq(winding_vertex_permutation(z2, triv), idp(2)));

  const GroupData& z3 = GroupData::z3();
  auto hdet = character_from_generator_values(z3, {CycQ::zeta(3, 2)});
  CHECK(mat_eq(winding_vertex_permutation(z3, hdet), cycle123()));

  // value 2 on the generator is not multiplicative into the table
  CHECK_THROWS_AS(winding_vertex_permutation(z2, std::vector<CycQ>{cyc(1), cyc(2)}),
                  std::invalid_argument);
}

TEST_CASE("every built-in skew row reassembles to its recorded type") {
  const auto& rows = builtin_skew_rows();
  REQUIRE(rows.size() == 26);
  for (const auto& row : rows) {
    CAPTURE(row.label);
    CYType t = skew_group_type(*row.group, row.rho, row.hdet_on_generators, row.d);
    CHECK(mat_eq(t.quiver.incidence(), row.expected_m));
    CHECK(mat_eq(t.P, row.expected_p));
    CHECK(t.d == row.d);
  }
}

TEST_CASE("recorded homological determinants match the generator action") {
  for (const auto& row : builtin_skew_rows()) {
    CAPTURE(row.label);
    REQUIRE(row.generator_matrices.size() == row.hdet_on_generators.size());
    int dim = static_cast<int>(row.generator_matrices.front().size());
    Quiver q = loops(dim);
    CHECK(row.omega.homogeneous_degree() == std::optional<int>(row.d));
    for (std::size_t k = 0; k < row.generator_matrices.size(); ++k) {
      auto sigma = ArrowMap<CycQ>::on_loops(row.generator_matrices[k]);
      auto lambda = hdet_of(sigma, row.omega, q);
      REQUIRE(lambda.has_value());
      CHECK(*lambda == row.hdet_on_generators[k]);
    }
  }
}

TEST_CASE("Ore extension type arithmetic") {
  IMat m1 = im({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}});
  CYType a = ore_type(m1, idp(3), idp(3));
  CHECK(mat_eq(a.quiver.incidence(), im({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}})));
  CHECK(mat_eq(a.P, idp(3)));
  CHECK(a.d == 3);

  CYType b = ore_type(m1, idp(3), swap23());
  CHECK(mat_eq(b.quiver.incidence(), im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})));
  CHECK(mat_eq(b.P, swap23()));

  CYType c = ore_type(im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), idp(3), swap23());
  CHECK(mat_eq(c.quiver.incidence(), im({{1, 1, 1}, {1, 0, 2}, {1, 2, 0}})));
  CHECK(mat_eq(c.P, swap23()));

  CHECK_THROWS_AS(ore_type(m1, idp(3), idp(3), 3), std::invalid_argument);
  CHECK_THROWS_AS(ore_type(m1, idp(3), cycle123()), std::invalid_argument);
}

TEST_CASE("mutation of the symmetric cycle quiver") {
  Quiver q(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}));
  MutationResult res = mutate(q, 1, markov_eps_potential());

  CHECK(mat_eq(res.quiver.incidence(), im({{0, 0, 6}, {3, 0, 0}, {0, 3, 0}})));
  REQUIRE(res.arrows.size() == 12);
  for (int k = 0; k < 6; ++k) {
    CHECK(res.arrows[k].origin == ArrowOrigin::composite);
    CHECK(res.arrows[k].parent_a == 1 + k / 3);
    CHECK(res.arrows[k].parent_b == 3 + k % 3);
  }
  for (int k = 6; k < 9; ++k) {
    CHECK(res.arrows[k].origin == ArrowOrigin::reversed);
    CHECK(res.arrows[k].parent_a == k - 6);
  }
  for (int k = 9; k < 12; ++k) {
    CHECK(res.arrows[k].origin == ArrowOrigin::reversed);
    CHECK(res.arrows[k].parent_a == k - 6);
  }
  REQUIRE(res.removed_two_cycles.size() == 3);
  CHECK(res.removed_two_cycles[0] == std::array<int, 3>{0, 3, 6});
  CHECK(res.removed_two_cycles[1] == std::array<int, 3>{0, 4, 7});
  CHECK(res.removed_two_cycles[2] == std::array<int, 3>{0, 5, 8});

  REQUIRE(res.potential.has_value());
  CHECK(res.potential->term_count() == 18);
  CHECK(res.potential->homogeneous_degree() == std::optional<int>(3));
  CHECK(is_twisted_superpotential(*res.potential, ArrowMap<Fp>::identity(res.quiver), res.quiver));

  CYType mt = make_type(res.quiver.incidence(), idp(3), 3);
  auto shape = markov_shape(mt);
  REQUIRE(shape.has_value());
  CHECK(*shape == std::array<std::int64_t, 3>{3, 3, 6});

  // mutating again at the same vertex restores the incidence matrix
  MutationResult back = mutate(res.quiver, 1);
  CHECK(mat_eq(back.quiver.incidence(), q.incidence()));

  CHECK_THROWS_AS(mutate(q, 3), std::invalid_argument);
  CHECK_THROWS_AS(mutate(Quiver(im({{1}})), 0), std::invalid_argument);
  CHECK_THROWS_AS(mutate(Quiver(im({{0, 1}, {1, 0}})), 0), std::invalid_argument);
  PathElement<Fp> flat = PathElement<Fp>::term(Path{0, {0, 3}}, Fp(1));
  CHECK_THROWS_AS(mutate(q, 1, flat), std::invalid_argument);
}

TEST_CASE("the Markov move closure") {
  using T3 = std::array<std::int64_t, 3>;
  CHECK(markov_tree(0) == std::set<T3>{{3, 3, 3}});
  CHECK(markov_tree(1) == std::set<T3>{{3, 3, 3}, {3, 3, 6}});
  CHECK(markov_tree(2) == std::set<T3>{{3, 3, 3}, {3, 3, 6}, {3, 6, 15}});
  std::set<T3> depth4 = {{3, 3, 3},    {3, 3, 6},    {3, 6, 15},
                         {3, 15, 39},  {3, 39, 102}, {6, 15, 87},
                         {6, 87, 507}, {15, 39, 582}, {15, 87, 1299}};
  CHECK(markov_tree(4) == depth4);
  for (const auto& t : markov_tree(6)) CHECK(markov_check(t[0], t[1], t[2]));
}

TEST_CASE("realization catalog covers the known constructions") {
  RealizationCatalog cat = builtin_realization_catalog();
  auto tag_of = [&](const IMat& M, const IMat& P, int d) -> std::string {
    auto it = cat.find(catalog_key(canonicalize(make_type(M, P, d)), d));
    return it == cat.end() ? std::string("missing") : it->second.tag;
  };
  // skew-group rows win over mutation entries on the same type
  CHECK(tag_of(im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}), idp(3), 3) == "mckay");
  CHECK(tag_of(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), idp(3), 3) == "mckay");
  CHECK(tag_of(im({{0, 3, 0}, {0, 0, 6}, {15, 0, 0}}), idp(3), 3) == "mutation");
  CHECK(tag_of(im({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}}), swap23(), 3) == "ore");
  CHECK(tag_of(im({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}), idp(3), 4) == "mckay");
  CHECK(tag_of(im({{1, 1, 0}, {0, 1, 1}, {2, 0, 1}}), idp(3), 4) == "starred");
  CHECK(tag_of(im({{9, 9, 9}, {9, 9, 9}, {9, 9, 9}}), idp(3), 3) == "missing");
}

TEST_CASE("groups load from JSON") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "qcy_test_group_z2.json";
  {
    std::ofstream out(p);
    out << R"({"name": "customZ2", "mul": [[0, 1], [1, 0]],)"
        << R"( "characters": [[1, 1], [1, -1]]})";
  }
  GroupData g = group_from_json_file(p.string());
  CHECK(g.name == "customZ2");
  CHECK(g.order() == 2);
  CHECK(g.exponent == 2);
  CHECK(mat_eq(mckay_matrix(g, Representation{{1, 2}}), im({{1, 1}, {1, 1}})));
  fs::remove(p);
  CHECK_THROWS_AS(group_from_json_file((fs::temp_directory_path() / "qcy_no_such.json").string()),
                  std::invalid_argument);
}
