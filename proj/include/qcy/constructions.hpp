#pragma once

// Realization machinery: finite-group character data, McKay incidence
// matrices, the winding permutation induced by a homological determinant,
// skew-group type assembly with component selection, Ore-extension type
// arithmetic, quiver mutation with potential transport, and Markov triples.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qcy/cyclotomic_field.hpp"
#include "qcy/path_algebra.hpp"
#include "qcy/quiver.hpp"
#include "qcy/search.hpp"

namespace qcy {

// A finite group together with its full character table over exact
// cyclotomic values. Element 0 is always the identity. element_words gives
// one expression of each element as a product of entries of `generators`
// (positions into that vector), used to extend generator-level data, such
// as homological determinant scalars, to the whole group.
struct GroupData {
  std::string name;
  int exponent = 1;
  std::vector<std::string> element_names;
  std::vector<std::vector<int>> mul;  // mul[i][j] = index of g_i * g_j
  std::vector<int> inverse;
  std::vector<int> generators;                  // element indices
  std::vector<std::vector<int>> element_words;  // indices into `generators`
  std::vector<std::vector<CycQ>> characters;    // characters[k][g]
  std::vector<std::string> character_names;
  std::map<std::string, int> character_lookup;  // name -> row index

  int order() const { return static_cast<int>(mul.size()); }
  int identity() const { return 0; }
  std::vector<int> degrees() const;

  // checks the multiplication table is a group, words reproduce elements,
  // characters are orthonormal under (1/|G|) sum chi(g) chi'(g^-1), and
  // the squared degrees sum to |G|
  void validate() const;

  static const GroupData& z2();
  static const GroupData& z3();
  static const GroupData& s3();
  // order 72: (Z6 x Z6) semidirect Z2, generators sigma, tau, lambda with
  // lambda central and tau sigma tau = lambda^-1 sigma^-1
  static const GroupData& z6z6_semidirect();
};

// load a custom group from a JSON file holding the multiplication table and
// character table; see docs in textio.cpp for the accepted value encodings
GroupData group_from_json_file(const std::string& path);

// A representation given as a multiset of irreducible constituents,
// 1-based into GroupData::characters.
struct Representation {
  std::vector<int> parts;
};

std::vector<CycQ> character_of(const GroupData& g, const Representation& rho);

// multiplicative extension of generator-level scalars along element_words
std::vector<CycQ> character_from_generator_values(const GroupData& g,
                                                  const std::vector<CycQ>& on_generators);

// M[i][j] = multiplicity of chi_i in rho tensor chi_j, exact. Throws if any
// inner product fails to be a nonnegative rational integer or if the result
// is not a normal matrix.
IMat mckay_matrix(const GroupData& g, const Representation& rho);
IMat mckay_matrix(const GroupData& g, const std::vector<CycQ>& rho_character);

// The permutation induced on the irreducibles by tensoring with the inverse
// of a degree-1 character: row i carries a 1 in column j when
// chi_j = chi_i tensor hdet^-1. Throws when hdet is not multiplicative or
// some image character is missing from the table.
IMat winding_vertex_permutation(const GroupData& g, const std::vector<CycQ>& hdet);

// Assembles the type (M, P, d) of a skew group algebra: M the McKay matrix
// of rho, P the winding permutation of the hdet character generated by the
// given scalars. component_of selects the connected component containing
// that character index (vertex order: breadth-first from the seed); it is
// required when the McKay quiver is disconnected and must be preserved by
// the winding permutation.
CYType skew_group_type(const GroupData& g, const Representation& rho,
                       const std::vector<CycQ>& hdet_on_generators, int d,
                       std::optional<int> component_of = std::nullopt);
CYType skew_group_type(const GroupData& g, const std::vector<CycQ>& rho_character,
                       const std::vector<CycQ>& hdet_on_generators, int d,
                       std::optional<int> component_of = std::nullopt);

// Type arithmetic for a graded Ore extension B[t; sigma] over a base of
// type (M_base, P_nakayama, 2) whose automorphism permutes vertices by
// P_sigma: the result is (M_base + P_sigma^-1, P_nakayama * P_sigma^-1, 3).
// Both permutations must commute with M_base.
CYType ore_type(const IMat& m_base, const IMat& p_nakayama, const IMat& p_sigma,
                int d_base = 2);

enum class ArrowOrigin { kept, composite, reversed };

struct MutatedArrow {
  ArrowOrigin origin = ArrowOrigin::kept;
  // kept/reversed: the source arrow in the input quiver;
  // composite: parent_a runs into the mutation vertex, parent_b out of it
  int parent_a = -1;
  int parent_b = -1;
};

struct MutationResult {
  Quiver quiver;
  std::vector<MutatedArrow> arrows;  // indexed by new arrow id
  // cancelled oriented 2-cycles; such a pair is always one composite against
  // one kept arrow, recorded as {composite parent_a, composite parent_b,
  // kept arrow id in the input quiver}
  std::vector<std::array<int, 3>> removed_two_cycles;
  std::optional<PathElement<Fp>> potential;
};

// Mutation at a vertex of a quiver with no loops and no oriented 2-cycles:
// adjoin composites [ab] for every path a then b through the vertex, reverse
// the incident arrows, then cancel one maximal disjoint family of oriented
// 2-cycles chosen greedily in arrow-id order. A supplied degree-3 potential
// is transported: composite substitution on terms through the vertex,
// augmentation by [ab] b* a* over all composites, then removal of every term
// meeting a cancelled arrow. Throws if the result fails to be homogeneous of
// degree 3 again.
MutationResult mutate(const Quiver& q, int vertex,
                      const std::optional<PathElement<Fp>>& potential = std::nullopt);

// closure of (3,3,3) under the coordinate moves (a,b,c) -> (a,b,ab-c) up to
// the given depth; triples stored sorted ascending
std::set<std::array<std::int64_t, 3>> markov_tree(int depth);

// One classified row of the built-in skew-group catalogs: the acting group,
// the defining representation (as irreducible constituents and as explicit
// generator matrices), the superpotential of the base algebra, the
// homological determinant scalars, and the expected resulting type.
struct SkewGroupRow {
  std::string label;
  const GroupData* group = nullptr;
  Representation rho;
  // generator_matrices[k] is the image of generators[k], square of size
  // dim(rho); row i gives the image of x_i as sum_j entry[i][j] * x_j
  std::vector<std::vector<std::vector<CycQ>>> generator_matrices;
  PathElement<CycQ> omega;  // on the one-vertex quiver with dim(rho) loops
  std::vector<CycQ> hdet_on_generators;
  IMat expected_m;
  IMat expected_p;
  int d = 3;
};

const std::vector<SkewGroupRow>& builtin_skew_rows();

// every known realization keyed by catalog_key of the canonical type:
// skew-group rows, the order-72 component constructions, Ore extensions,
// mutation-generated Markov instances, and the three starred survivors
RealizationCatalog builtin_realization_catalog();

}  // namespace qcy
