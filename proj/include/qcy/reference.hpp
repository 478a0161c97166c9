#pragma once

// Frozen expected outcomes of the classification: the final type lists per
// vertex count and permutation class, the gate-only long list, the gamma
// bound tables, the McKay catalog rows, and the per-matrix elimination
// reasons. The repro command and the acceptance suite validate the engine
// against these.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qcy/eigen_support.hpp"

namespace qcy::reference {

struct TypeEntry {
  IMat M;
  IMat P;
  int d = 3;
  bool starred = false;  // survivor with no known realization
};

// two vertices, both permutation classes, both degrees
const std::vector<TypeEntry>& two_vertex_types();
// three vertices, P a 3-cycle
const std::vector<TypeEntry>& three_vertex_cycle_types();
// three vertices, P a transposition
const std::vector<TypeEntry>& three_vertex_swap_types();
// three vertices, P = I; Markov instances included up to the entry bound
std::vector<TypeEntry> three_vertex_fixed_types(std::int64_t max_entry);

// all determinant-gate survivors for three vertices and P = I, families
// instantiated up to the entry bound
std::vector<TypeEntry> fixed_point_long_list(std::int64_t max_entry);

// sorted Markov triples with all entries within the bound
std::vector<std::array<std::int64_t, 3>> markov_triples_within(std::int64_t max_entry);

struct GammaRow {
  std::array<std::int64_t, 3> diag;
  std::int64_t lambda = 0;
  std::int64_t beta = 0;
  std::int64_t gamma_max = 0;
};

const std::vector<GammaRow>& gamma_rows_d3();
const std::vector<GammaRow>& gamma_rows_d4();

struct MckayRow {
  std::string group;  // GroupData name: Z2, Z3, S3
  std::vector<int> parts;
  IMat M;
};

const std::vector<MckayRow>& mckay_rows();

// long-list entries removed by the cascade, tagged with the filter that
// rejects them; a matrix may appear once per failing filter
struct EliminationEntry {
  IMat M;
  int d = 3;
  std::string filter;
};

const std::vector<EliminationEntry>& fixed_point_eliminations();

}  // namespace qcy::reference
