#pragma once

// The classification pipeline: diagonal profiles with exact gamma_max bounds,
// bounded candidate enumeration per permutation class, the determinant gate,
// and the full filter cascade producing classification records.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcy/growth.hpp"
#include "qcy/matrix_poly.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

struct DiagonalProfile {
  std::array<std::int64_t, 3> diag;  // sorted nonincreasing
  std::int64_t lambda = 0;
  std::int64_t beta = 0;
  std::optional<std::int64_t> gamma_max;  // nullopt when infeasible
};

// Exact maximum of gamma = beta - 2*lambda - 3(s-4) - sum_{i<j} k_i k_j over
// k in [-2,2]^s with sum k_i = lambda - (6-s). The minimum of sum k_i k_j is
// attained with all but at most one coordinate at +-2 (vertex enumeration).
// nullopt when |lambda - (6-s)| > 2s (infeasible).
std::optional<std::int64_t> gamma_max(std::int64_t u, std::int64_t v, std::int64_t w, int s);

DiagonalProfile diagonal_profile(std::int64_t u, std::int64_t v, std::int64_t w, int s);

// Every type (M, P, s) up to canonical form with: MP = PM (applied
// structurally per permutation class), diagonal <= loop_bound(s) at mu-fixed
// vertices, entries <= max_entry, connected quiver, and (P = I, m = 3 only)
// sum of opposite-entry products bounded by gamma_max of the diagonal.
std::vector<CYType> enumerate_candidates(int m, int s, const IMat& P, int max_entry);

struct GateReport {
  bool cyclotomic = false;
  CyclotomicFactorization factorization;
  int mult1 = 0;
  int m_d = 0;
  int m_a = 0;
  std::optional<int> gk;
  Poly<BigInt> det;
  bool pass_gate_only = false;  // cyclotomic && mult1 >= 3
  bool pass_full = false;       // pass_gate_only && gk == 3
};

// need_gk = false skips the adjugate computation (gate-only searches)
GateReport determinant_gate(const CYType& t, bool need_gk = true);

struct Verdict {
  std::string filter;
  FilterStatus status = FilterStatus::pass;
  std::string detail;
};

struct Realization {
  std::string tag;  // mckay | ore | mutation | starred
  std::string via;  // human-readable provenance within the catalog
};

// canonical_key + "#d" -> realization
using RealizationCatalog = std::map<std::string, Realization>;

std::string catalog_key(const CanonicalForm& c, int d);

struct ClassificationRecord {
  CanonicalForm canon;
  int d = 3;
  std::vector<Verdict> verdicts;
  bool survivor = false;
  std::vector<std::string> family_tags;
  std::string realization = "unknown";
  std::string realization_via;
  GateReport gate;
  std::optional<SeriesFailure> nonneg_failure;

  CYType type() const { return make_type(canon.M, canon.P, d); }
};

struct ClassifyOptions {
  bool gate_only = false;
  int truncation = 30;
  bool cross_check_cyclotomic = false;
  int jobs = 1;
  const RealizationCatalog* catalog = nullptr;
};

// Cascade order: determinant gate, then (gate passers only) nonnegativity,
// normal-spectral, loop bound, partition, forbidden block; every post-gate
// filter is evaluated and recorded, no short-circuit. Output sorted by
// canonical key.
std::vector<ClassificationRecord> classify(int m, int s, const IMat& P, int max_entry,
                                           const ClassifyOptions& opts = {});

// runs the cascade on one explicit type (no enumeration bounds)
ClassificationRecord check_type(const CYType& t, const ClassifyOptions& opts = {});

bool markov_check(std::int64_t a, std::int64_t b, std::int64_t c);

// recognizes the Markov shape (0 a 0/0 0 b/c 0 0) up to relabeling;
// returns the triple when matched
std::optional<std::array<std::int64_t, 3>> markov_shape(const CYType& t);

}  // namespace qcy
