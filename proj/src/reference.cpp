#include "qcy/reference.hpp"

#include <algorithm>
#include <set>

namespace qcy::reference {

namespace {

IMat m2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  IMat m(2, 2);
  m << a, b, c, d;
  return m;
}

IMat m3(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d, std::int64_t e,
        std::int64_t f, std::int64_t g, std::int64_t h, std::int64_t i) {
  IMat m(3, 3);
  m << a, b, c, d, e, f, g, h, i;
  return m;
}

const IMat kId2 = m2(1, 0, 0, 1);
const IMat kSwap2 = m2(0, 1, 1, 0);
const IMat kId3 = m3(1, 0, 0, 0, 1, 0, 0, 0, 1);
const IMat kCycle3 = m3(0, 1, 0, 0, 0, 1, 1, 0, 0);
const IMat kSwap23 = m3(1, 0, 0, 0, 0, 1, 0, 1, 0);

IMat markov_m(std::int64_t a, std::int64_t b, std::int64_t c) {
  return m3(0, a, 0, 0, 0, b, c, 0, 0);
}

}  // namespace

const std::vector<TypeEntry>& two_vertex_types() {
  static const std::vector<TypeEntry> v = {
      {m2(1, 2, 2, 1), kSwap2, 3, false},
      {m2(2, 1, 1, 2), kSwap2, 3, false},
      {m2(0, 3, 3, 0), kSwap2, 3, false},
      {m2(1, 1, 1, 1), kSwap2, 4, false},
      {m2(1, 2, 2, 1), kId2, 3, false},
      {m2(2, 1, 1, 2), kId2, 3, false},
      {m2(1, 1, 1, 1), kId2, 4, false},
      {m2(0, 2, 2, 0), kId2, 4, false},
  };
  return v;
}

const std::vector<TypeEntry>& three_vertex_cycle_types() {
  static const std::vector<TypeEntry> v = {
      {m3(2, 1, 0, 0, 2, 1, 1, 0, 2), kCycle3, 3, false},
      {m3(1, 0, 2, 2, 1, 0, 0, 2, 1), kCycle3, 3, false},
      {m3(0, 2, 1, 1, 0, 2, 2, 1, 0), kCycle3, 3, false},
      {m3(1, 1, 1, 1, 1, 1, 1, 1, 1), kCycle3, 3, false},
      {m3(0, 1, 1, 1, 0, 1, 1, 1, 0), kCycle3, 4, false},
      {m3(1, 1, 0, 0, 1, 1, 1, 0, 1), kCycle3, 4, false},
      {m3(1, 0, 1, 1, 1, 0, 0, 1, 1), kCycle3, 4, false},
      {m3(0, 2, 0, 0, 0, 2, 2, 0, 0), kCycle3, 4, false},
  };
  return v;
}

const std::vector<TypeEntry>& three_vertex_swap_types() {
  static const std::vector<TypeEntry> v = {
      {m3(2, 1, 1, 1, 1, 0, 1, 0, 1), kSwap23, 3, false},
      {m3(2, 1, 1, 1, 0, 1, 1, 1, 0), kSwap23, 3, false},
      {m3(1, 1, 1, 1, 0, 2, 1, 2, 0), kSwap23, 3, false},
      {m3(1, 1, 1, 1, 1, 1, 1, 1, 1), kSwap23, 3, false},
      {m3(1, 1, 1, 1, 0, 0, 1, 0, 0), kSwap23, 4, false},
      {m3(0, 1, 1, 1, 1, 0, 1, 0, 1), kSwap23, 4, true},
      {m3(0, 1, 1, 1, 0, 1, 1, 1, 0), kSwap23, 4, true},
  };
  return v;
}

std::vector<std::array<std::int64_t, 3>> markov_triples_within(std::int64_t max_entry) {
  std::set<std::array<std::int64_t, 3>> seen;
  std::vector<std::array<std::int64_t, 3>> out;
  if (max_entry < 3) return out;
  // breadth-first in the Markov tree; a triple within the box has its whole
  // ancestor chain within the box, so pruning out-of-box nodes is complete
  std::vector<std::array<std::int64_t, 3>> frontier = {{3, 3, 3}};
  seen.insert({3, 3, 3});
  while (!frontier.empty()) {
    std::vector<std::array<std::int64_t, 3>> next;
    for (const auto& t : frontier)
      for (std::size_t k = 0; k < 3; ++k) {
        std::array<std::int64_t, 3> u = t;
        u[k] = t[(k + 1) % 3] * t[(k + 2) % 3] - t[k];
        std::sort(u.begin(), u.end());
        if (u[2] > max_entry) continue;
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  out.assign(seen.begin(), seen.end());
  return out;
}

std::vector<TypeEntry> three_vertex_fixed_types(std::int64_t max_entry) {
  std::vector<TypeEntry> v = {
      {m3(2, 1, 1, 1, 0, 1, 1, 1, 0), kId3, 3, false},
      {m3(2, 1, 1, 1, 1, 0, 1, 0, 1), kId3, 3, false},
      {m3(1, 1, 1, 1, 1, 1, 1, 1, 1), kId3, 3, false},
      {m3(1, 1, 1, 1, 2, 0, 1, 0, 2), kId3, 3, false},
      {m3(1, 1, 0, 0, 1, 1, 1, 0, 1), kId3, 4, false},
      {m3(1, 1, 1, 1, 0, 0, 1, 0, 0), kId3, 4, false},
      {m3(0, 1, 1, 1, 0, 1, 1, 1, 0), kId3, 4, false},
      {m3(1, 0, 1, 0, 1, 1, 1, 1, 0), kId3, 4, false},
      {m3(1, 1, 0, 0, 1, 1, 2, 0, 1), kId3, 4, true},
  };
  for (const auto& t : markov_triples_within(max_entry))
    v.push_back({markov_m(t[0], t[1], t[2]), kId3, 3, false});
  return v;
}

std::vector<TypeEntry> fixed_point_long_list(std::int64_t max_entry) {
  std::vector<TypeEntry> v;
  auto add3 = [&](const IMat& M) { v.push_back({M, kId3, 3, false}); };
  auto add4 = [&](const IMat& M) { v.push_back({M, kId3, 4, false}); };

  // degree 3, concrete entries
  add3(m3(3, 0, 1, 1, 2, 0, 1, 1, 1));
  add3(m3(3, 1, 0, 1, 1, 2, 2, 0, 0));
  add3(m3(3, 1, 0, 1, 2, 1, 2, 0, 0));
  add3(m3(3, 0, 3, 2, 2, 0, 1, 1, 0));
  add3(m3(3, 0, 1, 0, 2, 2, 1, 1, 0));
  add3(m3(2, 1, 0, 1, 2, 1, 1, 0, 0));
  add3(m3(2, 0, 1, 0, 2, 1, 1, 1, 0));
  add3(m3(2, 0, 3, 10, 2, 0, 1, 4, 0));
  add3(m3(2, 0, 1, 0, 1, 1, 1, 1, 0));
  add3(m3(2, 1, 1, 1, 1, 0, 1, 0, 0));
  add3(m3(2, 1, 0, 1, 1, 1, 0, 1, 0));
  add3(m3(2, 1, 1, 1, 0, 0, 1, 0, 0));
  add3(m3(2, 3, 0, 1, 0, 2, 4, 0, 0));
  add3(m3(2, 1, 1, 1, 0, 1, 1, 1, 0));
  add3(m3(0, 1, 1, 1, 0, 1, 1, 1, 0));
  add3(m3(3, 1, 0, 1, 1, 3, 2, 1, 1));
  add3(m3(3, 2, 1, 0, 1, 3, 1, 1, 1));
  add3(m3(2, 2, 0, 1, 1, 1, 1, 0, 1));
  add3(m3(2, 0, 1, 0, 1, 1, 1, 1, 1));
  add3(m3(2, 1, 1, 1, 1, 0, 1, 0, 1));
  add3(m3(1, 0, 1, 0, 1, 1, 1, 1, 1));
  add3(m3(1, 1, 1, 1, 1, 1, 1, 1, 1));
  add3(m3(1, 0, 1, 0, 1, 1, 1, 1, 0));
  add3(m3(1, 1, 1, 1, 1, 0, 1, 0, 0));
  add3(m3(1, 1, 1, 1, 1, 1, 1, 1, 0));
  add3(m3(1, 0, 1, 1, 2, 1, 0, 1, 2));
  add3(m3(1, 1, 1, 1, 2, 0, 1, 0, 2));
  add3(m3(1, 1, 1, 1, 0, 0, 1, 0, 0));
  add3(m3(1, 1, 1, 1, 0, 1, 1, 1, 0));
  add3(m3(1, 4, 0, 1, 0, 2, 5, 0, 0));
  add3(m3(1, 2, 1, 1, 0, 2, 2, 0, 0));

  // degree 3, one-parameter families
  for (std::int64_t x = 1; x <= max_entry; ++x) {
    if (max_entry >= 3) add3(m3(3, x, 0, 0, 0, 2, x, 0, 0));
    for (std::int64_t a = 0; a <= 3 && a <= max_entry; ++a)
      add3(m3(a, x, 0, 0, 1, 2, x, 2, 1));
  }
  for (const auto& t : markov_triples_within(max_entry)) add3(markov_m(t[0], t[1], t[2]));

  // degree 4
  add4(m3(1, 1, 0, 0, 1, 1, 1, 0, 1));
  add4(m3(1, 1, 0, 0, 1, 1, 2, 0, 1));
  add4(m3(1, 0, 1, 0, 0, 1, 1, 1, 0));
  add4(m3(1, 1, 1, 1, 0, 0, 1, 0, 0));
  add4(m3(0, 0, 1, 0, 0, 1, 1, 1, 0));
  add4(m3(0, 1, 1, 1, 0, 1, 1, 1, 0));
  add4(m3(1, 0, 1, 0, 1, 1, 1, 1, 0));
  return v;
}

const std::vector<GammaRow>& gamma_rows_d3() {
  static const std::vector<GammaRow> v = {
      {{3, 3, 3}, 9, 27, 0}, {{3, 3, 2}, 8, 21, 0}, {{3, 2, 2}, 7, 16, 1},
      {{3, 3, 1}, 7, 15, 0}, {{2, 2, 2}, 6, 12, 3}, {{3, 2, 1}, 6, 11, 2},
      {{3, 3, 0}, 6, 9, 0},  {{2, 2, 1}, 5, 8, 5},  {{3, 1, 1}, 5, 7, 4},
      {{3, 2, 0}, 5, 6, 3},  {{2, 1, 1}, 4, 5, 4},  {{2, 2, 0}, 4, 4, 3},
      {{3, 1, 0}, 4, 3, 2},  {{1, 1, 1}, 3, 3, 4},  {{2, 1, 0}, 3, 2, 3},
      {{3, 0, 0}, 3, 0, 1},  {{1, 1, 0}, 2, 1, 4},  {{2, 0, 0}, 2, 0, 3},
      {{1, 0, 0}, 1, 0, 5},  {{0, 0, 0}, 0, 0, 3},
  };
  return v;
}

const std::vector<GammaRow>& gamma_rows_d4() {
  static const std::vector<GammaRow> v = {
      {{2, 2, 2}, 6, 12, 0}, {{2, 2, 1}, 5, 8, 0}, {{2, 1, 1}, 4, 5, 1},
      {{2, 2, 0}, 4, 4, 0},  {{1, 1, 1}, 3, 3, 3}, {{2, 1, 0}, 3, 2, 2},
      {{1, 1, 0}, 2, 1, 5},  {{2, 0, 0}, 2, 0, 4}, {{1, 0, 0}, 1, 0, 4},
      {{0, 0, 0}, 0, 0, 4},
  };
  return v;
}

const std::vector<MckayRow>& mckay_rows() {
  static const std::vector<MckayRow> v = {
      // Z2, two-dimensional representations
      {"Z2", {1, 1}, m2(2, 0, 0, 2)},
      {"Z2", {1, 2}, m2(1, 1, 1, 1)},
      {"Z2", {2, 2}, m2(0, 2, 2, 0)},
      // Z2, three-dimensional
      {"Z2", {1, 1, 1}, m2(3, 0, 0, 3)},
      {"Z2", {1, 1, 2}, m2(2, 1, 1, 2)},
      {"Z2", {1, 2, 2}, m2(1, 2, 2, 1)},
      {"Z2", {2, 2, 2}, m2(0, 3, 3, 0)},
      // Z3, two-dimensional
      {"Z3", {1, 1}, m3(2, 0, 0, 0, 2, 0, 0, 0, 2)},
      {"Z3", {1, 2}, m3(1, 0, 1, 1, 1, 0, 0, 1, 1)},
      {"Z3", {1, 3}, m3(1, 1, 0, 0, 1, 1, 1, 0, 1)},
      {"Z3", {2, 2}, m3(0, 0, 2, 2, 0, 0, 0, 2, 0)},
      {"Z3", {2, 3}, m3(0, 1, 1, 1, 0, 1, 1, 1, 0)},
      {"Z3", {3, 3}, m3(0, 2, 0, 0, 0, 2, 2, 0, 0)},
      // Z3, three-dimensional
      {"Z3", {1, 1, 1}, m3(3, 0, 0, 0, 3, 0, 0, 0, 3)},
      {"Z3", {1, 1, 2}, m3(2, 0, 1, 1, 2, 0, 0, 1, 2)},
      {"Z3", {1, 1, 3}, m3(2, 1, 0, 0, 2, 1, 1, 0, 2)},
      {"Z3", {1, 2, 2}, m3(1, 0, 2, 2, 1, 0, 0, 2, 1)},
      {"Z3", {1, 2, 3}, m3(1, 1, 1, 1, 1, 1, 1, 1, 1)},
      {"Z3", {1, 3, 3}, m3(1, 2, 0, 0, 1, 2, 2, 0, 1)},
      {"Z3", {2, 2, 2}, m3(0, 0, 3, 3, 0, 0, 0, 3, 0)},
      {"Z3", {2, 2, 3}, m3(0, 1, 2, 2, 0, 1, 1, 2, 0)},
      {"Z3", {2, 3, 3}, m3(0, 2, 1, 1, 0, 2, 2, 1, 0)},
      {"Z3", {3, 3, 3}, m3(0, 3, 0, 0, 0, 3, 3, 0, 0)},
      // S3, two-dimensional
      {"S3", {1}, m3(1, 1, 1, 1, 0, 0, 1, 0, 0)},
      {"S3", {3, 3}, m3(2, 0, 0, 0, 2, 0, 0, 0, 2)},
      {"S3", {2, 3}, m3(2, 0, 0, 0, 1, 1, 0, 1, 1)},
      {"S3", {2, 2}, m3(2, 0, 0, 0, 0, 2, 0, 2, 0)},
      // S3, three-dimensional
      {"S3", {1, 3}, m3(2, 1, 1, 1, 1, 0, 1, 0, 1)},
      {"S3", {1, 2}, m3(2, 1, 1, 1, 0, 1, 1, 1, 0)},
      {"S3", {3, 3, 3}, m3(3, 0, 0, 0, 3, 0, 0, 0, 3)},
      {"S3", {2, 3, 3}, m3(3, 0, 0, 0, 2, 1, 0, 1, 2)},
      {"S3", {2, 2, 3}, m3(3, 0, 0, 0, 1, 2, 0, 2, 1)},
      {"S3", {2, 2, 2}, m3(3, 0, 0, 0, 0, 3, 0, 3, 0)},
  };
  return v;
}

const std::vector<EliminationEntry>& fixed_point_eliminations() {
  static const std::vector<EliminationEntry> v = [] {
    std::vector<EliminationEntry> e;
    auto spectral3 = [&](const IMat& M) { e.push_back({M, 3, "spectral-radius"}); };
    auto spectral4 = [&](const IMat& M) { e.push_back({M, 4, "spectral-radius"}); };
    auto nonneg = [&](const IMat& M) { e.push_back({M, 3, "series-nonnegativity"}); };
    auto partition = [&](const IMat& M) { e.push_back({M, 3, "partition"}); };

    spectral3(m3(2, 0, 1, 0, 2, 1, 1, 1, 0));
    spectral3(m3(2, 0, 1, 0, 1, 1, 1, 1, 0));
    spectral3(m3(2, 1, 1, 1, 1, 0, 1, 0, 0));
    spectral3(m3(2, 1, 0, 1, 1, 1, 0, 1, 0));
    spectral3(m3(2, 1, 1, 1, 0, 0, 1, 0, 0));
    spectral3(m3(0, 1, 1, 1, 0, 1, 1, 1, 0));
    spectral3(m3(2, 0, 1, 0, 1, 1, 1, 1, 1));
    spectral3(m3(1, 0, 1, 0, 1, 1, 1, 1, 1));
    spectral3(m3(1, 0, 1, 0, 1, 1, 1, 1, 0));
    spectral3(m3(1, 1, 1, 1, 1, 0, 1, 0, 0));
    spectral3(m3(1, 1, 1, 1, 1, 1, 1, 1, 0));
    spectral3(m3(1, 1, 1, 1, 0, 0, 1, 0, 0));
    spectral3(m3(1, 1, 1, 1, 0, 1, 1, 1, 0));
    spectral4(m3(1, 0, 1, 0, 0, 1, 1, 1, 0));
    spectral4(m3(0, 0, 1, 0, 0, 1, 1, 1, 0));

    nonneg(m3(3, 1, 0, 0, 0, 2, 1, 0, 0));
    nonneg(m3(3, 0, 1, 1, 2, 0, 1, 1, 1));
    nonneg(m3(3, 1, 0, 1, 1, 2, 2, 0, 0));
    nonneg(m3(3, 1, 0, 1, 2, 1, 2, 0, 0));
    nonneg(m3(3, 0, 1, 0, 2, 2, 1, 1, 0));
    nonneg(m3(2, 1, 0, 1, 2, 1, 1, 0, 0));
    nonneg(m3(3, 1, 0, 1, 1, 3, 2, 1, 1));
    nonneg(m3(3, 2, 1, 0, 1, 3, 1, 1, 1));
    nonneg(m3(1, 0, 1, 1, 2, 1, 0, 1, 2));

    partition(m3(2, 2, 0, 1, 1, 1, 1, 0, 1));
    partition(m3(3, 0, 3, 2, 2, 0, 1, 1, 0));
    partition(m3(2, 0, 3, 10, 2, 0, 1, 4, 0));
    // loop-cycle family representatives
    partition(m3(3, 1, 0, 0, 0, 2, 1, 0, 0));
    partition(m3(3, 2, 0, 0, 0, 2, 2, 0, 0));
    partition(m3(3, 3, 0, 0, 0, 2, 3, 0, 0));
    // alpha family representatives; alpha = 0 leaves no loops at the first
    // vertex, so no arrow partition exists there and the gate handles it
    partition(m3(1, 2, 0, 0, 1, 2, 2, 2, 1));
    partition(m3(1, 1, 0, 0, 1, 2, 1, 2, 1));
    partition(m3(2, 2, 0, 0, 1, 2, 2, 2, 1));
    partition(m3(3, 3, 0, 0, 1, 2, 3, 2, 1));

    e.push_back({m3(1, 2, 1, 1, 0, 2, 2, 0, 0), 3, "relation-intersection"});
    e.push_back({m3(1, 4, 0, 1, 0, 2, 5, 0, 0), 3, "subquiver-series"});
    e.push_back({m3(2, 3, 0, 1, 0, 2, 4, 0, 0), 3, "determinant-gate"});
    return e;
  }();
  return v;
}

}  // namespace qcy::reference
