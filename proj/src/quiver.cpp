#include "qcy/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcy {

Quiver::Quiver(IMat incidence) : M_(std::move(incidence)) {
  if (M_.rows() != M_.cols()) throw std::invalid_argument("Quiver: incidence matrix not square");
  int id = 0;
  for (Eigen::Index i = 0; i < M_.rows(); ++i)
    for (Eigen::Index j = 0; j < M_.cols(); ++j) {
      if (M_(i, j) < 0) throw std::invalid_argument("Quiver: negative arrow count");
      for (std::int64_t k = 0; k < M_(i, j); ++k)
        arrows_.push_back({id++, static_cast<int>(i), static_cast<int>(j)});
    }
}

bool Quiver::connected() const {
  int m = vertex_count();
  if (m == 0) return true;
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (M_(i, j) + M_(j, i) > 0) parent[static_cast<std::size_t>(find(i))] = find(j);
  int root = find(0);
  for (int i = 1; i < m; ++i)
    if (find(i) != root) return false;
  return true;
}

std::vector<int> permutation_of_matrix(const IMat& P) {
  std::vector<int> mu(static_cast<std::size_t>(P.rows()), -1);
  for (Eigen::Index i = 0; i < P.rows(); ++i)
    for (Eigen::Index j = 0; j < P.cols(); ++j)
      if (P(i, j) == 1) mu[static_cast<std::size_t>(i)] = static_cast<int>(j);
  return mu;
}

IMat matrix_of_permutation(const std::vector<int>& mu) {
  int m = static_cast<int>(mu.size());
  IMat P = IMat::Zero(m, m);
  for (int i = 0; i < m; ++i) P(i, mu[static_cast<std::size_t>(i)]) = 1;
  return P;
}

bool is_permutation_matrix(const IMat& P) {
  if (P.rows() != P.cols()) return false;
  for (Eigen::Index i = 0; i < P.rows(); ++i) {
    int row = 0, col = 0;
    for (Eigen::Index j = 0; j < P.cols(); ++j) {
      if (P(i, j) != 0 && P(i, j) != 1) return false;
      if (P(j, i) != 0 && P(j, i) != 1) return false;
      row += static_cast<int>(P(i, j));
      col += static_cast<int>(P(j, i));
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool CYType::valid(std::string* why) const {
  auto explain = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (P.rows() != M().rows() || P.cols() != M().cols()) return explain("P size mismatch");
  if (!is_permutation_matrix(P)) return explain("P is not a permutation matrix");
  if (!mat_eq(IMat(M() * P), IMat(P * M()))) return explain("MP != PM");
  if (d < 3) return explain("d < 3");
  return true;
}

CYType make_type(IMat M, IMat P, int d) {
  CYType t{Quiver(std::move(M)), std::move(P), d};
  std::string why;
  if (!t.valid(&why)) throw std::invalid_argument("make_type: " + why);
  return t;
}

namespace {

bool pair_less(const IMat& am, const IMat& ap, const IMat& bm, const IMat& bp) {
  for (Eigen::Index i = 0; i < am.rows(); ++i)
    for (Eigen::Index j = 0; j < am.cols(); ++j) {
      if (am(i, j) != bm(i, j)) return am(i, j) < bm(i, j);
    }
  for (Eigen::Index i = 0; i < ap.rows(); ++i)
    for (Eigen::Index j = 0; j < ap.cols(); ++j) {
      if (ap(i, j) != bp(i, j)) return ap(i, j) < bp(i, j);
    }
  return false;
}

IMat conjugate(const IMat& A, const std::vector<int>& sigma) {
  // entry (sigma(i), sigma(j)) of the result is A(i, j)
  IMat B(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      B(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(j)]) = A(i, j);
  return B;
}

}  // namespace

CanonicalForm canonicalize(const CYType& t, bool include_transpose) {
  int m = t.m();
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);

  CanonicalForm best;
  bool have = false;
  const IMat Mt = t.M().transpose();
  const IMat Pt = t.P.transpose();
  do {
    for (int use_t = 0; use_t < (include_transpose ? 2 : 1); ++use_t) {
      IMat cm = conjugate(use_t ? Mt : t.M(), sigma);
      IMat cp = conjugate(use_t ? Pt : t.P, sigma);
      if (!have || pair_less(cm, cp, best.M, best.P)) {
        best.M = std::move(cm);
        best.P = std::move(cp);
        best.witness = sigma;
        best.transposed = use_t != 0;
        have = true;
      }
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

bool canonical_less(const CanonicalForm& a, const CanonicalForm& b) {
  return pair_less(a.M, a.P, b.M, b.P);
}

std::string canonical_key(const CanonicalForm& c) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < c.M.rows(); ++i)
    for (Eigen::Index j = 0; j < c.M.cols(); ++j) os << c.M(i, j) << ",";
  os << "|";
  for (Eigen::Index i = 0; i < c.P.rows(); ++i)
    for (Eigen::Index j = 0; j < c.P.cols(); ++j) os << c.P(i, j);
  return os.str();
}

std::vector<std::vector<int>> enumerate_cycles(const Quiver& q, int length) {
  assert(length >= 1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;

  // arrows grouped by source vertex for the walk
  std::vector<std::vector<int>> by_src(static_cast<std::size_t>(q.vertex_count()));
  for (const Arrow& a : q.arrows()) by_src[static_cast<std::size_t>(a.src)].push_back(a.id);

  auto walk = [&](auto&& self, int at, int remaining, int home) -> void {
    if (remaining == 0) {
      if (at == home) out.push_back(stack);
      return;
    }
    for (int id : by_src[static_cast<std::size_t>(at)]) {
      stack.push_back(id);
      self(self, q.arrow(id).dst, remaining - 1, home);
      stack.pop_back();
    }
  };
  for (int v = 0; v < q.vertex_count(); ++v) walk(walk, v, length, v);
  return out;
}

PartitionVerdict partition_eliminable(const Quiver& q, int s) {
  if (!q.connected()) throw std::invalid_argument("partition_eliminable: disconnected quiver");
  PartitionVerdict v;
  auto cycles = enumerate_cycles(q, s);

  int n = q.arrow_count();
  std::vector<bool> on_cycle(static_cast<std::size_t>(n), false);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      on_cycle[static_cast<std::size_t>(cyc[k])] = true;
      if (k > 0) parent[static_cast<std::size_t>(find(cyc[k]))] = find(cyc[0]);
    }

  for (int a = 0; a < n; ++a)
    if (!on_cycle[static_cast<std::size_t>(a)]) {
      v.kind = PartitionVerdict::Kind::dead_arrow;
      v.dead_arrow_id = a;
      return v;
    }

  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    int r = find(a);
    if (comp_of[static_cast<std::size_t>(r)] == -1) {
      comp_of[static_cast<std::size_t>(r)] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(r)])].push_back(a);
  }
  if (comps.size() >= 2) {
    v.kind = PartitionVerdict::Kind::eliminable_partition;
    v.components = std::move(comps);
  }
  return v;
}

}  // namespace qcy
