#pragma once

// Degree-truncated noncommutative Groebner machinery for two-sided path
// algebra ideals with homogeneous generators: rewrite rules, overlap
// completion up to a degree bound, and normal-word counting respecting the
// vertex grading. Completion resolves every overlap ambiguity whose word
// degree stays within the bound, which certifies the normal-word counts up to
// that degree.

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcy/matrix_poly.hpp"
#include "qcy/path_algebra.hpp"

namespace qcy {

// Degree first, then position-wise arrow priority. rank[a] < rank[b] makes a
// the larger letter; the standard order ranks arrows by id, so lower ids are
// larger letters.
class MonomialOrder {
public:
  static MonomialOrder standard(int arrow_count) {
    MonomialOrder o;
    o.rank_.resize(static_cast<std::size_t>(arrow_count));
    for (int a = 0; a < arrow_count; ++a) o.rank_[static_cast<std::size_t>(a)] = a;
    return o;
  }

  // arrows listed from largest letter to smallest; must cover every arrow
  static MonomialOrder with_priority(const std::vector<int>& arrows_high_to_low) {
    MonomialOrder o;
    o.rank_.assign(arrows_high_to_low.size(), -1);
    for (std::size_t k = 0; k < arrows_high_to_low.size(); ++k) {
      int a = arrows_high_to_low[k];
      if (a < 0 || a >= static_cast<int>(o.rank_.size()) || o.rank_[static_cast<std::size_t>(a)] != -1)
        throw std::invalid_argument("MonomialOrder: priority list must be a permutation of the arrow ids");
      o.rank_[static_cast<std::size_t>(a)] = static_cast<int>(k);
    }
    return o;
  }

  bool less(const Path& a, const Path& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    if (a.arrows.empty()) return a.start > b.start;
    for (std::size_t k = 0; k < a.arrows.size(); ++k) {
      int ra = rank_[static_cast<std::size_t>(a.arrows[k])];
      int rb = rank_[static_cast<std::size_t>(b.arrows[k])];
      if (ra != rb) return ra > rb;
    }
    return false;
  }

  bool greater(const Path& a, const Path& b) const { return less(b, a); }

private:
  std::vector<int> rank_;
};

template <typename F>
const Path& lead_word(const PathElement<F>& w, const MonomialOrder& ord) {
  assert(!w.is_zero());
  const Path* best = nullptr;
  for (const auto& [p, c] : w.terms())
    if (!best || ord.less(*best, p)) best = &p;
  return *best;
}

// lead is congruent to tail in the quotient; every tail term is smaller
template <typename F>
struct RewriteRule {
  Path lead;
  PathElement<F> tail;
};

template <typename F>
class TruncatedGB {
public:
  TruncatedGB(Quiver q, MonomialOrder ord, const std::vector<PathElement<F>>& relations, int degree_bound)
      : q_(std::move(q)), ord_(std::move(ord)), bound_(degree_bound) {
    std::multimap<int, PathElement<F>> work;
    for (const auto& r : relations) {
      if (r.is_zero()) continue;
      auto deg = r.homogeneous_degree();
      if (!deg) throw std::invalid_argument("TruncatedGB: relations must be homogeneous");
      if (*deg < 1) throw std::invalid_argument("TruncatedGB: relations must have degree at least 1");
      if (*deg > bound_) throw std::invalid_argument("TruncatedGB: degree bound below a relation degree");
      work.emplace(*deg, r);
    }
    while (!work.empty()) {
      auto it = work.begin();
      PathElement<F> g = reduce(it->second);
      work.erase(it);
      if (g.is_zero()) continue;
      adjoin(std::move(g), work);
    }
  }

  const Quiver& quiver() const { return q_; }
  int completion_degree() const { return bound_; }
  const std::vector<RewriteRule<F>>& rules() const { return rules_; }

  std::vector<Path> lead_words() const {
    std::vector<Path> v;
    for (const auto& r : rules_) v.push_back(r.lead);
    std::sort(v.begin(), v.end());
    return v;
  }

  // normal form with respect to the current rules; a true normal form once
  // completion has covered the element's degree
  PathElement<F> reduce(PathElement<F> w) const {
    for (;;) {
      const Path* target = nullptr;
      std::size_t rule_idx = 0;
      std::size_t pos = 0;
      for (const auto& [p, c] : w.terms()) {
        std::size_t ri, at;
        if (!find_reduction(p, ri, at)) continue;
        if (!target || ord_.less(*target, p)) {
          target = &p;
          rule_idx = ri;
          pos = at;
        }
      }
      if (!target) return w;
      const Path p = *target;  // copy before mutating w
      const F c = w.terms().at(p);
      const RewriteRule<F>& rule = rules_[rule_idx];
      Path u, v;
      u.start = p.start;
      u.arrows.assign(p.arrows.begin(), p.arrows.begin() + static_cast<std::ptrdiff_t>(pos));
      int lead_len = rule.lead.degree();
      v.start = q_.arrow(rule.lead.arrows.back()).dst;
      v.arrows.assign(p.arrows.begin() + static_cast<std::ptrdiff_t>(pos) + lead_len, p.arrows.end());
      PathElement<F> replacement =
          mul(mul(PathElement<F>::term(u, c), rule.tail, q_), PathElement<F>::term(v, F(1)), q_);
      w.add(p, -c);
      w += replacement;
    }
  }

  // normal-word counts H_n(i, j) for n <= N; requires N within the
  // completion certificate
  MatrixSeries<std::int64_t> hilbert(int N) const {
    if (N > bound_) throw std::invalid_argument("TruncatedGB: count requested beyond completion degree");
    int m = q_.vertex_count();

    // forbidden-subword automaton over the lead words
    struct Node {
      std::map<int, int> child;
      int fail = 0;
      bool terminal = false;
    };
    std::vector<Node> trie(1);
    for (const auto& r : rules_) {
      int cur = 0;
      for (int a : r.lead.arrows) {
        auto it = trie[static_cast<std::size_t>(cur)].child.find(a);
        if (it == trie[static_cast<std::size_t>(cur)].child.end()) {
          trie.push_back(Node{});
          trie[static_cast<std::size_t>(cur)].child[a] = static_cast<int>(trie.size()) - 1;
          cur = static_cast<int>(trie.size()) - 1;
        } else {
          cur = it->second;
        }
      }
      trie[static_cast<std::size_t>(cur)].terminal = true;
    }
    std::queue<int> bfs;
    for (auto& [a, ch] : trie[0].child) {
      trie[static_cast<std::size_t>(ch)].fail = 0;
      bfs.push(ch);
    }
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (auto& [a, ch] : trie[static_cast<std::size_t>(u)].child) {
        int f = trie[static_cast<std::size_t>(u)].fail;
        while (f != 0 && !trie[static_cast<std::size_t>(f)].child.count(a))
          f = trie[static_cast<std::size_t>(f)].fail;
        auto it = trie[static_cast<std::size_t>(f)].child.find(a);
        int link = (it != trie[static_cast<std::size_t>(f)].child.end() && it->second != ch) ? it->second : 0;
        trie[static_cast<std::size_t>(ch)].fail = link;
        trie[static_cast<std::size_t>(ch)].terminal =
            trie[static_cast<std::size_t>(ch)].terminal || trie[static_cast<std::size_t>(link)].terminal;
        bfs.push(ch);
      }
    }
    auto step = [&](int node, int a) {
      int u = node;
      for (;;) {
        auto it = trie[static_cast<std::size_t>(u)].child.find(a);
        if (it != trie[static_cast<std::size_t>(u)].child.end()) return it->second;
        if (u == 0) return 0;
        u = trie[static_cast<std::size_t>(u)].fail;
      }
    };

    MatrixSeries<std::int64_t> series;
    series.N = N;
    series.H.assign(static_cast<std::size_t>(N) + 1, Mat<std::int64_t>::Zero(m, m));
    int S = static_cast<int>(trie.size());
    for (int i = 0; i < m; ++i) {
      // dp[node][v] = number of surviving words of the current length
      std::vector<std::vector<std::int64_t>> dp(
          static_cast<std::size_t>(S), std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
      dp[0][static_cast<std::size_t>(i)] = 1;
      for (int j = 0; j < m; ++j) series.H[0](i, j) = (i == j) ? 1 : 0;
      for (int n = 1; n <= N; ++n) {
        std::vector<std::vector<std::int64_t>> next(
            static_cast<std::size_t>(S), std::vector<std::int64_t>(static_cast<std::size_t>(m), 0));
        for (int node = 0; node < S; ++node)
          for (int v = 0; v < m; ++v) {
            std::int64_t cnt = dp[static_cast<std::size_t>(node)][static_cast<std::size_t>(v)];
            if (cnt == 0) continue;
            for (const Arrow& arr : q_.arrows()) {
              if (arr.src != v) continue;
              int nn = step(node, arr.id);
              if (trie[static_cast<std::size_t>(nn)].terminal) continue;
              next[static_cast<std::size_t>(nn)][static_cast<std::size_t>(arr.dst)] += cnt;
            }
          }
        dp = std::move(next);
        for (int node = 0; node < S; ++node)
          for (int j = 0; j < m; ++j)
            series.H[static_cast<std::size_t>(n)](i, j) +=
                dp[static_cast<std::size_t>(node)][static_cast<std::size_t>(j)];
      }
    }
    return series;
  }

private:
  bool find_reduction(const Path& p, std::size_t& rule_idx, std::size_t& pos) const {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const auto& lw = rules_[r].lead.arrows;
      if (lw.size() > p.arrows.size()) continue;
      for (std::size_t at = 0; at + lw.size() <= p.arrows.size(); ++at) {
        if (std::equal(lw.begin(), lw.end(), p.arrows.begin() + static_cast<std::ptrdiff_t>(at))) {
          rule_idx = r;
          pos = at;
          return true;
        }
      }
    }
    return false;
  }

  static bool contains(const std::vector<int>& big, const std::vector<int>& small) {
    if (small.size() > big.size()) return false;
    for (std::size_t at = 0; at + small.size() <= big.size(); ++at)
      if (std::equal(small.begin(), small.end(), big.begin() + static_cast<std::ptrdiff_t>(at))) return true;
    return false;
  }

  void adjoin(PathElement<F> g, std::multimap<int, PathElement<F>>& work) {
    auto deg = g.homogeneous_degree();
    if (!deg) throw std::logic_error("TruncatedGB: completion produced an inhomogeneous element");
    const Path lw = lead_word(g, ord_);
    const F lc = g.terms().at(lw);
    g = (F(1) / lc) * g;
    PathElement<F> tail = PathElement<F>::term(lw, F(1)) - g;

    // displace any rule whose lead word now reduces
    std::vector<RewriteRule<F>> kept;
    for (auto& r : rules_) {
      if (contains(r.lead.arrows, lw.arrows)) {
        work.emplace(r.lead.degree(), PathElement<F>::term(r.lead, F(1)) - r.tail);
      } else {
        kept.push_back(std::move(r));
      }
    }
    rules_ = std::move(kept);
    rules_.push_back(RewriteRule<F>{lw, std::move(tail)});
    const std::size_t self = rules_.size() - 1;

    for (std::size_t r = 0; r < rules_.size(); ++r) {
      enqueue_overlaps(rules_[self], rules_[r], work);
      if (r != self) enqueue_overlaps(rules_[r], rules_[self], work);
    }
  }

  // words w = lead1 . suffix = prefix . lead2 with a proper overlap; the two
  // one-step reductions of w must agree, so their difference joins the work
  void enqueue_overlaps(const RewriteRule<F>& r1, const RewriteRule<F>& r2,
                        std::multimap<int, PathElement<F>>& work) {
    const auto& A = r1.lead.arrows;
    const auto& B = r2.lead.arrows;
    int L1 = static_cast<int>(A.size());
    int L2 = static_cast<int>(B.size());
    for (int k = 1; k < std::min(L1, L2); ++k) {
      if (L1 + L2 - k > bound_) continue;
      if (!std::equal(B.begin(), B.begin() + k, A.end() - k)) continue;
      Path u;
      u.start = r1.lead.start;
      u.arrows.assign(A.begin(), A.end() - k);
      Path v;
      v.start = q_.arrow(B[static_cast<std::size_t>(k - 1)]).dst;
      v.arrows.assign(B.begin() + k, B.end());
      PathElement<F> s = mul(r1.tail, PathElement<F>::term(v, F(1)), q_) -
                         mul(PathElement<F>::term(u, F(1)), r2.tail, q_);
      if (!s.is_zero()) work.emplace(L1 + L2 - k, std::move(s));
    }
  }

  Quiver q_;
  MonomialOrder ord_;
  int bound_;
  std::vector<RewriteRule<F>> rules_;
};

template <typename F>
MatrixSeries<std::int64_t> quotient_hilbert(const Quiver& q, const std::vector<PathElement<F>>& rels,
                                            int D, const MonomialOrder& ord) {
  TruncatedGB<F> gb(q, ord, rels, D);
  return gb.hilbert(D);
}

}  // namespace qcy
