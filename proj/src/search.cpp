#include "qcy/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcy/path_algebra.hpp"

namespace qcy {

namespace {

// largest sum of squares of s coordinates in [-2,2] with fixed sum S,
// attained with all but one coordinate at +-2
std::optional<std::int64_t> max_square_sum(std::int64_t S, int s) {
  std::optional<std::int64_t> best;
  for (int npos = 0; npos <= s - 1; ++npos) {
    int nneg = s - 1 - npos;
    std::int64_t r = S - 2 * npos + 2 * nneg;
    if (r < -2 || r > 2) continue;
    std::int64_t val = 4 * (s - 1) + r * r;
    if (!best || val > *best) best = val;
  }
  return best;
}

}  // namespace

std::optional<std::int64_t> gamma_max(std::int64_t u, std::int64_t v, std::int64_t w, int s) {
  if (s != 3 && s != 4) throw std::invalid_argument("gamma_max: s must be 3 or 4");
  std::int64_t lambda = u + v + w;
  std::int64_t S = lambda - (6 - s);
  if (S > 2 * s || S < -2 * s) return std::nullopt;
  std::int64_t beta = u * v + u * w + v * w;
  auto sq = max_square_sum(S, s);
  // feasibility of |S| <= 2s guarantees a vertex exists
  if (!sq) throw std::logic_error("gamma_max: no feasible vertex");
  // min of sum_{i<j} k_i k_j = (S^2 - max sum k_i^2) / 2; parity makes it integral
  std::int64_t twice = S * S - *sq;
  std::int64_t min_pairs = twice >= 0 ? twice / 2 : -((-twice + 1) / 2);
  if (twice % 2 != 0) throw std::logic_error("gamma_max: parity violation");
  return beta - 2 * lambda - 3 * (std::int64_t{s} - 4) - min_pairs;
}

DiagonalProfile diagonal_profile(std::int64_t u, std::int64_t v, std::int64_t w, int s) {
  DiagonalProfile p;
  p.diag = {u, v, w};
  std::sort(p.diag.begin(), p.diag.end(), std::greater<>());
  p.lambda = u + v + w;
  p.beta = u * v + u * w + v * w;
  p.gamma_max = gamma_max(u, v, w, s);
  return p;
}

namespace {

void push_candidate(std::vector<CYType>& out, std::set<std::string>& seen, const IMat& M,
                    const IMat& P, int s) {
  IMat MP = M * P, PM = P * M;
  if (!mat_eq(MP, PM)) return;
  CYType t = make_type(M, P, s);
  if (!t.quiver.connected()) return;
  std::string key = canonical_key(canonicalize(t));
  if (seen.insert(key).second) out.push_back(std::move(t));
}

// all (x, y) in [0, cap]^2 with x*y <= budget
std::vector<std::pair<std::int64_t, std::int64_t>> bounded_pairs(std::int64_t cap,
                                                                 std::int64_t budget) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ps;
  for (std::int64_t x = 0; x <= cap; ++x)
    for (std::int64_t y = 0; y <= cap; ++y)
      if (x * y <= budget) ps.emplace_back(x, y);
  return ps;
}

void enumerate_p_identity_3(int s, std::int64_t max_entry, std::vector<CYType>& out,
                            std::set<std::string>& seen) {
  const IMat P = identity_imat(3);
  std::int64_t diag_cap = std::min<std::int64_t>(loop_bound(s), max_entry);
  for (std::int64_t u = 0; u <= diag_cap; ++u)
    for (std::int64_t v = 0; v <= u; ++v)
      for (std::int64_t w = 0; w <= v; ++w) {
        auto gm = gamma_max(u, v, w, s);
        if (!gm || *gm < 0) continue;
        auto pairs12 = bounded_pairs(max_entry, *gm);
        for (auto [a12, a21] : pairs12) {
          std::int64_t rest1 = *gm - a12 * a21;
          for (auto [a13, a31] : bounded_pairs(max_entry, rest1)) {
            std::int64_t rest2 = rest1 - a13 * a31;
            for (auto [a23, a32] : bounded_pairs(max_entry, rest2)) {
              IMat M(3, 3);
              M << u, a12, a13, a21, v, a23, a31, a32, w;
              push_candidate(out, seen, M, P, s);
            }
          }
        }
      }
}

// generic shape-free enumeration: entries constant on mu-orbits of index pairs
void enumerate_orbitwise(int m, int s, const IMat& P, std::int64_t max_entry,
                         std::vector<CYType>& out, std::set<std::string>& seen) {
  std::vector<int> mu = permutation_of_matrix(P);
  std::vector<std::vector<std::pair<int, int>>> orbits;
  std::vector<std::vector<int>> orbit_of(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (orbit_of[i][j] >= 0) continue;
      int id = static_cast<int>(orbits.size());
      orbits.emplace_back();
      int a = i, b = j;
      while (orbit_of[a][b] < 0) {
        orbit_of[a][b] = id;
        orbits[id].emplace_back(a, b);
        a = mu[a];
        b = mu[b];
      }
    }
  std::int64_t lb = loop_bound(s);
  std::vector<std::int64_t> cap(orbits.size(), max_entry);
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (auto [i, j] : orbits[k])
      if (i == j && mu[i] == i) cap[k] = std::min(cap[k], lb);
  double space = 1.0;
  for (auto c : cap) space *= static_cast<double>(c + 1);
  if (space > double(1) * (1 << 24))
    throw std::invalid_argument("enumerate_candidates: search space too large for this m and P");
  std::vector<std::int64_t> val(orbits.size(), 0);
  for (;;) {
    IMat M = IMat::Zero(m, m);
    for (std::size_t k = 0; k < orbits.size(); ++k)
      for (auto [i, j] : orbits[k]) M(i, j) = val[k];
    push_candidate(out, seen, M, P, s);
    std::size_t pos = 0;
    while (pos < val.size() && val[pos] == cap[pos]) val[pos++] = 0;
    if (pos == val.size()) break;
    ++val[pos];
  }
}

}  // namespace

std::vector<CYType> enumerate_candidates(int m, int s, const IMat& P, int max_entry) {
  if (s != 3 && s != 4) throw std::invalid_argument("enumerate_candidates: s must be 3 or 4");
  if (max_entry < 1) throw std::invalid_argument("enumerate_candidates: max_entry must be >= 1");
  if (P.rows() != m || P.cols() != m || !is_permutation_matrix(P))
    throw std::invalid_argument("enumerate_candidates: P is not an m x m permutation matrix");
  std::vector<CYType> out;
  std::set<std::string> seen;
  if (m == 3 && mat_eq(P, identity_imat(3)))
    enumerate_p_identity_3(s, max_entry, out, seen);
  else
    enumerate_orbitwise(m, s, P, max_entry, out, seen);
  std::sort(out.begin(), out.end(), [](const CYType& a, const CYType& b) {
    return canonical_key(canonicalize(a)) < canonical_key(canonicalize(b));
  });
  return out;
}

GateReport determinant_gate(const CYType& t, bool need_gk) {
  GateReport r;
  MatrixPoly<std::int64_t> p = build_p(t);
  auto grid = entries_of(p);
  Poly<std::int64_t> det64 = detail::poly_det<std::int64_t>(grid);
  r.mult1 = vanishing_multiplicity(det64, std::int64_t{1});
  r.det = det64.convert<BigInt>();
  // int64 screen first; full recognition over exact integers only when plausible
  if (self_reciprocal_up_to_sign(det64)) {
    r.factorization = cyclotomic_product(r.det);
    r.cyclotomic = r.factorization.is_product;
  } else {
    r.cyclotomic = false;
    r.factorization.is_product = false;
    r.factorization.residual = r.det;
  }
  r.pass_gate_only = r.cyclotomic && r.mult1 >= 3;
  if (need_gk && r.pass_gate_only) {
    GrowthReport g = gk_dimension(t);
    r.m_d = g.m_d;
    r.m_a = g.m_a;
    r.gk = g.gk;
  }
  r.pass_full = r.pass_gate_only && r.gk.has_value() && *r.gk == 3;
  return r;
}

std::string catalog_key(const CanonicalForm& c, int d) {
  return canonical_key(c) + "#" + std::to_string(d);
}

bool markov_check(std::int64_t a, std::int64_t b, std::int64_t c) {
  return a >= 1 && b >= 1 && c >= 1 && a * a + b * b + c * c == a * b * c;
}

std::optional<std::array<std::int64_t, 3>> markov_shape(const CYType& t) {
  const IMat& M = t.M();
  if (M.rows() != 3) return std::nullopt;
  if (!mat_eq(t.P, identity_imat(3))) return std::nullopt;
  // (0 a 0 / 0 0 b / c 0 0) up to relabeling: one nonzero per row/column on a 3-cycle
  std::array<int, 3> perm = {0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    // arrows i -> sigma(i) only, sigma the 3-cycle mapped by this labeling
    int i0 = perm[0], i1 = perm[1], i2 = perm[2];
    std::int64_t a = M(i0, i1), b = M(i1, i2), c = M(i2, i0);
    if (a < 1 || b < 1 || c < 1) continue;
    bool clean = true;
    for (int i = 0; i < 3 && clean; ++i)
      for (int j = 0; j < 3 && clean; ++j) {
        bool on_cycle = (i == i0 && j == i1) || (i == i1 && j == i2) || (i == i2 && j == i0);
        if (!on_cycle && M(i, j) != 0) clean = false;
      }
    if (clean) {
      std::array<std::int64_t, 3> abc = {a, b, c};
      std::sort(abc.begin(), abc.end());
      return abc;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

namespace {

// Obstruction for P = I, d = 3: pick vertices i != j and middles c, c' such
// that z: c -> c' is the unique arrow there, some arrow a: c' -> i and
// b: j -> c exist, every length-2 path i -> c' runs through c and every
// length-2 path c -> j runs through c'. The relations derived from a and b
// then factor as v*z and z*w, so v*z*w lies in RV and VR simultaneously,
// which the resolution forbids between distinct vertices.
struct RelationIntersectionHit {
  int i, j, c, cp;
};

std::optional<RelationIntersectionHit> relation_intersection_hit(const IMat& M) {
  int m = static_cast<int>(M.rows());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      for (int c = 0; c < m; ++c)
        for (int cp = 0; cp < m; ++cp) {
          if (M(c, cp) != 1) continue;
          if (M(cp, i) < 1 || M(j, c) < 1) continue;
          if (M(i, c) < 1 || M(cp, j) < 1) continue;
          bool ok = true;
          for (int x = 0; x < m && ok; ++x) {
            if (x != c && M(i, x) > 0 && M(x, cp) > 0) ok = false;
            if (x != cp && M(c, x) > 0 && M(x, j) > 0) ok = false;
          }
          if (ok) return RelationIntersectionHit{i, j, c, cp};
        }
    }
  return std::nullopt;
}

Verdict relation_intersection_verdict(const CYType& t) {
  Verdict v;
  v.filter = "relation-intersection";
  if (t.d != 3 || !mat_eq(t.P, identity_imat(static_cast<int>(t.P.rows())))) {
    v.status = FilterStatus::not_applicable;
    v.detail = "requires P = I and d = 3";
    return v;
  }
  if (auto hit = relation_intersection_hit(t.M())) {
    v.status = FilterStatus::fail;
    std::ostringstream os;
    os << "forced relation intersection from vertex " << hit->i + 1 << " to vertex "
       << hit->j + 1 << " through " << hit->c + 1 << "," << hit->cp + 1;
    v.detail = os.str();
  } else {
    v.status = FilterStatus::pass;
  }
  return v;
}

std::string status_word(FilterStatus s) {
  switch (s) {
    case FilterStatus::pass: return "pass";
    case FilterStatus::fail: return "fail";
    default: return "not-applicable";
  }
}

ClassificationRecord run_cascade(const CYType& t, const ClassifyOptions& opts) {
  ClassificationRecord rec;
  rec.canon = canonicalize(t);
  rec.d = t.d;
  rec.gate = determinant_gate(t, !opts.gate_only);

  Verdict gv;
  gv.filter = "determinant-gate";
  if (!rec.gate.cyclotomic) {
    gv.status = FilterStatus::fail;
    gv.detail = "det p is not a product of cyclotomic factors";
  } else if (rec.gate.mult1 < 3) {
    gv.status = FilterStatus::fail;
    gv.detail = "vanishing multiplicity at t=1 is " + std::to_string(rec.gate.mult1);
  } else if (!opts.gate_only && !rec.gate.pass_full) {
    gv.status = FilterStatus::fail;
    gv.detail = "gk dimension = " +
                (rec.gate.gk ? std::to_string(*rec.gate.gk) : std::string("infinite"));
  } else {
    gv.status = FilterStatus::pass;
    gv.detail = "det p = cyclotomic product, multiplicity " + std::to_string(rec.gate.mult1);
    if (!opts.gate_only) gv.detail += ", gk = 3";
  }
  rec.verdicts.push_back(gv);

  if (!opts.gate_only && rec.gate.pass_gate_only) {
    // series nonnegativity
    Verdict nv;
    nv.filter = "series-nonnegativity";
    MatrixPoly<BigInt> pz = build_p(t).convert<BigInt>();
    MatrixSeries<BigInt> h = invert_series(pz, opts.truncation);
    if (auto bad = nonneg_up_to(h)) {
      nv.status = FilterStatus::fail;
      std::ostringstream os;
      os << "predicted dimension is negative at degree " << bad->degree << ", entry ("
         << bad->i + 1 << "," << bad->j + 1 << ")";
      nv.detail = os.str();
      rec.nonneg_failure = bad;
    } else {
      nv.status = FilterStatus::pass;
    }
    rec.verdicts.push_back(nv);

    SpectralVerdict sv = normal_spectral_filter(t);
    rec.verdicts.push_back({"spectral-radius", sv.status, sv.detail});

    LoopBoundVerdict lv = loop_bound_filter(t);
    std::string loop_detail;
    if (lv.status == FilterStatus::fail)
      loop_detail = "vertex " + std::to_string(lv.vertex + 1) + " exceeds the loop bound";
    rec.verdicts.push_back({"loop-bound", lv.status, loop_detail});

    Verdict pv;
    pv.filter = "partition";
    if (!mat_eq(t.P, identity_imat(static_cast<int>(t.P.rows())))) {
      pv.status = FilterStatus::not_applicable;
      pv.detail = "requires P = I";
    } else {
      PartitionVerdict pw = partition_eliminable(t.quiver, t.d);
      if (pw.kind == PartitionVerdict::Kind::dead_arrow) {
        pv.status = FilterStatus::fail;
        pv.detail = "arrow " + std::to_string(pw.dead_arrow_id) + " lies on no cycle of length " +
                    std::to_string(t.d);
      } else if (pw.kind == PartitionVerdict::Kind::eliminable_partition) {
        pv.status = FilterStatus::fail;
        pv.detail = "cycle support splits into " + std::to_string(pw.components.size()) +
                    " non-communicating arrow classes";
      } else {
        pv.status = FilterStatus::pass;
      }
    }
    rec.verdicts.push_back(pv);

    BlockVerdict bv = forbidden_block_filter(t);
    std::string block_detail;
    if (bv.status == FilterStatus::fail)
      block_detail = "vertices " + std::to_string(bv.v1 + 1) + "," + std::to_string(bv.v2 + 1) +
                     " carry the block " + bv.block;
    rec.verdicts.push_back({"forbidden-block", bv.status, block_detail});

    rec.verdicts.push_back(relation_intersection_verdict(t));

    SubquiverSeriesVerdict qv = subquiver_series_check(t);
    rec.verdicts.push_back({"subquiver-series", qv.status, qv.detail});
  }

  rec.survivor = true;
  for (const auto& v : rec.verdicts)
    if (v.status == FilterStatus::fail) rec.survivor = false;
  if (opts.gate_only) rec.survivor = rec.gate.pass_gate_only;

  if (auto abc = markov_shape(t)) {
    std::ostringstream os;
    os << "markov(" << (*abc)[0] << "," << (*abc)[1] << "," << (*abc)[2] << ")";
    if (!markov_check((*abc)[0], (*abc)[1], (*abc)[2])) os << " [not a solution]";
    rec.family_tags.push_back(os.str());
  }

  if (opts.catalog) {
    auto it = opts.catalog->find(catalog_key(rec.canon, rec.d));
    if (it != opts.catalog->end()) {
      rec.realization = it->second.tag;
      rec.realization_via = it->second.via;
    }
  }
  return rec;
}

}  // namespace

std::vector<ClassificationRecord> classify(int m, int s, const IMat& P, int max_entry,
                                           const ClassifyOptions& opts) {
  std::vector<CYType> cands = enumerate_candidates(m, s, P, max_entry);
  std::vector<ClassificationRecord> recs(cands.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < cands.size(); ++i) recs[i] = run_cascade(cands[i], opts);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= cands.size()) return;
          recs[i] = run_cascade(cands[i], opts);
        }
      });
    for (auto& th : pool) th.join();
  }
  if (opts.cross_check_cyclotomic) {
    // survivor determinants must appear among the structurally enumerable products
    bool p_is_id = mat_eq(P, identity_imat(m));
    for (auto& r : recs) {
      if (!r.survivor || !p_is_id || m != 3) continue;
      std::int64_t lambda = r.canon.M.trace();
      auto cands_det = enumerate_candidate_dets(s, lambda);
      Poly<BigInt> mine = r.gate.det;
      bool found = false;
      for (const auto& c : cands_det)
        if (c == mine) {
          found = true;
          break;
        }
      if (!found)
        throw std::logic_error("cross-check failed: survivor determinant missing from candidates");
    }
  }
  std::sort(recs.begin(), recs.end(), [](const ClassificationRecord& a,
                                         const ClassificationRecord& b) {
    if (a.d != b.d) return a.d < b.d;
    return catalog_key(a.canon, a.d) < catalog_key(b.canon, b.d);
  });
  return recs;
}

ClassificationRecord check_type(const CYType& t, const ClassifyOptions& opts) {
  return run_cascade(t, opts);
}

}  // namespace qcy
