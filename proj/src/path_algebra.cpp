#include "qcy/path_algebra.hpp"

#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qcy/bigint.hpp"
#include "qcy/groebner.hpp"

namespace qcy {

bool Path::composable_in(const Quiver& q) const {
  if (start < 0 || start >= q.vertex_count()) return false;
  int at = start;
  for (int a : arrows) {
    if (a < 0 || a >= q.arrow_count()) return false;
    if (q.arrow(a).src != at) return false;
    at = q.arrow(a).dst;
  }
  return true;
}

std::string path_to_string(const Path& p) {
  if (p.arrows.empty()) return "e_" + std::to_string(p.start + 1);
  std::ostringstream os;
  for (std::size_t k = 0; k < p.arrows.size(); ++k) {
    if (k) os << ".";
    os << "a" << p.arrows[k];
  }
  return os.str();
}

bool composable(const Path& a, const Path& b, const Quiver& q) { return a.target(q) == b.start; }

Path concat(const Path& a, const Path& b, const Quiver& q) {
  assert(composable(a, b, q));
  Path r;
  r.start = a.start;
  r.arrows = a.arrows;
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

Subquiver full_subquiver(const Quiver& q, const std::vector<int>& vertices) {
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] < 0 || vertices[k] >= q.vertex_count())
      throw std::invalid_argument("full_subquiver: vertex out of range");
    if (k && vertices[k] <= vertices[k - 1])
      throw std::invalid_argument("full_subquiver: vertices must be strictly increasing");
  }
  int sm = static_cast<int>(vertices.size());
  IMat M = IMat::Zero(sm, sm);
  for (int i = 0; i < sm; ++i)
    for (int j = 0; j < sm; ++j) M(i, j) = q.incidence()(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]);

  Subquiver s;
  s.quiver = Quiver(M);
  s.vertices = vertices;
  s.arrow_from_parent.assign(static_cast<std::size_t>(q.arrow_count()), -1);

  // parent arrows bucketed by (src, dst) in id order; subquiver arrows are
  // synthesized row-major with the same per-pair ordering
  std::map<std::pair<int, int>, std::vector<int>> buckets;
  for (const Arrow& a : q.arrows()) buckets[{a.src, a.dst}].push_back(a.id);
  for (const Arrow& a : s.quiver.arrows()) {
    int ps = vertices[static_cast<std::size_t>(a.src)];
    int pd = vertices[static_cast<std::size_t>(a.dst)];
    int idx = static_cast<int>(s.arrow_to_parent.size());
    // count how many subquiver arrows for this pair were already mapped
    int prior = 0;
    for (int b : s.arrow_to_parent)
      if (q.arrow(b).src == ps && q.arrow(b).dst == pd) ++prior;
    (void)idx;
    int parent = buckets.at({ps, pd})[static_cast<std::size_t>(prior)];
    s.arrow_to_parent.push_back(parent);
    s.arrow_from_parent[static_cast<std::size_t>(parent)] = a.id;
  }
  return s;
}

std::vector<std::vector<Path>> cycle_rotation_classes(const Quiver& q, int d) {
  auto cycles = enumerate_cycles(q, d);
  std::map<std::vector<int>, std::set<std::vector<int>>> classes;
  for (const auto& c : cycles) {
    std::vector<int> best = c;
    std::set<std::vector<int>> rots;
    std::vector<int> r = c;
    for (std::size_t k = 0; k < c.size(); ++k) {
      rots.insert(r);
      if (r < best) best = r;
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    classes[best] = std::move(rots);
  }
  std::vector<std::vector<Path>> out;
  for (const auto& [key, rots] : classes) {
    std::vector<Path> cls;
    for (const auto& arrows : rots) {
      Path p;
      p.start = q.arrow(arrows.front()).src;
      p.arrows = arrows;
      cls.push_back(std::move(p));
    }
    out.push_back(std::move(cls));
  }
  return out;
}

namespace {

Fp draw_nonzero(std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t x = rng() % Fp::P;
    if (x) return Fp(static_cast<std::int64_t>(x));
  }
}

std::int64_t sat64(const BigInt& v) {
  if (v.fits_int64()) return v.to_int64();
  return v < BigInt(0) ? std::numeric_limits<std::int64_t>::min() : std::numeric_limits<std::int64_t>::max();
}

std::optional<TrialMismatch> first_series_mismatch(const MatrixSeries<BigInt>& predicted,
                                                   const MatrixSeries<std::int64_t>& actual, int D) {
  for (int n = 0; n <= D; ++n)
    for (Eigen::Index i = 0; i < actual.at(n).rows(); ++i)
      for (Eigen::Index j = 0; j < actual.at(n).cols(); ++j) {
        BigInt have(actual.at(n)(i, j));
        const BigInt& want = predicted.at(n)(i, j);
        if (have != want)
          return TrialMismatch{n, static_cast<int>(i), static_cast<int>(j), sat64(want),
                               actual.at(n)(i, j)};
      }
  return std::nullopt;
}

std::vector<PathElement<Fp>> derived_relations(const PathElement<Fp>& omega, const Quiver& q) {
  std::vector<PathElement<Fp>> rels;
  for (int a = 0; a < q.arrow_count(); ++a) {
    auto r = cyclic_derivative(omega, a, q);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  return rels;
}

}  // namespace

PathElement<Fp> generic_superpotential(const Quiver& q, int d, std::uint64_t seed) {
  auto classes = cycle_rotation_classes(q, d);
  if (classes.empty())
    throw std::invalid_argument("generic_superpotential: the quiver has no closed paths of length " +
                                std::to_string(d));
  std::mt19937_64 rng(seed);
  PathElement<Fp> omega;
  for (const auto& cls : classes) {
    Fp c = draw_nonzero(rng);
    for (const auto& p : cls) omega.add(p, c);
  }
  return omega;
}

TrialResult superpotential_match(const CYType& t, const PathElement<Fp>& omega, int D) {
  TrialResult tr;
  auto rels = derived_relations(omega, t.quiver);
  MatrixSeries<std::int64_t> H =
      quotient_hilbert(t.quiver, rels, D, MonomialOrder::standard(t.quiver.arrow_count()));
  MatrixSeries<BigInt> predicted = invert_series(build_p(t).convert<BigInt>(), D);
  tr.first_mismatch = first_series_mismatch(predicted, H, D);
  tr.match = !tr.first_mismatch.has_value();
  return tr;
}

SuperpotentialReport superpotential_cy_test(const CYType& t, int trials, int D, std::uint64_t seed) {
  if (!mat_eq(t.P, identity_imat(t.P.rows())))
    throw std::invalid_argument("superpotential_cy_test: requires P = I");
  if (trials < 1) throw std::invalid_argument("superpotential_cy_test: trials must be positive");

  SuperpotentialReport rep;
  rep.trials = trials;
  rep.truncation = D;
  auto classes = cycle_rotation_classes(t.quiver, t.d);
  MatrixSeries<BigInt> predicted = invert_series(build_p(t).convert<BigInt>(), D);

  for (int k = 0; k < trials; ++k) {
    std::uint64_t ts = seed * 1000003ULL + static_cast<std::uint64_t>(k);
    TrialResult tr;
    tr.seed = ts;
    if (classes.empty()) {
      tr.match = false;
      tr.note = "no closed paths of length " + std::to_string(t.d) + "; relations cannot exist";
    } else {
      PathElement<Fp> omega = generic_superpotential(t.quiver, t.d, ts);
      auto rels = derived_relations(omega, t.quiver);
      MatrixSeries<std::int64_t> H =
          quotient_hilbert(t.quiver, rels, D, MonomialOrder::standard(t.quiver.arrow_count()));
      tr.first_mismatch = first_series_mismatch(predicted, H, D);
      tr.match = !tr.first_mismatch.has_value();
    }
    if (tr.match) ++rep.match_count;
    rep.results.push_back(std::move(tr));
  }
  rep.majority_match = 2 * rep.match_count > trials;
  return rep;
}

SubquiverSeriesVerdict subquiver_series_check(const CYType& t, int num_seeds) {
  SubquiverSeriesVerdict v;
  int m = t.m();
  if (t.d != 3 || !mat_eq(t.P, identity_imat(m))) {
    v.status = FilterStatus::not_applicable;
    v.detail = "requires P = I and d = 3";
    return v;
  }
  if (m < 2) {
    v.status = FilterStatus::pass;
    v.detail = "no proper subquivers";
    return v;
  }
  if (num_seeds < 1) throw std::invalid_argument("subquiver_series_check: num_seeds must be positive");

  const int D = t.d + 1;
  MatrixSeries<BigInt> predicted = invert_series(build_p(t).convert<BigInt>(), D);

  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> verts;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) verts.push_back(i);
    Subquiver sub = full_subquiver(t.quiver, verts);
    auto classes = cycle_rotation_classes(sub.quiver, t.d);
    int sm = static_cast<int>(verts.size());

    // entrywise minimum over seeds: generic behaviour, shielded from thin
    // coefficient strata (a cycle-free restriction needs no sampling). The
    // sample space is cyclic elements, one coefficient per rotation class:
    // restrictions of superpotential algebras are cut out by relations of
    // that shape, and per-walk coefficients would overshoot the genericity
    // and undercount the quotient.
    std::vector<Mat<std::int64_t>> lower;
    int seeds = classes.empty() ? 1 : num_seeds;
    for (int sd = 0; sd < seeds; ++sd) {
      std::vector<PathElement<Fp>> rels;
      if (!classes.empty()) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(mask) * 1000003ULL + static_cast<std::uint64_t>(sd));
        PathElement<Fp> omega;
        for (const auto& cls : classes) {
          Fp c = draw_nonzero(rng);
          for (const auto& p : cls) omega.add(p, c);
        }
        rels = derived_relations(omega, sub.quiver);
      }
      MatrixSeries<std::int64_t> H =
          quotient_hilbert(sub.quiver, rels, D, MonomialOrder::standard(sub.quiver.arrow_count()));
      if (lower.empty()) {
        lower.assign(H.H.begin(), H.H.end());
      } else {
        for (int n = 0; n <= D; ++n)
          lower[static_cast<std::size_t>(n)] =
              lower[static_cast<std::size_t>(n)].cwiseMin(H.at(n));
      }
    }

    for (int n = 0; n <= D; ++n)
      for (int i = 0; i < sm; ++i)
        for (int j = 0; j < sm; ++j) {
          BigInt have(lower[static_cast<std::size_t>(n)](i, j));
          const BigInt& allow = predicted.at(n)(verts[static_cast<std::size_t>(i)],
                                                verts[static_cast<std::size_t>(j)]);
          if (have > allow) {
            v.status = FilterStatus::fail;
            std::ostringstream os;
            os << "restriction to vertices {";
            for (std::size_t k = 0; k < verts.size(); ++k) os << (k ? "," : "") << verts[k] + 1;
            os << "} forces at least " << have << " paths of degree " << n << " from vertex "
               << verts[static_cast<std::size_t>(i)] + 1 << " to vertex "
               << verts[static_cast<std::size_t>(j)] + 1 << "; the predictive series allows " << allow;
            v.detail = os.str();
            return v;
          }
        }
  }
  v.status = FilterStatus::pass;
  return v;
}

}  // namespace qcy
