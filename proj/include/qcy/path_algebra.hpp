#pragma once

// Path-algebra elements over an exact field: superpotentials and their cyclic
// derivatives, arrow-level automorphisms with homological determinant, generic
// superpotential sampling over F_p, and Hilbert-series comparisons against the
// predictive series of a type.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcy/fp.hpp"
#include "qcy/growth.hpp"
#include "qcy/matrix_poly.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

// A composable arrow sequence. Paths compose left to right: the target of
// arrows[k] is the source of arrows[k+1]. The start vertex carries the
// trivial path e_i; for nonempty paths it must equal the first arrow's source.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  int degree() const { return static_cast<int>(arrows.size()); }
  int source() const { return start; }
  int target(const Quiver& q) const { return arrows.empty() ? start : q.arrow(arrows.back()).dst; }
  bool composable_in(const Quiver& q) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.start == b.start && a.arrows == b.arrows;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

  // storage order for term maps; monomial comparisons live in MonomialOrder
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.start != b.start) return a.start < b.start;
    return a.arrows < b.arrows;
  }
};

std::string path_to_string(const Path& p);

bool composable(const Path& a, const Path& b, const Quiver& q);
Path concat(const Path& a, const Path& b, const Quiver& q);

// Finitely supported map path -> nonzero scalar.
template <typename F>
class PathElement {
public:
  PathElement() = default;

  static PathElement term(Path p, F c) {
    PathElement w;
    w.add(std::move(p), std::move(c));
    return w;
  }

  void add(Path p, const F& c) {
    if (c == F(0)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(p), c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second == F(0)) terms_.erase(it);
    }
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Path, F>& terms() const { return terms_; }

  // the common degree of all terms; nullopt when zero or inhomogeneous
  std::optional<int> homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree();
    for (const auto& [p, c] : terms_)
      if (p.degree() != d) return std::nullopt;
    return d;
  }

  // the common (source, target) of all terms; nullopt when zero or mixed
  std::optional<std::pair<int, int>> block(const Quiver& q) const {
    if (terms_.empty()) return std::nullopt;
    int i = terms_.begin()->first.source();
    int j = terms_.begin()->first.target(q);
    for (const auto& [p, c] : terms_)
      if (p.source() != i || p.target(q) != j) return std::nullopt;
    return std::make_pair(i, j);
  }

  friend PathElement operator+(const PathElement& a, const PathElement& b) {
    PathElement r = a;
    for (const auto& [p, c] : b.terms_) r.add(p, c);
    return r;
  }

  friend PathElement operator-(const PathElement& a) {
    PathElement r;
    for (const auto& [p, c] : a.terms_) r.terms_.emplace(p, -c);
    return r;
  }

  friend PathElement operator-(const PathElement& a, const PathElement& b) { return a + (-b); }

  friend PathElement operator*(const F& s, const PathElement& a) {
    PathElement r;
    if (s == F(0)) return r;
    for (const auto& [p, c] : a.terms_) r.add(p, s * c);
    return r;
  }

  PathElement& operator+=(const PathElement& o) { return *this = *this + o; }
  PathElement& operator-=(const PathElement& o) { return *this = *this - o; }

  friend bool operator==(const PathElement& a, const PathElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PathElement& a, const PathElement& b) { return !(a == b); }

private:
  std::map<Path, F> terms_;
};

// path-algebra product; incomposable pairs contribute zero
template <typename F>
PathElement<F> mul(const PathElement<F>& a, const PathElement<F>& b, const Quiver& q) {
  PathElement<F> r;
  for (const auto& [pa, ca] : a.terms())
    for (const auto& [pb, cb] : b.terms())
      if (composable(pa, pb, q)) r.add(concat(pa, pb, q), ca * cb);
  return r;
}

// left strip: terms beginning with the arrow keep their remainder
template <typename F>
PathElement<F> cyclic_derivative(const PathElement<F>& w, int arrow, const Quiver& q) {
  PathElement<F> r;
  for (const auto& [p, c] : w.terms()) {
    if (p.arrows.empty() || p.arrows.front() != arrow) continue;
    Path s;
    s.start = q.arrow(arrow).dst;
    s.arrows.assign(p.arrows.begin() + 1, p.arrows.end());
    r.add(std::move(s), c);
  }
  return r;
}

// right strip: terms ending with the arrow keep their front
template <typename F>
PathElement<F> right_derivative(const PathElement<F>& w, int arrow) {
  PathElement<F> r;
  for (const auto& [p, c] : w.terms()) {
    if (p.arrows.empty() || p.arrows.back() != arrow) continue;
    Path s;
    s.start = p.start;
    s.arrows.assign(p.arrows.begin(), p.arrows.end() - 1);
    r.add(std::move(s), c);
  }
  return r;
}

// Degree-preserving automorphism data: a vertex permutation together with,
// for each arrow, its image as a linear combination of arrows between the
// permuted endpoints.
template <typename F>
struct ArrowMap {
  std::vector<int> vertex_image;
  std::vector<std::vector<std::pair<int, F>>> arrow_image;

  static ArrowMap identity(const Quiver& q) {
    ArrowMap s;
    s.vertex_image.resize(static_cast<std::size_t>(q.vertex_count()));
    for (int i = 0; i < q.vertex_count(); ++i) s.vertex_image[static_cast<std::size_t>(i)] = i;
    s.arrow_image.resize(static_cast<std::size_t>(q.arrow_count()));
    for (int a = 0; a < q.arrow_count(); ++a)
      s.arrow_image[static_cast<std::size_t>(a)] = {{a, F(1)}};
    return s;
  }

  // one-vertex quiver whose loops transform by the matrix: loop i maps to
  // sum_j mat[i][j] * loop j
  static ArrowMap on_loops(const std::vector<std::vector<F>>& mat) {
    ArrowMap s;
    s.vertex_image = {0};
    s.arrow_image.resize(mat.size());
    for (std::size_t i = 0; i < mat.size(); ++i)
      for (std::size_t j = 0; j < mat[i].size(); ++j)
        if (!(mat[i][j] == F(0))) s.arrow_image[i].push_back({static_cast<int>(j), mat[i][j]});
    return s;
  }
};

template <typename F>
PathElement<F> arrow_image_element(const ArrowMap<F>& s, int arrow, const Quiver& q) {
  PathElement<F> r;
  for (const auto& [b, c] : s.arrow_image[static_cast<std::size_t>(arrow)]) {
    Path p;
    p.start = q.arrow(b).src;
    p.arrows = {b};
    r.add(std::move(p), c);
  }
  return r;
}

// the induced algebra map: e_i -> e_{sigma(i)}, arrows expand multiplicatively
template <typename F>
PathElement<F> apply_arrow_map(const ArrowMap<F>& s, const PathElement<F>& w, const Quiver& q) {
  PathElement<F> r;
  for (const auto& [p, c] : w.terms()) {
    Path e;
    e.start = s.vertex_image[static_cast<std::size_t>(p.start)];
    PathElement<F> acc = PathElement<F>::term(e, c);
    for (int a : p.arrows) acc = mul(acc, arrow_image_element(s, a, q), q);
    r += acc;
  }
  return r;
}

// a1 a2 ... ad -> sigma(ad) a1 ... a_{d-1}; degree-0 terms are fixed
template <typename F>
PathElement<F> twisted_rotation(const PathElement<F>& w, const ArrowMap<F>& s, const Quiver& q) {
  PathElement<F> r;
  for (const auto& [p, c] : w.terms()) {
    if (p.arrows.empty()) {
      r.add(p, c);
      continue;
    }
    Path front;
    front.start = p.start;
    front.arrows.assign(p.arrows.begin(), p.arrows.end() - 1);
    PathElement<F> rest = PathElement<F>::term(front, c);
    r += mul(arrow_image_element(s, p.arrows.back(), q), rest, q);
  }
  return r;
}

template <typename F>
bool is_twisted_superpotential(const PathElement<F>& w, const ArrowMap<F>& s, const Quiver& q) {
  return twisted_rotation(w, s, q) == w;
}

// proportionality scalar of sigma(w) against w; nullopt when sigma(w) is not
// a nonzero multiple of w
template <typename F>
std::optional<F> hdet_of(const ArrowMap<F>& s, const PathElement<F>& w, const Quiver& q) {
  if (w.is_zero()) return std::nullopt;
  PathElement<F> img = apply_arrow_map(s, w, q);
  const auto& [p0, c0] = *w.terms().begin();
  auto it = img.terms().find(p0);
  if (it == img.terms().end()) return std::nullopt;
  F lambda = it->second / c0;
  if (img == lambda * w) return lambda;
  return std::nullopt;
}

// rank of the span inside the free coefficient space on the union of supports
template <typename F>
int span_rank(std::vector<PathElement<F>> elems) {
  std::map<Path, std::size_t> index;
  for (const auto& e : elems)
    for (const auto& [p, c] : e.terms()) index.try_emplace(p, index.size());
  std::vector<std::vector<F>> rows;
  for (const auto& e : elems) {
    if (e.is_zero()) continue;
    std::vector<F> row(index.size(), F(0));
    for (const auto& [p, c] : e.terms()) row[index.at(p)] = c;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t col = 0;
  for (; col < index.size() && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][col] == F(0)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[piv]);
    const F inv = F(1) / rows[static_cast<std::size_t>(rank)][col];
    for (std::size_t j = col; j < index.size(); ++j)
      rows[static_cast<std::size_t>(rank)][j] = rows[static_cast<std::size_t>(rank)][j] * inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const F f = rows[r][col];
      if (f == F(0)) continue;
      for (std::size_t j = col; j < index.size(); ++j)
        rows[r][j] = rows[r][j] - f * rows[static_cast<std::size_t>(rank)][j];
    }
    ++rank;
  }
  return rank;
}

// The full subquiver on a vertex subset, with the arrow correspondence to the
// ambient quiver.
struct Subquiver {
  Quiver quiver;
  std::vector<int> vertices;          // subquiver vertex -> ambient vertex
  std::vector<int> arrow_to_parent;   // subquiver arrow id -> ambient arrow id
  std::vector<int> arrow_from_parent; // ambient arrow id -> subquiver id, -1 outside
};

Subquiver full_subquiver(const Quiver& q, const std::vector<int>& vertices);

// kills every term that touches a vertex or arrow outside the subquiver
template <typename F>
PathElement<F> project_to_subquiver(const Subquiver& s, const PathElement<F>& w) {
  std::vector<int> vertex_index;
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    int v = s.vertices[i];
    if (v >= static_cast<int>(vertex_index.size())) vertex_index.resize(static_cast<std::size_t>(v) + 1, -1);
    vertex_index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  PathElement<F> r;
  for (const auto& [p, c] : w.terms()) {
    if (p.start >= static_cast<int>(vertex_index.size()) || vertex_index[static_cast<std::size_t>(p.start)] < 0)
      continue;
    Path q2;
    q2.start = vertex_index[static_cast<std::size_t>(p.start)];
    bool ok = true;
    for (int a : p.arrows) {
      int b = s.arrow_from_parent[static_cast<std::size_t>(a)];
      if (b < 0) {
        ok = false;
        break;
      }
      q2.arrows.push_back(b);
    }
    if (ok) r.add(std::move(q2), c);
  }
  return r;
}

// rotation classes of closed paths of the given length: each class lists the
// distinct rotations of one cycle; classes and members are sorted
std::vector<std::vector<Path>> cycle_rotation_classes(const Quiver& q, int d);

// one uniformly random nonzero F_p coefficient per rotation class, the class
// expanded as the sum over its distinct rotations; deterministic given seed
PathElement<Fp> generic_superpotential(const Quiver& q, int d, std::uint64_t seed);

struct TrialMismatch {
  int degree = 0;
  int i = 0;  // 0-based entry of the series matrix
  int j = 0;
  std::int64_t predicted = 0;
  std::int64_t actual = 0;
};

struct TrialResult {
  std::uint64_t seed = 0;
  bool match = false;
  std::optional<TrialMismatch> first_mismatch;
  std::string note;
};

struct SuperpotentialReport {
  int trials = 0;
  int truncation = 0;
  std::vector<TrialResult> results;
  int match_count = 0;
  bool majority_match = false;
};

// Generic-superpotential comparison against the predictive series h = p^{-1}:
// per trial, derive relations from a fresh random superpotential, count the
// quotient's dimensions to degree D, and report the first mismatch. Requires
// P = I; the twisted analogue has no genericity theorem to lean on.
SuperpotentialReport superpotential_cy_test(const CYType& t, int trials, int D, std::uint64_t seed);

// single comparison for an explicitly given superpotential
TrialResult superpotential_match(const CYType& t, const PathElement<Fp>& omega, int D);

struct SubquiverSeriesVerdict {
  FilterStatus status = FilterStatus::pass;
  std::string detail;
};

// Restriction test on every proper full subquiver: a generic restricted
// superpotential's quotient can only shrink dimensions below the predictive
// series of the ambient type, so any excess eliminates the type. Applies to
// P = I, d = 3 only.
SubquiverSeriesVerdict subquiver_series_check(const CYType& t, int num_seeds = 3);

}  // namespace qcy
