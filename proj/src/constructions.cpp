#include "qcy/constructions.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <json.hpp>

namespace qcy {

namespace {

CycQ cyc(std::int64_t v) { return CycQ(v); }

CycQ zeta6(long p) { return CycQ::zeta(6, p); }

IMat im(const std::vector<std::vector<std::int64_t>>& rows) {
  IMat m(static_cast<Eigen::Index>(rows.size()),
         static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

// one word per element reachable from the identity by right-multiplying
// generators, breadth first; positions index into gens
std::vector<std::vector<int>> bfs_words(const std::vector<std::vector<int>>& mul,
                                        const std::vector<int>& gens) {
  std::size_t n = mul.size();
  std::vector<std::vector<int>> words(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> queue;
  queue.push_back(0);
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int y = mul[static_cast<std::size_t>(x)][static_cast<std::size_t>(gens[k])];
      if (seen[static_cast<std::size_t>(y)]) continue;
      seen[static_cast<std::size_t>(y)] = true;
      words[static_cast<std::size_t>(y)] = words[static_cast<std::size_t>(x)];
      words[static_cast<std::size_t>(y)].push_back(static_cast<int>(k));
      queue.push_back(y);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("bfs_words: generators do not generate the group");
  return words;
}

std::size_t characters_size_check(const GroupData& g, const std::vector<CycQ>& v) {
  if (v.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("per-element value vector must have one entry per group element");
  return v.size();
}

std::vector<int> inverses_of(const std::vector<std::vector<int>>& mul) {
  std::size_t n = mul.size();
  std::vector<int> inv(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (mul[i][j] == 0 && mul[j][i] == 0) {
        inv[i] = static_cast<int>(j);
        break;
      }
    if (inv[i] < 0) throw std::invalid_argument("group table has a non-invertible element");
  }
  return inv;
}

}  // namespace

std::vector<int> GroupData::degrees() const {
  std::vector<int> d;
  d.reserve(characters.size());
  for (const auto& chi : characters) {
    Rational r = chi[0].rational_part();
    if (!r.den().is_one()) throw std::logic_error("character degree is not an integer");
    d.push_back(static_cast<int>(r.num().to_int64()));
  }
  return d;
}

void GroupData::validate() const {
  std::size_t n = mul.size();
  if (n == 0) throw std::invalid_argument("empty group");
  for (const auto& row : mul) {
    if (row.size() != n) throw std::invalid_argument("multiplication table is not square");
    for (int v : row)
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw std::invalid_argument("multiplication table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (mul[0][i] != static_cast<int>(i) || mul[i][0] != static_cast<int>(i))
      throw std::invalid_argument("element 0 is not an identity");
  if (inverse.size() != n) throw std::invalid_argument("inverse table size mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = static_cast<std::size_t>(inverse[i]);
    if (mul[i][j] != 0 || mul[j][i] != 0) throw std::invalid_argument("wrong inverse entry");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[static_cast<std::size_t>(mul[a][b])][c] !=
            mul[a][static_cast<std::size_t>(mul[b][c])])
          throw std::invalid_argument("multiplication table is not associative");
  // every element order divides the declared exponent
  for (std::size_t g = 0; g < n; ++g) {
    int acc = 0;
    for (int k = 0; k < exponent; ++k) acc = mul[static_cast<std::size_t>(acc)][g];
    if (acc != 0) throw std::invalid_argument("declared exponent is not an exponent");
  }
  if (element_words.size() != n) throw std::invalid_argument("element_words size mismatch");
  for (std::size_t g = 0; g < n; ++g) {
    int acc = 0;
    for (int k : element_words[g]) {
      if (k < 0 || static_cast<std::size_t>(k) >= generators.size())
        throw std::invalid_argument("element word refers to a missing generator");
      acc = mul[static_cast<std::size_t>(acc)][static_cast<std::size_t>(generators[static_cast<std::size_t>(k)])];
    }
    if (acc != static_cast<int>(g)) throw std::invalid_argument("element word does not reproduce its element");
  }
  if (characters.empty()) throw std::invalid_argument("no characters");
  for (const auto& chi : characters)
    if (chi.size() != n) throw std::invalid_argument("character row size mismatch");
  Rational order_r(static_cast<std::int64_t>(n));
  for (std::size_t k = 0; k < characters.size(); ++k)
    for (std::size_t l = 0; l < characters.size(); ++l) {
      CycQ acc;
      for (std::size_t g = 0; g < n; ++g)
        acc += characters[k][g] * characters[l][static_cast<std::size_t>(inverse[g])];
      CycQ expect = (k == l) ? CycQ(order_r) : CycQ();
      if (acc != expect) throw std::invalid_argument("characters are not orthonormal");
    }
  std::int64_t sq = 0;
  for (int d : degrees()) sq += static_cast<std::int64_t>(d) * d;
  if (sq != static_cast<std::int64_t>(n))
    throw std::invalid_argument("squared character degrees do not sum to the order");
}

const GroupData& GroupData::z2() {
  static const GroupData g = [] {
    GroupData r;
    r.name = "Z2";
    r.exponent = 2;
    r.element_names = {"e", "g"};
    r.mul = {{0, 1}, {1, 0}};
    r.inverse = {0, 1};
    r.generators = {1};
    r.element_words = {{}, {0}};
    r.characters = {{cyc(1), cyc(1)}, {cyc(1), cyc(-1)}};
    r.character_names = {"chi1", "chi2"};
    for (std::size_t k = 0; k < r.character_names.size(); ++k)
      r.character_lookup[r.character_names[k]] = static_cast<int>(k);
    return r;
  }();
  return g;
}

const GroupData& GroupData::z3() {
  static const GroupData g = [] {
    GroupData r;
    r.name = "Z3";
    r.exponent = 3;
    r.element_names = {"e", "g", "g^2"};
    r.mul.assign(3, std::vector<int>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % 3;
    r.inverse = {0, 2, 1};
    r.generators = {1};
    r.element_words = {{}, {0}, {0, 0}};
    for (int k = 0; k < 3; ++k) {
      std::vector<CycQ> chi;
      for (int j = 0; j < 3; ++j) chi.push_back(CycQ::zeta(3, static_cast<long>(k) * j));
      r.characters.push_back(std::move(chi));
    }
    r.character_names = {"chi1", "chi2", "chi3"};
    for (std::size_t k = 0; k < r.character_names.size(); ++k)
      r.character_lookup[r.character_names[k]] = static_cast<int>(k);
    return r;
  }();
  return g;
}

const GroupData& GroupData::s3() {
  static const GroupData g = [] {
    GroupData r;
    r.name = "S3";
    r.exponent = 6;
    // permutations of {0,1,2}; composition acts on the left
    const std::array<std::array<int, 3>, 6> perm = {{{0, 1, 2},
                                                     {1, 2, 0},
                                                     {2, 0, 1},
                                                     {1, 0, 2},
                                                     {2, 1, 0},
                                                     {0, 2, 1}}};
    r.element_names = {"e", "s", "s^2", "t", "st", "s^2 t"};
    auto index_of = [&](const std::array<int, 3>& p) {
      for (std::size_t k = 0; k < perm.size(); ++k)
        if (perm[k] == p) return static_cast<int>(k);
      throw std::logic_error("S3: unknown permutation");
    };
    r.mul.assign(6, std::vector<int>(6));
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        std::array<int, 3> c{};
        for (int x = 0; x < 3; ++x)
          c[static_cast<std::size_t>(x)] = perm[i][static_cast<std::size_t>(perm[j][static_cast<std::size_t>(x)])];
        r.mul[i][j] = index_of(c);
      }
    r.inverse = inverses_of(r.mul);
    r.generators = {1, 3};  // s = (123), t = (12)
    r.element_words = bfs_words(r.mul, r.generators);
    // class of each element: 0 = identity, 1 = 3-cycles, 2 = transpositions
    const std::array<int, 6> cls = {0, 1, 1, 2, 2, 2};
    auto by_class = [&](std::int64_t on_e, std::int64_t on_3cyc, std::int64_t on_swap) {
      std::vector<CycQ> chi;
      const std::array<std::int64_t, 3> v = {on_e, on_3cyc, on_swap};
      for (std::size_t i = 0; i < 6; ++i) chi.push_back(cyc(v[static_cast<std::size_t>(cls[i])]));
      return chi;
    };
    r.characters = {by_class(2, -1, 0), by_class(1, 1, -1), by_class(1, 1, 1)};
    r.character_names = {"chi1", "chi2", "chi3"};
    for (std::size_t k = 0; k < r.character_names.size(); ++k)
      r.character_lookup[r.character_names[k]] = static_cast<int>(k);
    return r;
  }();
  return g;
}

const GroupData& GroupData::z6z6_semidirect() {
  static const GroupData g = [] {
    GroupData r;
    r.name = "(Z6xZ6):Z2";
    r.exponent = 12;
    // elements l^a s^b t^c with l central of order 6, s of order 6, t of
    // order 2 and t s t = l^-1 s^-1; index = (a*6 + b)*2 + c
    auto idx = [](int a, int b, int c) { return ((((a % 6) + 6) % 6) * 6 + (((b % 6) + 6) % 6)) * 2 + (((c % 2) + 2) % 2); };
    r.element_names.resize(72);
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 2; ++c) {
          std::ostringstream os;
          os << "l^" << a << " s^" << b << " t^" << c;
          r.element_names[static_cast<std::size_t>(idx(a, b, c))] = os.str();
        }
    r.mul.assign(72, std::vector<int>(72));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b)
        for (int c = 0; c < 2; ++c)
          for (int a2 = 0; a2 < 6; ++a2)
            for (int b2 = 0; b2 < 6; ++b2)
              for (int c2 = 0; c2 < 2; ++c2) {
                int p = (c == 0) ? idx(a + a2, b + b2, c2) : idx(a + a2 - b2, b - b2, 1 + c2);
                r.mul[static_cast<std::size_t>(idx(a, b, c))][static_cast<std::size_t>(idx(a2, b2, c2))] = p;
              }
    r.inverse = inverses_of(r.mul);
    r.generators = {idx(0, 1, 0), idx(0, 0, 1), idx(1, 0, 0)};  // s, t, l
    r.element_words = bfs_words(r.mul, r.generators);
    // 12 linear characters: (a,b,c) -> zeta6^{u(b-2a)} * eps^c
    for (int u = 0; u < 6; ++u)
      for (int eps = 0; eps < 2; ++eps) {
        std::vector<CycQ> chi(72);
        for (int a = 0; a < 6; ++a)
          for (int b = 0; b < 6; ++b)
            for (int c = 0; c < 2; ++c) {
              CycQ v = zeta6(static_cast<long>(u) * (b - 2 * a));
              if (eps == 1 && c == 1) v = -v;
              chi[static_cast<std::size_t>(idx(a, b, c))] = v;
            }
        std::ostringstream os;
        os << "lin(" << u << "," << (eps == 0 ? "+" : "-") << ")";
        r.character_names.push_back(os.str());
        r.characters.push_back(std::move(chi));
      }
    // 15 induced characters from Z6xZ6 orbits {(p,q),(p,-p-q)}, zero off the
    // subgroup; orbit keys collected in lex order
    std::vector<std::pair<int, int>> keys;
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) {
        if ((p + 2 * q) % 6 == 0) continue;  // extends to the whole group
        int q2 = ((-p - q) % 6 + 6) % 6;
        std::pair<int, int> key = std::min(std::make_pair(p, q), std::make_pair(p, q2));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
      }
    std::sort(keys.begin(), keys.end());
    if (keys.size() != 15) throw std::logic_error("expected 15 induced characters");
    for (auto [p, q] : keys) {
      int q2 = ((-p - q) % 6 + 6) % 6;
      std::vector<CycQ> chi(72);
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
          chi[static_cast<std::size_t>(idx(a, b, 0))] =
              zeta6(static_cast<long>(p) * a) * (zeta6(static_cast<long>(q) * b) + zeta6(static_cast<long>(q2) * b));
          chi[static_cast<std::size_t>(idx(a, b, 1))] = CycQ();
        }
      std::ostringstream os;
      os << "ind(" << p << "," << q << ")";
      r.character_names.push_back(os.str());
      r.characters.push_back(std::move(chi));
    }
    for (std::size_t k = 0; k < r.character_names.size(); ++k)
      r.character_lookup[r.character_names[k]] = static_cast<int>(k);
    // the defining two-dimensional representation and the lambda-faithful
    // component it generates
    r.character_lookup["V"] = r.character_lookup.at("ind(0,1)");
    r.character_lookup["W0"] = r.character_lookup.at("ind(1,0)");
    r.character_lookup["W1"] = r.character_lookup.at("ind(1,1)");
    r.character_lookup["W2"] = r.character_lookup.at("ind(1,2)");
    return r;
  }();
  return g;
}

std::vector<CycQ> character_of(const GroupData& g, const Representation& rho) {
  if (rho.parts.empty()) throw std::invalid_argument("empty representation");
  std::vector<CycQ> chi(static_cast<std::size_t>(g.order()));
  for (int part : rho.parts) {
    if (part < 1 || static_cast<std::size_t>(part) > g.characters.size())
      throw std::invalid_argument("representation part out of range");
    const auto& row = g.characters[static_cast<std::size_t>(part - 1)];
    for (std::size_t i = 0; i < chi.size(); ++i) chi[i] += row[i];
  }
  return chi;
}

std::vector<CycQ> character_from_generator_values(const GroupData& g,
                                                  const std::vector<CycQ>& on_generators) {
  if (on_generators.size() != g.generators.size())
    throw std::invalid_argument("one value per generator required");
  std::vector<CycQ> out(static_cast<std::size_t>(g.order()), cyc(1));
  for (std::size_t e = 0; e < out.size(); ++e)
    for (int k : g.element_words[e]) out[e] *= on_generators[static_cast<std::size_t>(k)];
  return out;
}

IMat mckay_matrix(const GroupData& g, const std::vector<CycQ>& rho_character) {
  std::size_t n = characters_size_check(g, rho_character);
  std::size_t m = g.characters.size();
  IMat M(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  CycQ inv_order(Rational(BigInt(1), BigInt(static_cast<std::int64_t>(n))));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      CycQ acc;
      for (std::size_t e = 0; e < n; ++e)
        acc += rho_character[e] * g.characters[j][e] *
               g.characters[i][static_cast<std::size_t>(g.inverse[e])];
      acc *= inv_order;
      if (!acc.is_rational()) throw std::domain_error("McKay multiplicity is not rational");
      Rational r = acc.rational_part();
      if (!r.den().is_one()) throw std::domain_error("McKay multiplicity is not an integer");
      std::int64_t v = r.num().to_int64();
      if (v < 0) throw std::domain_error("McKay multiplicity is negative");
      M(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  if (!mat_eq(IMat(M * M.transpose()), IMat(M.transpose() * M)))
    throw std::logic_error("McKay matrix is not normal");
  return M;
}

IMat mckay_matrix(const GroupData& g, const Representation& rho) {
  return mckay_matrix(g, character_of(g, rho));
}

IMat winding_vertex_permutation(const GroupData& g, const std::vector<CycQ>& hdet) {
  std::size_t n = characters_size_check(g, hdet);
  if (hdet[0] != cyc(1)) throw std::invalid_argument("hdet must send the identity to 1");
  for (const CycQ& v : hdet)
    if (v.is_zero()) throw std::invalid_argument("hdet must be nonzero everywhere");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (hdet[static_cast<std::size_t>(g.mul[a][b])] != hdet[a] * hdet[b])
        throw std::invalid_argument("hdet is not multiplicative");
  std::size_t m = g.characters.size();
  std::vector<int> mu(m, -1);
  std::vector<bool> hit(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<CycQ> target(n);
    for (std::size_t e = 0; e < n; ++e)
      target[e] = g.characters[i][e] * hdet[static_cast<std::size_t>(g.inverse[e])];
    for (std::size_t j = 0; j < m; ++j)
      if (g.characters[j] == target) {
        mu[i] = static_cast<int>(j);
        break;
      }
    if (mu[i] < 0 || hit[static_cast<std::size_t>(mu[i])])
      throw std::invalid_argument("hdet twist does not permute the characters");
    hit[static_cast<std::size_t>(mu[i])] = true;
  }
  return matrix_of_permutation(mu);
}

CYType skew_group_type(const GroupData& g, const std::vector<CycQ>& rho_character,
                       const std::vector<CycQ>& hdet_on_generators, int d,
                       std::optional<int> component_of) {
  IMat M = mckay_matrix(g, rho_character);
  IMat P = winding_vertex_permutation(g, character_from_generator_values(g, hdet_on_generators));
  std::vector<int> mu = permutation_of_matrix(P);
  Eigen::Index m = M.rows();
  if (!component_of.has_value()) {
    if (!Quiver(M).connected())
      throw std::invalid_argument("McKay quiver is disconnected; pass component_of");
    return make_type(M, P, d);
  }
  int seed = *component_of;
  if (seed < 0 || seed >= static_cast<int>(m)) throw std::invalid_argument("component seed out of range");
  // breadth-first vertex order within the undirected component, neighbors
  // visited in ascending index
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::deque<int> queue;
  seen[static_cast<std::size_t>(seed)] = true;
  queue.push_back(seed);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w = 0; w < static_cast<int>(m); ++w) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      if (M(v, w) == 0 && M(w, v) == 0) continue;
      seen[static_cast<std::size_t>(w)] = true;
      queue.push_back(w);
    }
  }
  for (int v : order)
    if (!seen[static_cast<std::size_t>(mu[static_cast<std::size_t>(v)])])
      throw std::invalid_argument("winding permutation does not preserve the component");
  Eigen::Index k = static_cast<Eigen::Index>(order.size());
  IMat Ms(k, k), Ps(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      Ms(i, j) = M(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
      Ps(i, j) = P(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
  return make_type(Ms, Ps, d);
}

CYType skew_group_type(const GroupData& g, const Representation& rho,
                       const std::vector<CycQ>& hdet_on_generators, int d,
                       std::optional<int> component_of) {
  return skew_group_type(g, character_of(g, rho), hdet_on_generators, d, component_of);
}

CYType ore_type(const IMat& m_base, const IMat& p_nakayama, const IMat& p_sigma, int d_base) {
  if (d_base != 2)
    throw std::invalid_argument("ore_type: only degree-2 bases are supported");
  if (m_base.rows() != m_base.cols()) throw std::invalid_argument("ore_type: M must be square");
  if (!is_permutation_matrix(p_nakayama) || !is_permutation_matrix(p_sigma) ||
      p_nakayama.rows() != m_base.rows() || p_sigma.rows() != m_base.rows())
    throw std::invalid_argument("ore_type: invalid permutation matrices");
  if (!mat_eq(IMat(m_base * p_nakayama), IMat(p_nakayama * m_base)) ||
      !mat_eq(IMat(m_base * p_sigma), IMat(p_sigma * m_base)))
    throw std::invalid_argument("ore_type: permutations must commute with M");
  IMat p_sigma_inv = p_sigma.transpose();
  IMat M = m_base + p_sigma_inv;
  IMat P = p_nakayama * p_sigma_inv;
  return make_type(M, P, 3);
}

namespace {

struct ProtoArrow {
  int src = 0;
  int dst = 0;
  ArrowOrigin origin = ArrowOrigin::kept;
  int pa = -1;
  int pb = -1;
};

int origin_rank(ArrowOrigin o) {
  switch (o) {
    case ArrowOrigin::composite: return 0;
    case ArrowOrigin::kept: return 1;
    case ArrowOrigin::reversed: return 2;
  }
  return 3;
}

}  // namespace

MutationResult mutate(const Quiver& q, int vertex,
                      const std::optional<PathElement<Fp>>& potential) {
  int m = q.vertex_count();
  if (vertex < 0 || vertex >= m) throw std::invalid_argument("mutate: vertex out of range");
  const IMat& M = q.incidence();
  for (int i = 0; i < m; ++i) {
    if (M(i, i) != 0) throw std::invalid_argument("mutate: quiver has a loop");
    for (int j = i + 1; j < m; ++j)
      if (M(i, j) != 0 && M(j, i) != 0)
        throw std::invalid_argument("mutate: quiver has an oriented 2-cycle");
  }

  std::vector<int> in_v, out_v;
  for (const Arrow& a : q.arrows()) {
    if (a.dst == vertex) in_v.push_back(a.id);
    if (a.src == vertex) out_v.push_back(a.id);
  }

  std::vector<ProtoArrow> proto;
  for (int a : in_v)
    for (int b : out_v)
      proto.push_back({q.arrow(a).src, q.arrow(b).dst, ArrowOrigin::composite, a, b});
  for (const Arrow& a : q.arrows())
    if (a.src != vertex && a.dst != vertex)
      proto.push_back({a.src, a.dst, ArrowOrigin::kept, a.id, -1});
  for (int a : in_v) proto.push_back({vertex, q.arrow(a).src, ArrowOrigin::reversed, a, -1});
  for (int b : out_v) proto.push_back({q.arrow(b).dst, vertex, ArrowOrigin::reversed, b, -1});

  std::sort(proto.begin(), proto.end(), [](const ProtoArrow& x, const ProtoArrow& y) {
    return std::make_tuple(x.src, x.dst, origin_rank(x.origin), x.pa, x.pb) <
           std::make_tuple(y.src, y.dst, origin_rank(y.origin), y.pa, y.pb);
  });
  std::size_t K = proto.size();

  // greedy cancellation of oriented 2-cycles in slot order; every such pair
  // matches a composite with a kept arrow
  std::vector<bool> alive(K, true);
  std::vector<std::array<int, 3>> removed;
  for (std::size_t e = 0; e < K; ++e) {
    if (!alive[e]) continue;
    for (std::size_t f = 0; f < K; ++f) {
      if (f == e || !alive[f]) continue;
      if (proto[f].src != proto[e].dst || proto[f].dst != proto[e].src) continue;
      alive[e] = alive[f] = false;
      const ProtoArrow& comp = proto[e].origin == ArrowOrigin::composite ? proto[e] : proto[f];
      const ProtoArrow& kept = proto[e].origin == ArrowOrigin::composite ? proto[f] : proto[e];
      if (comp.origin != ArrowOrigin::composite || kept.origin != ArrowOrigin::kept)
        throw std::logic_error("mutate: cancelled pair is not composite against kept");
      removed.push_back({comp.pa, comp.pb, kept.pa});
      break;
    }
  }

  std::vector<int> final_of(K, -1);
  std::vector<ProtoArrow> live;
  for (std::size_t k = 0; k < K; ++k)
    if (alive[k]) {
      final_of[k] = static_cast<int>(live.size());
      live.push_back(proto[k]);
    }

  IMat Mnew = IMat::Zero(m, m);
  for (const ProtoArrow& a : live) ++Mnew(a.src, a.dst);
  MutationResult res{Quiver(Mnew), {}, std::move(removed), std::nullopt};
  res.arrows.resize(live.size());
  for (std::size_t k = 0; k < live.size(); ++k) {
    const Arrow& a = res.quiver.arrow(static_cast<int>(k));
    if (a.src != live[k].src || a.dst != live[k].dst)
      throw std::logic_error("mutate: arrow order misaligned with the new quiver");
    res.arrows[k] = {live[k].origin, live[k].pa, live[k].pb};
  }

  if (!potential.has_value()) return res;

  const PathElement<Fp>& w = *potential;
  if (w.homogeneous_degree() != std::optional<int>(3))
    throw std::invalid_argument("mutate: potential must be homogeneous of degree 3");
  for (const auto& [p, c] : w.terms())
    if (p.target(q) != p.source())
      throw std::invalid_argument("mutate: potential terms must be cycles");

  // provisional slot lookups
  std::vector<int> kept_slot(static_cast<std::size_t>(q.arrow_count()), -1);
  std::vector<int> rev_slot(static_cast<std::size_t>(q.arrow_count()), -1);
  std::map<std::pair<int, int>, int> comp_slot;
  for (std::size_t k = 0; k < K; ++k) {
    switch (proto[k].origin) {
      case ArrowOrigin::kept: kept_slot[static_cast<std::size_t>(proto[k].pa)] = static_cast<int>(k); break;
      case ArrowOrigin::reversed: rev_slot[static_cast<std::size_t>(proto[k].pa)] = static_cast<int>(k); break;
      case ArrowOrigin::composite: comp_slot[{proto[k].pa, proto[k].pb}] = static_cast<int>(k); break;
    }
  }
  auto kept = [&](int old_id) {
    int s = kept_slot[static_cast<std::size_t>(old_id)];
    if (s < 0) throw std::logic_error("mutate: expected a kept arrow");
    return s;
  };

  // substitution: cycles through the vertex contract their two incident
  // arrows to the composite; the rotation starting at the vertex is dropped
  PathElement<Fp> acc;
  for (const auto& [p, c] : w.terms()) {
    if (p.start == vertex) continue;
    int k = -1;
    for (int t = 0; t < 3; ++t)
      if (q.arrow(p.arrows[static_cast<std::size_t>(t)]).dst == vertex) {
        k = t;
        break;
      }
    Path np;
    np.start = p.start;
    if (k < 0)
      np.arrows = {kept(p.arrows[0]), kept(p.arrows[1]), kept(p.arrows[2])};
    else if (k == 0)
      np.arrows = {comp_slot.at({p.arrows[0], p.arrows[1]}), kept(p.arrows[2])};
    else if (k == 1)
      np.arrows = {kept(p.arrows[0]), comp_slot.at({p.arrows[1], p.arrows[2]})};
    else
      throw std::logic_error("mutate: cycle through the vertex has no interior visit");
    acc.add(np, c);
  }
  // augmentation [ab] b* a*, expanded over its three rotations
  for (const auto& [pair, slot] : comp_slot) {
    auto [a, b] = pair;
    int ra = rev_slot[static_cast<std::size_t>(a)];
    int rb = rev_slot[static_cast<std::size_t>(b)];
    acc.add(Path{q.arrow(a).src, {slot, rb, ra}}, Fp(1));
    acc.add(Path{q.arrow(b).dst, {rb, ra, slot}}, Fp(1));
    acc.add(Path{vertex, {ra, slot, rb}}, Fp(1));
  }
  // drop terms meeting a cancelled arrow, then renumber
  PathElement<Fp> out;
  for (const auto& [p, c] : acc.terms()) {
    bool dead = false;
    for (int s : p.arrows)
      if (!alive[static_cast<std::size_t>(s)]) {
        dead = true;
        break;
      }
    if (dead) continue;
    Path np;
    np.start = p.start;
    for (int s : p.arrows) np.arrows.push_back(final_of[static_cast<std::size_t>(s)]);
    out.add(np, c);
  }
  if (out.homogeneous_degree() != std::optional<int>(3))
    throw std::logic_error("mutate: transported potential is not homogeneous of degree 3");
  res.potential = std::move(out);
  return res;
}

std::set<std::array<std::int64_t, 3>> markov_tree(int depth) {
  std::set<std::array<std::int64_t, 3>> seen;
  std::array<std::int64_t, 3> root = {3, 3, 3};
  seen.insert(root);
  std::vector<std::array<std::int64_t, 3>> frontier = {root};
  for (int level = 0; level < depth; ++level) {
    std::vector<std::array<std::int64_t, 3>> next;
    for (const auto& t : frontier)
      for (int k = 0; k < 3; ++k) {
        __int128 prod = static_cast<__int128>(t[(k + 1) % 3]) * t[(k + 2) % 3];
        __int128 nv = prod - t[static_cast<std::size_t>(k)];
        if (nv > std::numeric_limits<std::int64_t>::max())
          throw std::overflow_error("markov_tree: entry exceeds 64 bits");
        std::array<std::int64_t, 3> u = t;
        u[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(nv);
        std::sort(u.begin(), u.end());
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return seen;
}

namespace {

using CMat = std::vector<std::vector<CycQ>>;

PathElement<CycQ> loops_element(const std::vector<std::pair<std::vector<int>, CycQ>>& spec) {
  PathElement<CycQ> w;
  for (const auto& [arrows, coeff] : spec) w.add(Path{0, arrows}, coeff);
  return w;
}

// symmetrized or antisymmetrized cubic on three loops x, y, z
PathElement<CycQ> cubic_omega(bool commutator) {
  CycQ s = commutator ? cyc(-1) : cyc(1);
  return loops_element({{{0, 1, 2}, cyc(1)},
                        {{2, 0, 1}, cyc(1)},
                        {{1, 2, 0}, cyc(1)},
                        {{0, 2, 1}, s},
                        {{1, 0, 2}, s},
                        {{2, 1, 0}, s}});
}

// y^2 x^2 + x y^2 x + x^2 y^2 + y x^2 y on two loops
PathElement<CycQ> quartic_omega() {
  return loops_element({{{1, 1, 0, 0}, cyc(1)},
                        {{0, 1, 1, 0}, cyc(1)},
                        {{0, 0, 1, 1}, cyc(1)},
                        {{1, 0, 0, 1}, cyc(1)}});
}

// eighth-root quartic: y^3 x - z^3 x y^3 + z^2 y x y^2 - z y^2 x y
//                      + x^3 y + z^3 y x^3 + z^2 x y x^2 + z x^2 y x, z = zeta_8
PathElement<CycQ> quartic_omega_mixed() {
  CycQ z = CycQ::zeta(8);
  CycQ z2 = z * z, z3 = z2 * z;
  return loops_element({{{1, 1, 1, 0}, cyc(1)},
                        {{0, 1, 1, 1}, -z3},
                        {{1, 0, 1, 1}, z2},
                        {{1, 1, 0, 1}, -z},
                        {{0, 0, 0, 1}, cyc(1)},
                        {{1, 0, 0, 0}, z3},
                        {{0, 1, 0, 0}, z2},
                        {{0, 0, 1, 0}, z}});
}

// ninth-root cubic: xzx + t^8 x^2 z + t z x^2 + yxy + t^5 y^2 x + t^4 x y^2
//                   + zyz + t^2 z^2 y + t^7 y z^2, t = zeta_9
PathElement<CycQ> cubic_omega_ninth() {
  auto t = [](long p) { return CycQ::zeta(9, p); };
  return loops_element({{{0, 2, 0}, cyc(1)},
                        {{0, 0, 2}, t(8)},
                        {{2, 0, 0}, t(1)},
                        {{1, 0, 1}, cyc(1)},
                        {{1, 1, 0}, t(5)},
                        {{0, 1, 1}, t(4)},
                        {{2, 1, 2}, cyc(1)},
                        {{2, 2, 1}, t(2)},
                        {{1, 2, 2}, t(7)}});
}

// third-root quartic: y^3 x + w y^2 x y + w^2 y x y^2 + x y^3 + x^4, w = zeta_3
PathElement<CycQ> quartic_omega_third() {
  CycQ w = CycQ::zeta(3), w2 = CycQ::zeta(3, 2);
  return loops_element({{{1, 1, 1, 0}, cyc(1)},
                        {{1, 1, 0, 1}, w},
                        {{1, 0, 1, 1}, w2},
                        {{0, 1, 1, 1}, cyc(1)},
                        {{0, 0, 0, 0}, cyc(1)}});
}

// fourth-root quartic: x^2 y^2 + i x y^2 x - y^2 x^2 - i y x^2 y
PathElement<CycQ> quartic_omega_fourth() {
  CycQ i = CycQ::zeta(4);
  return loops_element({{{0, 0, 1, 1}, cyc(1)},
                        {{0, 1, 1, 0}, i},
                        {{1, 1, 0, 0}, cyc(-1)},
                        {{1, 0, 0, 1}, -i}});
}

CMat diag(const std::vector<CycQ>& d) {
  CMat m(d.size(), std::vector<CycQ>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = d[i];
  return m;
}

}  // namespace

const std::vector<SkewGroupRow>& builtin_skew_rows() {
  static const std::vector<SkewGroupRow> rows = [] {
    std::vector<SkewGroupRow> out;
    const GroupData& z2 = GroupData::z2();
    const GroupData& z3g = GroupData::z3();
    const GroupData& s3g = GroupData::s3();
    const CycQ one = cyc(1), neg = cyc(-1);
    const CycQ w = CycQ::zeta(3), w2 = CycQ::zeta(3, 2);
    const IMat swap2 = im({{0, 1}, {1, 0}});
    const IMat id2 = im({{1, 0}, {0, 1}});
    const IMat id3 = im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const IMat cycle3 = im({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    const IMat swap23 = im({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});

    auto row = [&out](std::string label, const GroupData& g, std::vector<int> parts,
                      std::vector<CMat> gens, PathElement<CycQ> omega,
                      std::vector<CycQ> hdet, IMat em, IMat ep, int d) {
      out.push_back({std::move(label), &g, {std::move(parts)}, std::move(gens),
                     std::move(omega), std::move(hdet), std::move(em), std::move(ep), d});
    };

    // Z2 with sign homological determinant
    row("Z2: x<->y, z->-z on the symmetric cubic", z2, {1, 2, 2},
        {CMat{{CycQ(), one, CycQ()}, {one, CycQ(), CycQ()}, {CycQ(), CycQ(), neg}}},
        cubic_omega(false), {neg}, im({{1, 2}, {2, 1}}), swap2, 3);
    row("Z2: z->-z on the commutator cubic", z2, {1, 1, 2},
        {diag({one, one, neg})}, cubic_omega(true), {neg}, im({{2, 1}, {1, 2}}), swap2, 3);
    row("Z2: full sign flip on the commutator cubic", z2, {2, 2, 2},
        {diag({neg, neg, neg})}, cubic_omega(true), {neg}, im({{0, 3}, {3, 0}}), swap2, 3);
    row("Z2: x->-x on the eighth-root quartic", z2, {1, 2},
        {diag({neg, one})}, quartic_omega_mixed(), {neg}, im({{1, 1}, {1, 1}}), swap2, 4);

    // Z2 with trivial homological determinant
    row("Z2: y,z->-y,-z on the commutator cubic", z2, {1, 2, 2},
        {diag({one, neg, neg})}, cubic_omega(true), {one}, im({{1, 2}, {2, 1}}), id2, 3);
    row("Z2: x<->y on the symmetric cubic", z2, {1, 1, 2},
        {CMat{{CycQ(), one, CycQ()}, {one, CycQ(), CycQ()}, {CycQ(), CycQ(), one}}},
        cubic_omega(false), {one}, im({{2, 1}, {1, 2}}), id2, 3);
    row("Z2: y->-y on the symmetric quartic", z2, {1, 2},
        {diag({one, neg})}, quartic_omega(), {one}, im({{1, 1}, {1, 1}}), id2, 4);
    row("Z2: full sign flip on the symmetric quartic", z2, {2, 2},
        {diag({neg, neg})}, quartic_omega(), {one}, im({{0, 2}, {2, 0}}), id2, 4);

    // Z3 with homological determinant zeta^2
    row("Z3: z->w^2 z on the commutator cubic", z3g, {1, 1, 3},
        {diag({one, one, w2})}, cubic_omega(true), {w2},
        im({{2, 1, 0}, {0, 2, 1}, {1, 0, 2}}), cycle3, 3);
    row("Z3: y,z->wy,wz on the commutator cubic", z3g, {1, 2, 2},
        {diag({one, w, w})}, cubic_omega(true), {w2},
        im({{1, 0, 2}, {2, 1, 0}, {0, 2, 1}}), cycle3, 3);
    row("Z3: x->wx, y,z->w^2 y,w^2 z on the commutator cubic", z3g, {2, 3, 3},
        {diag({w, w2, w2})}, cubic_omega(true), {w2},
        im({{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}), cycle3, 3);
    row("Z3: diag(1,w,w^2) on the ninth-root cubic", z3g, {1, 2, 3},
        {diag({one, w, w2})}, cubic_omega_ninth(), {w2},
        im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), cycle3, 3);
    row("Z3: diag(w^2,w) on the third-root quartic", z3g, {2, 3},
        {diag({w2, w})}, quartic_omega_third(), {w2},
        im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), cycle3, 4);
    row("Z3: x->w^2 x on the third-root quartic", z3g, {1, 3},
        {diag({w2, one})}, quartic_omega_third(), {w2},
        im({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), cycle3, 4);
    row("Z3: y->wy on the symmetric quartic", z3g, {1, 2},
        {diag({one, w})}, quartic_omega(), {w2},
        im({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}), cycle3, 4);
    row("Z3: diag(w^2,w^2) on the symmetric quartic", z3g, {3, 3},
        {diag({w2, w2})}, quartic_omega(), {w2},
        im({{0, 2, 0}, {0, 0, 2}, {2, 0, 0}}), cycle3, 4);

    // Z3 with trivial homological determinant
    row("Z3: uniform scaling by w^2 on the commutator cubic", z3g, {3, 3, 3},
        {diag({w2, w2, w2})}, cubic_omega(true), {one},
        im({{0, 3, 0}, {0, 0, 3}, {3, 0, 0}}), id3, 3);
    row("Z3: diag(1,w,w^2) on the commutator cubic", z3g, {1, 2, 3},
        {diag({one, w, w2})}, cubic_omega(true), {one},
        im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), id3, 3);
    row("Z3: diag(w,w^2) on the symmetric quartic", z3g, {2, 3},
        {diag({w, w2})}, quartic_omega(), {one},
        im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), id3, 4);
    row("Z3: diag(1,w^2) on the third-root quartic", z3g, {1, 3},
        {diag({one, w2})}, quartic_omega_third(), {one},
        im({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), id3, 4);

    // S3 with sign homological determinant
    row("S3: permuting x,y,z on the commutator cubic", s3g, {1, 3},
        {CMat{{CycQ(), CycQ(), one}, {one, CycQ(), CycQ()}, {CycQ(), one, CycQ()}},
         CMat{{CycQ(), one, CycQ()}, {one, CycQ(), CycQ()}, {CycQ(), CycQ(), one}}},
        cubic_omega(true), {one, neg},
        im({{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}), swap23, 3);
    row("S3: signed permutation of x,y,z on the symmetric cubic", s3g, {1, 2},
        {CMat{{CycQ(), CycQ(), one}, {one, CycQ(), CycQ()}, {CycQ(), one, CycQ()}},
         CMat{{CycQ(), neg, CycQ()}, {neg, CycQ(), CycQ()}, {CycQ(), CycQ(), neg}}},
        cubic_omega(false), {one, neg},
        im({{2, 1, 1}, {1, 0, 1}, {1, 1, 0}}), swap23, 3);
    row("S3: standard 2-dim action on the fourth-root quartic", s3g, {1},
        {diag({w, w2}), CMat{{CycQ(), one}, {one, CycQ()}}},
        quartic_omega_fourth(), {one, neg},
        im({{1, 1, 1}, {1, 0, 0}, {1, 0, 0}}), swap23, 4);

    // S3 with trivial homological determinant
    row("S3: permuting x,y,z on the symmetric cubic", s3g, {1, 3},
        {CMat{{CycQ(), CycQ(), one}, {one, CycQ(), CycQ()}, {CycQ(), one, CycQ()}},
         CMat{{CycQ(), one, CycQ()}, {one, CycQ(), CycQ()}, {CycQ(), CycQ(), one}}},
        cubic_omega(false), {one, one},
        im({{2, 1, 1}, {1, 1, 0}, {1, 0, 1}}), id3, 3);
    row("S3: signed permutation of x,y,z on the commutator cubic", s3g, {1, 2},
        {CMat{{CycQ(), CycQ(), one}, {one, CycQ(), CycQ()}, {CycQ(), one, CycQ()}},
         CMat{{CycQ(), neg, CycQ()}, {neg, CycQ(), CycQ()}, {CycQ(), CycQ(), neg}}},
        cubic_omega(true), {one, one},
        im({{2, 1, 1}, {1, 0, 1}, {1, 1, 0}}), id3, 3);
    row("S3: standard 2-dim action on the symmetric quartic", s3g, {1},
        {diag({w, w2}), CMat{{CycQ(), one}, {one, CycQ()}}},
        quartic_omega(), {one, one},
        im({{1, 1, 1}, {1, 0, 0}, {1, 0, 0}}), id3, 4);

    return out;
  }();
  return rows;
}

RealizationCatalog builtin_realization_catalog() {
  RealizationCatalog cat;
  auto rank = [](const std::string& tag) {
    if (tag == "mckay") return 0;
    if (tag == "ore") return 1;
    if (tag == "mutation") return 2;
    return 3;
  };
  auto put = [&](const IMat& M, const IMat& P, int d, const std::string& tag,
                 const std::string& via) {
    std::string key = catalog_key(canonicalize(make_type(M, P, d)), d);
    auto it = cat.find(key);
    if (it == cat.end() || rank(tag) < rank(it->second.tag)) cat[key] = Realization{tag, via};
  };
  for (const SkewGroupRow& row : builtin_skew_rows())
    put(row.expected_m, row.expected_p, row.d, "mckay", row.label);

  const IMat id3 = im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const IMat swap23 = im({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});

  // the order-72 group acting on the quartic base, lambda-faithful component
  put(im({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}), id3, 4, "mckay",
      "order-72 component on the quartic base");

  // Ore extensions of two-vertex components
  put(im({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}), swap23, 3, "ore",
      "Ore extension of the order-72 component, vertex-swapping twist");
  put(im({{1, 1, 1}, {1, 0, 2}, {1, 2, 0}}), swap23, 3, "ore",
      "Ore extension of the skew-plane cover, vertex-swapping twist");
  put(im({{1, 1, 1}, {1, 2, 0}, {1, 0, 2}}), id3, 3, "ore",
      "central Ore extension of the order-72 component");

  // quiver mutation along the Markov tree
  put(im({{0, 3, 0}, {0, 0, 3}, {6, 0, 0}}), id3, 3, "mutation",
      "one mutation from the symmetric Markov cycle");
  put(im({{0, 3, 0}, {0, 0, 6}, {15, 0, 0}}), id3, 3, "mutation",
      "two mutations from the symmetric Markov cycle");

  // survivors with no known realization
  put(im({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}), swap23, 4, "starred", "no known realization");
  put(im({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), swap23, 4, "starred", "no known realization");
  put(im({{1, 1, 0}, {0, 1, 1}, {2, 0, 1}}), id3, 4, "starred",
      "no known realization; ruled out for untwisted potentials");
  return cat;
}

namespace {

CycQ cycq_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return CycQ(v.get<std::int64_t>());
  if (v.is_string()) return CycQ(Rational(std::string_view(v.get<std::string>())));
  if (v.is_object()) {
    int n = v.at("n").get<int>();
    CycQ out;
    const auto& coeffs = v.at("coeffs");
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const auto& c = coeffs[k];
      Rational r = c.is_string() ? Rational(std::string_view(c.get<std::string>()))
                                 : Rational(c.get<std::int64_t>());
      out += CycQ(r) * CycQ::zeta(n, static_cast<long>(k));
    }
    return out;
  }
  throw std::invalid_argument("group JSON: bad cyclotomic value");
}

}  // namespace

GroupData group_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  nlohmann::json j;
  in >> j;
  GroupData g;
  g.name = j.value("name", std::string("custom"));
  g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
  g.exponent = j.value("exponent", 0);
  if (g.exponent == 0) {
    // smallest k with g^k = e for all g
    for (std::size_t e = 0; e < g.mul.size(); ++e) {
      int acc = static_cast<int>(e), ord = 1;
      while (acc != 0) {
        acc = g.mul[static_cast<std::size_t>(acc)][e];
        ++ord;
      }
      g.exponent = static_cast<int>(std::lcm(g.exponent == 0 ? 1 : g.exponent, ord));
    }
  }
  g.inverse = j.contains("inverse") ? j.at("inverse").get<std::vector<int>>() : inverses_of(g.mul);
  if (j.contains("element_names"))
    g.element_names = j.at("element_names").get<std::vector<std::string>>();
  else
    for (std::size_t e = 0; e < g.mul.size(); ++e) g.element_names.push_back("g" + std::to_string(e));
  if (j.contains("generators"))
    g.generators = j.at("generators").get<std::vector<int>>();
  else
    for (std::size_t e = 1; e < g.mul.size(); ++e) g.generators.push_back(static_cast<int>(e));
  g.element_words = bfs_words(g.mul, g.generators);
  for (const auto& chi_json : j.at("characters")) {
    std::vector<CycQ> chi;
    for (const auto& v : chi_json) chi.push_back(cycq_from_json(v));
    g.characters.push_back(std::move(chi));
  }
  if (j.contains("character_names"))
    g.character_names = j.at("character_names").get<std::vector<std::string>>();
  else
    for (std::size_t k = 0; k < g.characters.size(); ++k)
      g.character_names.push_back("chi" + std::to_string(k + 1));
  for (std::size_t k = 0; k < g.character_names.size(); ++k)
    g.character_lookup[g.character_names[k]] = static_cast<int>(k);
  g.validate();
  return g;
}

}  // namespace qcy
