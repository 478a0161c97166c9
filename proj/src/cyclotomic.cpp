#include "qcy/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace qcy {

int euler_phi(int n) {
  assert(n >= 1);
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const Poly<BigInt>& cyclotomic_poly(int n) {
  static std::map<int, Poly<BigInt>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Poly<BigInt> result;
  if (n == 1) {
    result = Poly<BigInt>(std::vector<BigInt>{BigInt(-1), BigInt(1)});  // t - 1
  } else {
    // Phi_n = (t^n - 1) / prod_{d | n, d < n} Phi_d
    Poly<BigInt> num = Poly<BigInt>::monomial(BigInt(1), n) - Poly<BigInt>(BigInt(1));
    for (int d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      auto q = Poly<BigInt>::exact_divide(num, cyclotomic_poly(d));
      assert(q.has_value());
      num = *q;
    }
    result = num;
  }
  return cache.emplace(n, std::move(result)).first->second;
}

Poly<BigInt> CyclotomicFactorization::reconstruct() const {
  Poly<BigInt> acc{BigInt(1)};
  const Poly<BigInt> one_minus_t(std::vector<BigInt>{BigInt(1), BigInt(-1)});
  for (auto [n, mult] : factors) {
    const Poly<BigInt>& base = n == 1 ? one_minus_t : cyclotomic_poly(n);
    for (int k = 0; k < mult; ++k) acc *= base;
  }
  return acc;
}

CyclotomicFactorization cyclotomic_product(const Poly<BigInt>& f) {
  if (f.is_zero()) throw std::domain_error("cyclotomic_product: zero polynomial");
  CyclotomicFactorization out;

  Poly<BigInt> rem = f;
  BigInt c0 = rem.coeff(0);
  if (c0 == BigInt(-1)) rem = -rem;
  else if (!(c0 == BigInt(1))) {
    out.residual = rem;
    return out;
  }

  const Poly<BigInt> one_minus_t(std::vector<BigInt>{BigInt(1), BigInt(-1)});
  int m1 = 0;
  while (rem.degree() >= 1) {
    auto q = Poly<BigInt>::exact_divide(rem, one_minus_t);
    if (!q) break;
    rem = *q;
    ++m1;
  }
  if (m1 > 0) out.factors.emplace_back(1, m1);

  // phi(n) >= sqrt(n/2), so phi(n) <= K forces n <= 2K^2; +2 covers n=1,2
  int deg = rem.degree();
  int nmax = 2 * deg * deg + 2;
  for (int n = 2; n <= nmax && rem.degree() >= 1; ++n) {
    if (euler_phi(n) > rem.degree()) continue;
    int mult = 0;
    while (true) {
      auto q = Poly<BigInt>::exact_divide(rem, cyclotomic_poly(n));
      if (!q) break;
      rem = *q;
      ++mult;
    }
    if (mult > 0) out.factors.emplace_back(n, mult);
  }

  if (rem.degree() == 0 && rem.coeff(0) == BigInt(1)) {
    out.is_product = true;
  } else {
    out.residual = rem;
  }
  return out;
}

bool self_reciprocal_up_to_sign(const Poly<std::int64_t>& f) {
  if (f.is_zero()) return false;
  int d = f.degree();
  bool plus = true, minus = true;
  for (int k = 0; k <= d && (plus || minus); ++k) {
    if (f.coeff(k) != f.coeff(d - k)) plus = false;
    if (f.coeff(k) != -f.coeff(d - k)) minus = false;
  }
  return plus || minus;
}

namespace {

// factor pool for the r-part: all n with phi(n) <= cap, paired with phi(n)
std::vector<std::pair<int, int>> factor_pool(int cap) {
  std::vector<std::pair<int, int>> pool;
  for (int n = 1; n <= 2 * cap * cap + 2; ++n) {
    int p = euler_phi(n);
    if (p <= cap) pool.emplace_back(n, p);
  }
  return pool;
}

void extend_products(const std::vector<std::pair<int, int>>& pool, std::size_t idx, int remaining,
                     const Poly<BigInt>& acc, std::vector<Poly<BigInt>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  if (idx == pool.size()) return;
  auto [n, p] = pool[idx];
  // multiplicity step of 2 for Phi_1 and Phi_2, 1 otherwise
  int step = n <= 2 ? 2 : 1;
  const Poly<BigInt> base = n == 1 ? Poly<BigInt>(std::vector<BigInt>{BigInt(1), BigInt(-1)})
                                   : cyclotomic_poly(n);
  Poly<BigInt> cur = acc;
  for (int used = 0; used * p <= remaining; used += step) {
    extend_products(pool, idx + 1, remaining - used * p, cur, out);
    for (int k = 0; k < step; ++k) cur *= base;
    if ((used + step) * p > remaining) break;
  }
}

}  // namespace

std::vector<Poly<BigInt>> enumerate_candidate_dets(int s, std::int64_t lambda) {
  if (s != 3 && s != 4) throw std::invalid_argument("enumerate_candidate_dets: s must be 3 or 4");

  const Poly<BigInt> one_minus_t(std::vector<BigInt>{BigInt(1), BigInt(-1)});
  Poly<BigInt> base = one_minus_t * one_minus_t * one_minus_t;
  if (s == 4) base *= cyclotomic_poly(2);

  std::vector<Poly<BigInt>> rparts;
  extend_products(factor_pool(2 * s), 0, 2 * s, Poly<BigInt>(BigInt(1)), rparts);

  std::set<std::vector<std::string>> seen;
  std::vector<Poly<BigInt>> out;
  const int top = 3 * s - 1;
  for (const auto& r : rparts) {
    Poly<BigInt> f = base * r;
    if (!(f.coeff(top) == BigInt(lambda))) continue;
    std::vector<std::string> key;
    for (int k = 0; k <= f.degree(); ++k) key.push_back(f.coeff(k).to_string());
    if (seen.insert(std::move(key)).second) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace qcy
