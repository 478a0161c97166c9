#pragma once

// Cyclotomic polynomials, recognition of products of cyclotomics, and the
// bounded enumeration of candidate determinant polynomials used by the
// classification search.
//
// Convention: factor index n = 1 denotes (1 - t), not t - 1, so that every
// recorded factor has constant term +1 and products reconstruct
// sign-normalized inputs exactly.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcy/bigint.hpp"
#include "qcy/poly.hpp"

namespace qcy {

int euler_phi(int n);

// Phi_n as an integer polynomial, cached across calls
const Poly<BigInt>& cyclotomic_poly(int n);

struct CyclotomicFactorization {
  bool is_product = false;
  // (n, multiplicity); n == 1 means the factor (1 - t)
  std::vector<std::pair<int, int>> factors;
  // when !is_product: the surviving factor with no cyclotomic divisors
  Poly<BigInt> residual;

  Poly<BigInt> reconstruct() const;
};

// Factors f into cyclotomics after normalizing the constant term to +1.
// Requires f(0) = +-1 (anything else cannot be a product of cyclotomics
// times a unit and is reported as a non-product with f itself as residual).
CyclotomicFactorization cyclotomic_product(const Poly<BigInt>& f);

inline bool is_cyclotomic_product(const Poly<BigInt>& f) {
  return cyclotomic_product(f).is_product;
}

// Necessary condition for a cyclotomic product: f(t) = +- t^deg f(1/t).
// Cheap screen in native arithmetic before the full recognition runs.
bool self_reciprocal_up_to_sign(const Poly<std::int64_t>& f);

// All sign-normalized products (1-t)^3 * r (s=3) or (1-t)^3 (1+t) * r (s=4)
// where r is a product of cyclotomics of total degree 2s containing Phi_1 and
// Phi_2 only to even multiplicity, filtered to t^(3s-1)-coefficient == lambda.
// Deduplicated, deterministic order.
std::vector<Poly<BigInt>> enumerate_candidate_dets(int s, std::int64_t lambda);

}  // namespace qcy
