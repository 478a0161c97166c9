#pragma once

// Growth constraints: GK dimension from vanishing multiplicities, exact
// spectral-radius and eigenvalue-interval tests for normal incidence
// matrices, the loop-count bound, the scalar recurrence witnessing
// exponential growth, and the subquiver series bound.

#include <optional>
#include <string>
#include <vector>

#include "qcy/cyclotomic.hpp"
#include "qcy/matrix_poly.hpp"
#include "qcy/quiver.hpp"
#include "qcy/rational.hpp"

namespace qcy {

struct GrowthReport {
  // multiplicity of det p at t = 1
  int m_d = 0;
  // largest k with (t-1)^k dividing every adjugate entry
  int m_a = 0;
  bool roots_on_unit_circle = false;
  // m_d - m_a when roots_on_unit_circle, nullopt = infinite
  std::optional<int> gk;
  Poly<BigInt> det;  // sign-normalized, constant term +1
  CyclotomicFactorization factorization;
};

GrowthReport gk_dimension(const CYType& t);

enum class FilterStatus { pass, fail, not_applicable };

struct SpectralVerdict {
  FilterStatus status = FilterStatus::pass;
  std::string detail;
};

// Normal M only (MM^T = M^T M), else not-applicable. Checks rho(M) = 6-d
// exactly: 6-d is a characteristic root and no eigenvalue has modulus above
// 6-d (Sturm count on charpoly of MM^T). For symmetric M with P = I, d = 3,
// additionally requires every eigenvalue in [-1, 3].
SpectralVerdict normal_spectral_filter(const CYType& t);

// max loop count at a mu-fixed vertex for superpotential degree d
int loop_bound(int d);

struct LoopBoundVerdict {
  FilterStatus status = FilterStatus::pass;
  int vertex = -1;
};

LoopBoundVerdict loop_bound_filter(const CYType& t);

struct LoopRecurrence {
  bool hypothesis_met = false;       // s^s <= (m(s-1))^(s-1)
  std::vector<Rational> r;           // r_1..r_N
  std::optional<int> division_by_zero_at;
  std::optional<Rational> u_exact;   // rational root when it exists
  double u_approx = 0.0;             // advisory bisection value
  bool monotone_ok = false;          // r_n <= r_{n-1} for all computed n
  bool above_root_ok = false;        // u < r_n for all computed n, exact sign test
};

// The sequence r_n = m(1 - 1/(r_{n-s+1}...r_{n-1})) with r_1..r_{s-1} = m,
// tracked as exact ratios of the integer recurrence a_n = m(a_{n-1} - a_{n-s}),
// and the real root u of x^s - m x^(s-1) + m in [m(s-1)/s, m).
LoopRecurrence gs_loop_recurrence(int m, int s, int N);

struct GSBoundSeries {
  int N = 0;
  std::vector<ZMat> G;               // truncated absolute-value series
  std::optional<int> truncated_at;   // first degree zeroed by the rule
};

// Series inverse of I - M~t + (PM^T)~ t^(d-1) on the chosen vertex subset,
// with the absolute-value rule: everything from the first coefficient matrix
// containing a negative entry onward is zeroed.
GSBoundSeries gs_subquiver_bound(const CYType& t, const std::vector<int>& vertices, int N);

struct BlockVerdict {
  FilterStatus status = FilterStatus::pass;
  int v1 = -1, v2 = -1;
  std::string block;
};

// d = 3 only: no full 2x2 subquiver on mu-fixed vertices may be
// (2 y/y 2) with y >= 2 or (3 z/z 3) with z >= 3
BlockVerdict forbidden_block_filter(const CYType& t);

// distinct real roots of f in the half-open interval (a, b]
int sturm_count(const Poly<Rational>& f, const Rational& a, const Rational& b);
// distinct real roots strictly greater than a
int sturm_count_above(const Poly<Rational>& f, const Rational& a);

}  // namespace qcy
