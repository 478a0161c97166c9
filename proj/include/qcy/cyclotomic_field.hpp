#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N): elements are
// polynomials in zeta over Q reduced modulo the N-th cyclotomic polynomial.
// Mixed-conductor arithmetic embeds both operands into the lcm field first,
// so character values over different roots of unity combine exactly.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcy/cyclotomic.hpp"
#include "qcy/poly.hpp"
#include "qcy/rational.hpp"

namespace qcy {

class CycQ {
 public:
  CycQ() : n_(1) {}
  explicit CycQ(const Rational& r) : n_(1) {
    if (!r.is_zero()) c_ = {r};
  }
  explicit CycQ(std::int64_t v) : CycQ(Rational(v)) {}

  static CycQ zeta(int n, long power = 1) {
    if (n < 1) throw std::invalid_argument("CycQ::zeta: n must be positive");
    CycQ z;
    z.n_ = n;
    long e = ((power % n) + n) % n;
    Poly<Rational> mono = Poly<Rational>::monomial(Rational(1), static_cast<int>(e));
    z.c_ = reduce(mono, n).coefficients();
    z.strip();
    return z;
  }

  int conductor() const { return n_; }
  bool is_zero() const { return c_.empty(); }

  bool is_rational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
      if (!c_[k].is_zero()) return false;
    return true;
  }

  Rational rational_part() const {
    if (!is_rational()) throw std::logic_error("CycQ: not a rational value");
    return c_.empty() ? Rational(0) : c_[0];
  }

  // re-express in Q(zeta_m); n must divide m
  CycQ embed(int m) const {
    if (m % n_ != 0) throw std::invalid_argument("CycQ::embed: conductor must divide target");
    if (m == n_) return *this;
    int step = m / n_;
    Poly<Rational> lifted;
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!c_[k].is_zero())
        lifted = lifted + Poly<Rational>::monomial(c_[k], static_cast<int>(k) * step);
    CycQ out;
    out.n_ = m;
    out.c_ = reduce(lifted, m).coefficients();
    out.strip();
    return out;
  }

  friend CycQ operator+(const CycQ& a, const CycQ& b) {
    auto [x, y] = align(a, b);
    Poly<Rational> s = Poly<Rational>(x.c_) + Poly<Rational>(y.c_);
    return from_reduced(s, x.n_);
  }
  friend CycQ operator-(const CycQ& a, const CycQ& b) {
    auto [x, y] = align(a, b);
    Poly<Rational> s = Poly<Rational>(x.c_) - Poly<Rational>(y.c_);
    return from_reduced(s, x.n_);
  }
  CycQ operator-() const {
    CycQ out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
  }
  friend CycQ operator*(const CycQ& a, const CycQ& b) {
    auto [x, y] = align(a, b);
    Poly<Rational> s = Poly<Rational>(x.c_) * Poly<Rational>(y.c_);
    return from_reduced(reduce(s, x.n_), x.n_);
  }
  CycQ inverse() const {
    if (is_zero()) throw std::domain_error("CycQ: division by zero");
    // extended Euclid: u*f + v*Phi_n = gcd = nonzero rational
    Poly<Rational> f(c_), g = phi(n_);
    Poly<Rational> u0(Rational(1)), u1;
    while (!g.is_zero()) {
      Poly<Rational> q, r;
      Poly<Rational>::divmod(f, g, q, r);
      Poly<Rational> u2 = u0 - q * u1;
      f = g;
      g = r;
      u0 = u1;
      u1 = u2;
    }
    if (f.degree() != 0) throw std::logic_error("CycQ: cyclotomic modulus not coprime");
    Rational lead = f.coeff(0);
    Poly<Rational> inv_scaled;
    for (int k = 0; k <= u0.degree(); ++k)
      inv_scaled = inv_scaled + Poly<Rational>::monomial(u0.coeff(k) / lead, k);
    return from_reduced(reduce(inv_scaled, n_), n_);
  }
  friend CycQ operator/(const CycQ& a, const CycQ& b) { return a * b.inverse(); }

  CycQ& operator+=(const CycQ& o) { return *this = *this + o; }
  CycQ& operator-=(const CycQ& o) { return *this = *this - o; }
  CycQ& operator*=(const CycQ& o) { return *this = *this * o; }

  friend bool operator==(const CycQ& a, const CycQ& b) {
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const CycQ& a, const CycQ& b) { return !(a == b); }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!s.empty()) s += " + ";
      if (k == 0) {
        s += c_[k].to_string();
      } else {
        std::string z = "z" + std::to_string(n_);
        if (k > 1) z += "^" + std::to_string(k);
        if (c_[k] == Rational(1))
          s += z;
        else
          s += c_[k].to_string() + "*" + z;
      }
    }
    return s;
  }

 private:
  static Poly<Rational> phi(int n) { return cyclotomic_poly(n).convert<Rational>(); }

  static Poly<Rational> reduce(const Poly<Rational>& f, int n) {
    Poly<Rational> m = phi(n);
    if (f.degree() < m.degree()) return f;
    Poly<Rational> q, r;
    Poly<Rational>::divmod(f, m, q, r);
    return r;
  }

  static CycQ from_reduced(const Poly<Rational>& f, int n) {
    CycQ out;
    out.n_ = n;
    out.c_ = f.coefficients();
    out.strip();
    return out;
  }

  static std::pair<CycQ, CycQ> align(const CycQ& a, const CycQ& b) {
    if (a.n_ == b.n_) return {a, b};
    int m = std::lcm(a.n_, b.n_);
    return {a.embed(m), b.embed(m)};
  }

  void strip() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) n_ = std::max(n_, 1);
  }

  int n_;
  std::vector<Rational> c_;  // coefficients of 1, zeta, zeta^2, ...
};

}  // namespace qcy
