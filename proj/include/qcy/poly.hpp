#pragma once

// Dense univariate polynomials over an exact scalar, stored lowest degree
// first with no trailing zero coefficients. The zero polynomial has
// degree() == -1.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qcy {

template <typename T>
class Poly {
public:
  Poly() = default;
  Poly(T c) { // constant
    if (!(c == T(0))) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(T c, int deg) {
    Poly r;
    if (c == T(0)) return r;
    r.c_.assign(static_cast<std::size_t>(deg) + 1, T(0));
    r.c_.back() = std::move(c);
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  T coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(k)];
  }

  void set_coeff(int k, T v) {
    assert(k >= 0);
    if (k >= static_cast<int>(c_.size())) {
      if (v == T(0)) return;
      c_.resize(static_cast<std::size_t>(k) + 1, T(0));
    }
    c_[static_cast<std::size_t>(k)] = std::move(v);
    trim();
  }

  const T& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  const std::vector<T>& coefficients() const { return c_; }

  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
    r.trim();
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }

  friend Poly operator*(const T& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c_) x = s * x;
    r.trim();
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  T eval(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  template <typename U>
  U eval_as(const U& x) const {
    U acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + U(c_[i]);
    return acc;
  }

  Poly derivative() const {
    Poly r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_.push_back(T(static_cast<std::int64_t>(i)) * c_[i]);
    r.trim();
    return r;
  }

  // t^n * p(1/t) for n = degree; zero stays zero
  Poly reciprocal() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
  }

  Poly shifted(int k) const { // multiply by t^k
    if (is_zero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return r;
  }

  // Long division. Each step divides by the divisor's leading coefficient;
  // exact over a field, and exact over integer scalars whenever the divisor
  // is monic up to sign (the only integer-scalar use in this project).
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    assert(!b.is_zero());
    q = Poly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      T f = r.lead() / b.lead();
      int shift = r.degree() - b.degree();
      q.set_coeff(shift, f);
      // r -= f * t^shift * b
      for (int i = 0; i <= b.degree(); ++i)
        r.set_coeff(i + shift, r.coeff(i + shift) - f * b.coeff(i));
    }
  }

  // quotient when b exactly divides a, nullopt otherwise
  static std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }

  template <typename U>
  Poly<U> convert() const {
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(U(x));
    return Poly<U>(std::move(out));
  }

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == T(0)) continue;
      std::ostringstream term;
      term << c_[i];
      std::string ts = term.str();
      bool neg = !ts.empty() && ts[0] == '-';
      if (neg) ts = ts.substr(1);
      if (i > 0 && ts == "1") ts.clear();
      if (first) {
        if (neg) os << "-";
        first = false;
      } else {
        os << (neg ? " - " : " + ");
      }
      os << ts;
      if (i > 0) {
        if (!ts.empty()) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

// multiplicity of (t - a) in f; 0 when f(a) != 0; -1 signals f == 0
template <typename T>
int vanishing_multiplicity(Poly<T> f, const T& a) {
  if (f.is_zero()) return -1;
  int mult = 0;
  while (f.eval(a) == T(0)) {
    // synthetic division by (t - a)
    std::vector<T> out(static_cast<std::size_t>(f.degree()), T(0));
    T carry(0);
    for (int i = f.degree(); i >= 1; --i) {
      carry = f.coeff(i) + a * carry;
      out[static_cast<std::size_t>(i - 1)] = carry;
    }
    f = Poly<T>(std::move(out));
    ++mult;
    if (f.is_zero()) break;
  }
  return mult;
}

}  // namespace qcy
