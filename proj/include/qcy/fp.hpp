#pragma once

// Prime field F_p for the fixed Mersenne prime p = 2^31 - 1, used for generic
// superpotential coefficients. Elements are canonical residues in [0, p).

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace qcy {

class Fp {
public:
  static constexpr std::uint32_t P = 2147483647u;

  Fp() = default;
  Fp(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(P);
    if (r < 0) r += P;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return from_raw((a.v_ + static_cast<std::uint64_t>(b.v_)) % P); }
  friend Fp operator-(Fp a, Fp b) { return from_raw((a.v_ + static_cast<std::uint64_t>(P) - b.v_) % P); }
  friend Fp operator*(Fp a, Fp b) { return from_raw(static_cast<std::uint64_t>(a.v_) * b.v_ % P); }
  friend Fp operator-(Fp a) { return from_raw(a.v_ ? P - a.v_ : 0); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    return pow(P - 2);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, r = from_raw(1);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

private:
  static Fp from_raw(std::uint64_t v) {
    Fp r;
    r.v_ = static_cast<std::uint32_t>(v);
    return r;
  }
  std::uint32_t v_ = 0;
};

}  // namespace qcy
