#pragma once

// Arbitrary-precision signed integer, base 2^32 magnitude with separate sign.
// Schoolbook multiplication and binary long division: operand sizes in this
// project stay in the hundreds of digits, where simple algorithms are fine
// and easy to trust.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qcy {

class BigInt {
public:
  BigInt() = default;

  BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // avoid overflow at INT64_MIN by working in unsigned space
    std::uint64_t mag = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(mag));
    if (mag >> 32) mag_.push_back(static_cast<std::uint32_t>(mag >> 32));
  }

  explicit BigInt(std::string_view s) {
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
      mul_small_add(10, static_cast<std::uint32_t>(s[i] - '0'));
    }
    sign_ = mag_.empty() ? 0 : (neg ? -1 : 1);
  }

  bool is_zero() const { return sign_ == 0; }
  int sign() const { return sign_; }
  bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
  bool odd() const { return !mag_.empty() && (mag_[0] & 1u); }

  // number of significant bits of |x|; 0 for x == 0
  std::size_t bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top) {
      ++bits;
      top >>= 1;
    }
    return bits;
  }

  bool fits_int64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t m = mag64();
    if (sign_ >= 0) return m <= static_cast<std::uint64_t>(INT64_MAX);
    return m <= static_cast<std::uint64_t>(INT64_MAX) + 1;
  }

  std::int64_t to_int64() const {
    assert(fits_int64());
    std::uint64_t m = mag64();
    return sign_ >= 0 ? static_cast<std::int64_t>(m) : -static_cast<std::int64_t>(m - 1) - 1;
  }

  friend BigInt operator-(const BigInt& a) {
    BigInt r = a;
    r.sign_ = -r.sign_;
    return r;
  }

  friend BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
      r.mag_ = add_mag(a.mag_, b.mag_);
      r.sign_ = a.sign_;
    } else {
      int c = cmp_mag(a.mag_, b.mag_);
      if (c == 0) return r;
      const BigInt& big = c > 0 ? a : b;
      const BigInt& small = c > 0 ? b : a;
      r.mag_ = sub_mag(big.mag_, small.mag_);
      r.sign_ = big.sign_;
    }
    return r;
  }

  friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

  friend BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (std::size_t i = 0; i < a.mag_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.mag_.size(); ++j) {
        std::uint64_t cur = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] + r.mag_[i + j] + carry;
        r.mag_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    r.sign_ = a.sign_ * b.sign_;
    return r;
  }

  // truncated division, C++ semantics: quotient rounds toward zero,
  // remainder has the sign of the dividend
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
  }

  friend BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return q;
  }

  friend BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divmod(a, b, q, r);
    return r;
  }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
  BigInt& operator/=(const BigInt& o) { return *this = *this / o; }

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
  }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c < 0 : c > 0;
  }
  friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

  BigInt abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
  }

  static BigInt gcd(BigInt a, BigInt b) {
    // binary gcd: shifts and subtractions only
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t shift = 0;
    while (!a.odd() && !b.odd()) {
      a.shr1();
      b.shr1();
      ++shift;
    }
    while (!a.odd()) a.shr1();
    while (!b.is_zero()) {
      while (!b.odd()) b.shr1();
      if (cmp_mag(a.mag_, b.mag_) > 0) std::swap(a, b);
      b = b - a;
      b.sign_ = b.mag_.empty() ? 0 : 1;
    }
    for (std::size_t i = 0; i < shift; ++i) a = a + a;
    return a;
  }

  BigInt pow(unsigned e) const {
    BigInt base = *this, r(1);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string to_string() const {
    if (sign_ == 0) return "0";
    std::vector<std::uint32_t> work = mag_;
    std::string out;
    while (!work.empty()) {
      // divide the magnitude by 10^9, emit the remainder as 9 digits
      std::uint64_t rem = 0;
      for (std::size_t i = work.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | work[i];
        work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
        rem = cur % 1000000000u;
      }
      while (!work.empty() && work.back() == 0) work.pop_back();
      char buf[10];
      for (int k = 0; k < 9; ++k) {
        buf[k] = static_cast<char>('0' + rem % 10);
        rem /= 10;
      }
      for (int k = 0; k < 9; ++k) out.push_back(buf[k]);
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

private:
  int sign_ = 0;
  std::vector<std::uint32_t> mag_;  // little-endian, no trailing zero limbs

  std::uint64_t mag64() const {
    std::uint64_t m = mag_.empty() ? 0 : mag_[0];
    if (mag_.size() > 1) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return m;
  }

  void trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
  }

  void shr1() {
    std::uint32_t carry = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) {
      std::uint32_t next = mag_[i] & 1u;
      mag_[i] = (mag_[i] >> 1) | (carry << 31);
      carry = next;
    }
    trim();
  }

  void mul_small_add(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (auto& limb : mag_) {
      std::uint64_t cur = static_cast<std::uint64_t>(limb) * mul + carry;
      limb = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
  }

  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r = big;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + (i < small.size() ? small[i] : 0) + carry;
      r[i] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      if (carry == 0 && i >= small.size()) break;
    }
    if (carry) r.push_back(1);
    return r;
  }

  // requires |a| >= |b|
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::int64_t cur = static_cast<std::int64_t>(r[i]) - (i < b.size() ? b[i] : 0) - borrow;
      borrow = cur < 0;
      r[i] = static_cast<std::uint32_t>(cur + (borrow << 32));
      if (borrow == 0 && i >= b.size()) break;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
  }

  // binary long division of magnitudes
  static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
      r = a;
      return;
    }
    std::size_t abits = a.empty() ? 0 : (a.size() - 1) * 32 + bits_of(a.back());
    q.assign(a.size(), 0);
    for (std::size_t i = abits; i-- > 0;) {
      shl1(r);
      if (a[i / 32] & (1u << (i % 32))) {
        if (r.empty())
          r.push_back(1);
        else {
          // set the low bit (it is 0 after the shift)
          r[0] |= 1u;
        }
      }
      if (cmp_mag(r, b) >= 0) {
        r = sub_mag(r, b);
        q[i / 32] |= 1u << (i % 32);
      }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
  }

  static void shl1(std::vector<std::uint32_t>& v) {
    std::uint32_t carry = 0;
    for (auto& limb : v) {
      std::uint32_t next = limb >> 31;
      limb = (limb << 1) | carry;
      carry = next;
    }
    if (carry) v.push_back(1);
  }

  static std::size_t bits_of(std::uint32_t x) {
    std::size_t n = 0;
    while (x) {
      ++n;
      x >>= 1;
    }
    return n;
  }
};

inline BigInt abs(const BigInt& x) { return x.abs(); }

}  // namespace qcy
