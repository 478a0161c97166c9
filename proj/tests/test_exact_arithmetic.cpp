#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "qcy/bigint.hpp"
#include "qcy/fp.hpp"
#include "qcy/rational.hpp"

using qcy::BigInt;
using qcy::Fp;
using qcy::Rational;

TEST_CASE("bigint construction and printing") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-1).to_string() == "-1");
  CHECK(BigInt(INT64_C(9223372036854775807)).to_string() == "9223372036854775807");
  CHECK(BigInt("-9223372036854775808").to_string() == "-9223372036854775808");
  CHECK(BigInt("00012").to_string() == "12");
  CHECK(BigInt("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK_THROWS_AS(BigInt("12x3"), std::invalid_argument);
  CHECK_THROWS_AS(BigInt(""), std::invalid_argument);
}

TEST_CASE("bigint arithmetic carries across limbs") {
  BigInt two(2);
  CHECK(two.pow(100).to_string() == "1267650600228229401496703205376");
  CHECK((two.pow(100) - BigInt(1)).to_string() == "1267650600228229401496703205375");
  // factorial of 30 computed digit-exactly
  BigInt fact(1);
  for (int i = 2; i <= 30; ++i) fact = fact * BigInt(i);
  CHECK(fact.to_string() == "265252859812191058636308480000000");
  // subtraction that borrows through several limbs
  CHECK((two.pow(96) - two.pow(64)).to_string() == "79228162495817593519834398720");
}

TEST_CASE("bigint division identity on random operands") {
  std::mt19937_64 rng(20240517);
  for (int it = 0; it < 200; ++it) {
    BigInt a(static_cast<std::int64_t>(rng()));
    BigInt b(static_cast<std::int64_t>(rng() % 100000) - 50000);
    a = a * BigInt(static_cast<std::int64_t>(rng())) + BigInt(static_cast<std::int64_t>(rng() % 977));
    if (b.is_zero()) b = BigInt(7);
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    // remainder keeps the sign of the dividend when nonzero
    if (!r.is_zero()) CHECK(r.sign() == a.sign());
  }
  BigInt q, r;
  CHECK_THROWS_AS(BigInt::divmod(BigInt(5), BigInt(0), q, r), std::domain_error);
}

TEST_CASE("bigint gcd and pow") {
  CHECK(BigInt::gcd(BigInt(0), BigInt(0)) == BigInt(0));
  CHECK(BigInt::gcd(BigInt(0), BigInt(-12)) == BigInt(12));
  CHECK(BigInt::gcd(BigInt(48), BigInt(36)) == BigInt(12));
  CHECK(BigInt::gcd(BigInt(2).pow(40), BigInt(6).pow(20)) == BigInt(2).pow(20));
  CHECK(BigInt(10).pow(0) == BigInt(1));
  CHECK(BigInt(-3).pow(3) == BigInt(-27));
  CHECK(BigInt(10).pow(25).to_string() == "10000000000000000000000000");
}

TEST_CASE("bigint int64 round trip and bit length") {
  CHECK(BigInt(0).bit_length() == 0);
  CHECK(BigInt(1).bit_length() == 1);
  CHECK(BigInt(255).bit_length() == 8);
  CHECK(BigInt(2).pow(100).bit_length() == 101);
  BigInt maxv(INT64_C(9223372036854775807));
  CHECK(maxv.fits_int64());
  CHECK(maxv.to_int64() == INT64_C(9223372036854775807));
  CHECK(!(maxv + BigInt(1)).fits_int64());
  BigInt minv("-9223372036854775808");
  CHECK(minv.fits_int64());
  CHECK(minv.to_int64() == std::numeric_limits<std::int64_t>::min());
  CHECK(!(minv - BigInt(1)).fits_int64());
}

TEST_CASE("rational normalization and comparisons") {
  Rational r(BigInt(6), BigInt(-8));
  CHECK(r.num() == BigInt(-3));
  CHECK(r.den() == BigInt(4));
  CHECK(r.to_string() == "-3/4");
  CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
  CHECK(Rational("22/7") > Rational(3));
  CHECK(Rational("22/7") < Rational("355/113"));
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  // 1/1 + 1/2 + ... + 1/10 has a well known reduced value
  Rational h(0);
  for (int i = 1; i <= 10; ++i) h += Rational(BigInt(1), BigInt(i));
  CHECK(h.to_string() == "7381/2520");
  Rational a("3/7"), b("-2/5");
  CHECK((a * b).to_string() == "-6/35");
  CHECK((a / b).to_string() == "-15/14");
  CHECK((a + b).to_string() == "1/35");
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("rational floor") {
  CHECK(Rational("7/2").floor() == BigInt(3));
  CHECK(Rational("-7/2").floor() == BigInt(-4));
  CHECK(Rational("-4/2").floor() == BigInt(-2));
  CHECK(Rational(0).floor() == BigInt(0));
}

TEST_CASE("prime field basics") {
  CHECK(Fp::P == 2147483647u);
  CHECK(Fp(-1).value() == Fp::P - 1);
  CHECK((Fp(Fp::P) + Fp(1)).value() == 1u);
  CHECK((Fp(123456789) * Fp(987654321)).value() ==
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(123456789) * 987654321) % Fp::P));
}

TEST_CASE("prime field inverse and pow") {
  std::mt19937 rng(99);
  for (int it = 0; it < 100; ++it) {
    Fp a(static_cast<std::int64_t>(rng() % (Fp::P - 1)) + 1);
    CHECK((a * a.inverse()).value() == 1u);
    // Fermat: a^(P-1) = 1
    CHECK(a.pow(Fp::P - 1).value() == 1u);
  }
  CHECK(Fp(2).inverse().value() == (Fp::P + 1) / 2);
  CHECK_THROWS_AS(Fp(0).inverse(), std::domain_error);
  CHECK(Fp(3).pow(0).value() == 1u);
}
