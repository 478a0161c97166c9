#pragma once

// Eigen scalar-trait glue so dense matrices can carry exact scalars
// (BigInt, Rational), plus the integer matrix aliases used throughout.

#include <Eigen/Core>

#include "qcy/bigint.hpp"
#include "qcy/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<qcy::BigInt> : GenericNumTraits<qcy::BigInt> {
  typedef qcy::BigInt Real;
  typedef qcy::BigInt NonInteger;
  typedef qcy::BigInt Nested;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
  static inline Real epsilon() { return qcy::BigInt(0); }
  static inline Real dummy_precision() { return qcy::BigInt(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qcy::Rational> : GenericNumTraits<qcy::Rational> {
  typedef qcy::Rational Real;
  typedef qcy::Rational NonInteger;
  typedef qcy::Rational Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 120,
    MulCost = 120,
  };
  static inline Real epsilon() { return qcy::Rational(0); }
  static inline Real dummy_precision() { return qcy::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qcy {

using IMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using ZMat = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;
using QMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

inline ZMat to_bigint(const IMat& m) {
  ZMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = BigInt(m(i, j));
  return r;
}

inline IMat identity_imat(Eigen::Index n) { return IMat::Identity(n, n); }

// exact entrywise equality (Eigen's own comparisons are approximate or cwise)
template <typename D1, typename D2>
bool mat_eq(const Eigen::MatrixBase<D1>& a, const Eigen::MatrixBase<D2>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <typename D>
bool mat_is_zero(const Eigen::MatrixBase<D>& a) {
  using S = typename D::Scalar;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == S(0))) return false;
  return true;
}

}  // namespace qcy
