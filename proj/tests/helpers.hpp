#pragma once

// Small builders shared by the test files.

#include <initializer_list>
#include <vector>

#include "qcy/eigen_support.hpp"

namespace testutil {

inline qcy::IMat im(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  qcy::IMat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (auto v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline qcy::IMat idp(int n) { return qcy::IMat::Identity(n, n); }

// permutation matrix sending vertex i to image[i]
inline qcy::IMat perm(std::initializer_list<int> image) {
  int n = static_cast<int>(image.size());
  qcy::IMat p = qcy::IMat::Zero(n, n);
  int i = 0;
  for (auto j : image) p(i++, j) = 1;
  return p;
}

inline qcy::IMat swap23() { return perm({0, 2, 1}); }
inline qcy::IMat cycle123() { return perm({1, 2, 0}); }

}  // namespace testutil
