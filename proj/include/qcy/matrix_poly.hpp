#pragma once

// Matrix polynomials (coefficient-matrix lists) and truncated matrix series:
// construction of p(t) = I - Mt + PM^T t^(d-1) - Pt^d, exact determinant and
// adjugate, series inversion, and the antipalindromic identity check.

#include <cassert>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qcy/eigen_support.hpp"
#include "qcy/poly.hpp"
#include "qcy/quiver.hpp"

namespace qcy {

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
struct MatrixPoly {
  // coefficient matrices, lowest degree first; trailing zero matrices trimmed
  std::vector<Mat<T>> c;

  int dim() const { return c.empty() ? 0 : static_cast<int>(c[0].rows()); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Mat<T> coeff(int k) const {
    if (k < 0 || k > degree()) return Mat<T>::Constant(c[0].rows(), c[0].cols(), T(0));
    return c[static_cast<std::size_t>(k)];
  }

  void trim() {
    while (!c.empty() && mat_is_zero(c.back())) c.pop_back();
  }

  Poly<T> entry(int i, int j) const {
    std::vector<T> coeffs;
    coeffs.reserve(c.size());
    for (const auto& mat : c) coeffs.push_back(mat(i, j));
    return Poly<T>(std::move(coeffs));
  }

  template <typename U>
  MatrixPoly<U> convert() const {
    MatrixPoly<U> r;
    for (const auto& mat : c) {
      Mat<U> conv(mat.rows(), mat.cols());
      for (Eigen::Index i = 0; i < mat.rows(); ++i)
        for (Eigen::Index j = 0; j < mat.cols(); ++j) conv(i, j) = U(mat(i, j));
      r.c.push_back(std::move(conv));
    }
    return r;
  }

  static MatrixPoly from_entries(const std::vector<std::vector<Poly<T>>>& entries) {
    MatrixPoly r;
    int m = static_cast<int>(entries.size());
    int deg = -1;
    for (const auto& row : entries)
      for (const auto& p : row) deg = std::max(deg, p.degree());
    for (int k = 0; k <= deg; ++k) {
      Mat<T> mat(m, m);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat(i, j) = entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].coeff(k);
      r.c.push_back(std::move(mat));
    }
    if (deg < 0) r.c.push_back(Mat<T>::Constant(m, m, T(0)));
    return r;
  }

  friend bool operator==(const MatrixPoly& a, const MatrixPoly& b) {
    MatrixPoly x = a, y = b;
    x.trim();
    y.trim();
    if (x.c.size() != y.c.size()) return false;
    for (std::size_t k = 0; k < x.c.size(); ++k)
      if (!mat_eq(x.c[k], y.c[k])) return false;
    return true;
  }
};

template <typename T>
MatrixPoly<T> operator*(const MatrixPoly<T>& a, const MatrixPoly<T>& b) {
  MatrixPoly<T> r;
  if (a.c.empty() || b.c.empty()) return r;
  int deg = a.degree() + b.degree();
  for (int k = 0; k <= deg; ++k) {
    Mat<T> acc = Mat<T>::Constant(a.c[0].rows(), b.c[0].cols(), T(0));
    for (int i = std::max(0, k - b.degree()); i <= std::min(k, a.degree()); ++i)
      acc += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(k - i)];
    r.c.push_back(std::move(acc));
  }
  r.trim();
  return r;
}

template <typename T>
struct MatrixSeries {
  int N = 0;                // truncation order; H[0..N] present
  std::vector<Mat<T>> H;

  const Mat<T>& at(int n) const { return H[static_cast<std::size_t>(n)]; }
};

// p(t) = I - Mt + PM^T t^(d-1) - Pt^d; for d = 3 the t^2 and the t^1 terms
// are distinct slots, the coefficients combine only at d < 3 which is invalid
MatrixPoly<std::int64_t> build_p(const CYType& t);

template <typename T>
std::vector<std::vector<Poly<T>>> entries_of(const MatrixPoly<T>& p) {
  int m = p.dim();
  std::vector<std::vector<Poly<T>>> e(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) e[static_cast<std::size_t>(i)].push_back(p.entry(i, j));
  return e;
}

namespace detail {

template <typename T>
Poly<T> poly_det(const std::vector<std::vector<Poly<T>>>& a) {
  std::size_t n = a.size();
  if (n == 0) return Poly<T>(T(1));
  if (n == 1) return a[0][0];
  Poly<T> acc;
  for (std::size_t r = 0; r < n; ++r) {
    // minor deleting row r, column 0
    std::vector<std::vector<Poly<T>>> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      sub.emplace_back(a[i].begin() + 1, a[i].end());
    }
    Poly<T> term = a[r][0] * poly_det(sub);
    if (r % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

}  // namespace detail

// exact determinant and adjugate; p * adj = det * I
template <typename T>
std::pair<Poly<T>, MatrixPoly<T>> det_adj(const MatrixPoly<T>& p) {
  auto a = entries_of(p);
  std::size_t n = a.size();
  Poly<T> det = detail::poly_det(a);
  std::vector<std::vector<Poly<T>>> adj(n, std::vector<Poly<T>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // adj(i,j) = (-1)^(i+j) * minor(j,i)
      std::vector<std::vector<Poly<T>>> sub;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Poly<T>> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(a[r][c]);
        sub.push_back(std::move(row));
      }
      Poly<T> mdet = detail::poly_det(sub);
      adj[i][j] = ((i + j) % 2) ? -mdet : mdet;
    }
  return {std::move(det), MatrixPoly<T>::from_entries(adj)};
}

// p(t) = -t^s * C * p(1/t)^T with C = -(coefficient of t^s); for engine-built
// p this is the twisted antipalindromic identity with C = P, and it reduces
// to the classical -t^s p(1/t)^T = p(t) when P = I
template <typename T>
bool antipalindromic_check(const MatrixPoly<T>& p, int s) {
  if (p.degree() > s) return false;
  Mat<T> C = -p.coeff(s);
  for (int k = 0; k <= s; ++k) {
    Mat<T> lhs = p.coeff(k);
    Mat<T> rhs = -(C * p.coeff(s - k).transpose());
    if (!mat_eq(lhs, rhs)) return false;
  }
  return true;
}

// unique h with h * p = p * h = I (mod t^(N+1)); requires p constant term I
template <typename T>
MatrixSeries<T> invert_series(const MatrixPoly<T>& p, int N) {
  int m = p.dim();
  Mat<T> I = Mat<T>::Constant(m, m, T(0));
  for (int i = 0; i < m; ++i) I(i, i) = T(1);
  if (p.c.empty() || !mat_eq(p.c[0], I)) throw std::invalid_argument("invert_series: constant term is not I");

  MatrixSeries<T> h;
  h.N = N;
  h.H.push_back(I);
  for (int n = 1; n <= N; ++n) {
    Mat<T> acc = Mat<T>::Constant(m, m, T(0));
    for (int k = 1; k <= std::min(n, p.degree()); ++k)
      acc += h.H[static_cast<std::size_t>(n - k)] * p.coeff(k);
    h.H.push_back(-acc);
  }
  return h;
}

struct SeriesFailure {
  int degree;
  int i;
  int j;
};

// first negative coefficient entry, if any
template <typename T>
std::optional<SeriesFailure> nonneg_up_to(const MatrixSeries<T>& h) {
  for (int n = 0; n <= h.N; ++n) {
    const auto& H = h.at(n);
    for (Eigen::Index i = 0; i < H.rows(); ++i)
      for (Eigen::Index j = 0; j < H.cols(); ++j)
        if (H(i, j) < T(0)) return SeriesFailure{n, static_cast<int>(i), static_cast<int>(j)};
  }
  return std::nullopt;
}

}  // namespace qcy
