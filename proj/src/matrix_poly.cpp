#include "qcy/matrix_poly.hpp"

namespace qcy {

MatrixPoly<std::int64_t> build_p(const CYType& t) {
  if (t.d < 3) throw std::invalid_argument("build_p: d must be at least 3");
  int m = t.m();
  Mat<std::int64_t> I = Mat<std::int64_t>::Identity(m, m);
  Mat<std::int64_t> Z = Mat<std::int64_t>::Zero(m, m);

  MatrixPoly<std::int64_t> p;
  p.c.assign(static_cast<std::size_t>(t.d) + 1, Z);
  p.c[0] = I;
  p.c[1] -= t.M();
  p.c[static_cast<std::size_t>(t.d - 1)] += t.P * t.M().transpose();
  p.c[static_cast<std::size_t>(t.d)] -= t.P;
  p.trim();
  return p;
}

}  // namespace qcy
