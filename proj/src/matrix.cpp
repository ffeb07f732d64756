#include "latq/matrix.hpp"

namespace latq {

RatMat rat_inverse(const RatMat& m) {
  require(m.rows() == m.cols(), "inverse of a non-square matrix");
  const Eigen::Index n = m.rows();
  RatMat a = m;
  RatMat inv = RatMat::Identity(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (!a(i, k).is_zero()) {
        pivot = i;
        break;
      }
    require(pivot >= 0, "matrix is singular");
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      inv.row(k).swap(inv.row(pivot));
    }
    Rat d = a(k, k);
    a.row(k) /= d;
    inv.row(k) /= d;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      Rat f = a(i, k);
      a.row(i) -= a.row(k) * f;
      inv.row(i) -= inv.row(k) * f;
    }
  }
  return inv;
}

IntMat unimodular_inverse(const IntMat& m) {
  return to_int(rat_inverse(to_rat(m)));
}

Int bareiss_det(const IntMat& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (!a(i, k).is_zero()) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

}  // namespace latq
