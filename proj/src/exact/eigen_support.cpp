#include "heatspec/exact/eigen_support.hpp"

#include <stdexcept>

namespace heatspec::exact {

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
  const Eigen::Index n = a.rows();
  QMatrix w = a;
  QMatrix inv = QMatrix::Constant(n, n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = Rational(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != col) {
      w.row(piv).swap(w.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const Rational p = w(col, col);
    for (Eigen::Index j = 0; j < n; ++j) {
      w(col, j) /= p;
      inv(col, j) /= p;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || w(r, col).is_zero()) continue;
      const Rational f = w(r, col);
      for (Eigen::Index j = 0; j < n; ++j) {
        w(r, j) -= f * w(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace heatspec::exact
