#include "schubert/linalg.hpp"

#include <cmath>
#include <limits>

namespace schubert {

bool all_finite(const ComplexMatrix& a) {
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag())) return false;
  return true;
}

ComplexMatrix select_rows(const ComplexMatrix& a, const std::vector<int>& rows) {
  ComplexMatrix out(static_cast<Eigen::Index>(rows.size()), a.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = a.row(rows[i]);
  return out;
}

ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

ComplexMatrix reverse_rows(const ComplexMatrix& a) { return a.colwise().reverse(); }

Complex determinant(const ComplexMatrix& a) {
  if (a.rows() == 0) return 1.0;
  return a.partialPivLu().determinant();
}

Eigen::VectorXd singular_values(const ComplexMatrix& a) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  return svd.singularValues();
}

ComplexMatrix orthonormal_columns(const ComplexMatrix& a) {
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  return qr.householderQ() * ComplexMatrix::Identity(a.rows(), a.cols());
}

ComplexMatrix null_space(const ComplexMatrix& a, double rel_tol) {
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  double top = s.size() > 0 ? s(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * top) ++rank;
  const auto& v = svd.matrixV();
  return v.rightCols(a.cols() - rank);
}

double relative_incidence_residual(const ComplexMatrix& x, const ComplexMatrix& k) {
  ComplexMatrix xk = hcat(x, k);
  double scale = 1.0;
  for (Eigen::Index c = 0; c < xk.cols(); ++c) scale *= xk.col(c).norm();
  if (scale == 0.0) return 0.0;
  return std::abs(determinant(xk)) / scale;
}

double incidence_gap(const ComplexMatrix& x, const ComplexMatrix& k) {
  ComplexMatrix xk = hcat(orthonormal_columns(x), orthonormal_columns(k));
  auto s = singular_values(xk);
  const Eigen::Index r = s.size();
  if (r < 2) return std::numeric_limits<double>::infinity();
  if (s(r - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(r - 2) / s(r - 1);
}

}  // namespace schubert
