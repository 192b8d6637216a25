#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace schubert {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

bool all_finite(const ComplexMatrix& a);

/// Rows selected by 0-based indices, in the given order.
ComplexMatrix select_rows(const ComplexMatrix& a, const std::vector<int>& rows);
ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b);
/// Reverse the row order (the coordinate involution e_i <-> e_{n+1-i}).
ComplexMatrix reverse_rows(const ComplexMatrix& a);

Complex determinant(const ComplexMatrix& a);
Eigen::VectorXd singular_values(const ComplexMatrix& a);
/// Orthonormal basis of the column space (assumes full column rank).
ComplexMatrix orthonormal_columns(const ComplexMatrix& a);
/// Basis of the right kernel, dimension decided by a relative singular value threshold.
ComplexMatrix null_space(const ComplexMatrix& a, double rel_tol = 1e-10);

/// |det[X|K]| divided by the product of the column norms (Hadamard-normalized), for square [X|K].
double relative_incidence_residual(const ComplexMatrix& x, const ComplexMatrix& k);
/// sigma_{r-1} / sigma_r of [orth(X) | orth(K)], r its column count. Large when X meets K.
double incidence_gap(const ComplexMatrix& x, const ComplexMatrix& k);

}  // namespace schubert
