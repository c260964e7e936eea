#pragma once

#include <complex>
#include <Eigen/Dense>

namespace homsim {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Kronecker product, row/col blocks of A scaled by entries of A.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// max |M(i,j)| over all entries; 0 for empty matrices.
double max_abs(const ComplexMatrix& m);

// max |M - M^dagger| entrywise.
double hermiticity_defect(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol);

// Column-major vectorization (Eigen's native layout, so these are cheap).
ComplexVector vec(const ComplexMatrix& m);
ComplexMatrix unvec(const ComplexVector& v, Eigen::Index dim);

// Smallest eigenvalue of a Hermitian matrix (symmetrizes first).
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace homsim
