#pragma once

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace qdiscord {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors stored as orthonormal columns in matching order.
struct Spectrum {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

/// Throws Error(NotHermitian) when `h` deviates from its adjoint by more
/// than `hermitian_tol` (max-abs).
Spectrum hermitian_eigensystem(const Matrix& h, double hermitian_tol = 1e-8);

/// Eigenvalues only, ascending. No Hermiticity check; hot-path helper.
RealVector hermitian_eigenvalues(const Matrix& h);

double hermiticity_defect(const Matrix& m);
double max_abs(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);

/// Shannon entropy in bits of a probability vector; 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);

/// h(p) = -p log2 p - (1-p) log2(1-p).
double binary_entropy(double p);

/// -sum x log2 x over the entries that are positive.
double entropy_of_eigenvalues(const RealVector& eigenvalues);

}  // namespace qdiscord
