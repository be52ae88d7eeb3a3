#include "qdiscord/linalg.hpp"

#include <cmath>

#include "qdiscord/error.hpp"

namespace qdiscord {

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Spectrum hermitian_eigensystem(const Matrix& h, double hermitian_tol) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorKind::NotHermitian, "matrix is not square");
  }
  const double defect = hermiticity_defect(h);
  if (defect > hermitian_tol) {
    throw Error(ErrorKind::NotHermitian,
                "max |H - H^dagger| = " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return Spectrum{solver.eigenvalues(), solver.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double shannon_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double x : p) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double binary_entropy(double p) {
  const double q[2] = {p, 1.0 - p};
  return shannon_entropy(q);
}

double entropy_of_eigenvalues(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double x : eigenvalues) {
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

}  // namespace qdiscord
