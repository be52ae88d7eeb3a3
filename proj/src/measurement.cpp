#include "qdiscord/measurement.hpp"

#include <cmath>
#include <numbers>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

void require_bipartite(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorKind::DimMismatch, "expected a two-subsystem state, got " +
                                            std::to_string(rho.subsystems()) + " subsystems");
  }
}

std::size_t side_index(Side side) { return static_cast<std::size_t>(side); }

}  // namespace

ProjectiveBasis ProjectiveBasis::from_unitary(const Matrix& unitary, std::string label) {
  if (unitary.rows() != unitary.cols() || unitary.rows() == 0) {
    throw Error(ErrorKind::NotUnitary, "basis matrix must be square and non-empty");
  }
  const Matrix gram = unitary.adjoint() * unitary;
  const double defect = max_abs(gram - Matrix::Identity(unitary.rows(), unitary.cols()));
  if (defect > 1e-9) {
    throw Error(ErrorKind::NotUnitary, "max |U^dagger U - I| = " + std::to_string(defect));
  }
  return ProjectiveBasis(unitary, std::move(label));
}

Matrix ProjectiveBasis::projector(std::size_t k) const {
  const Vector v = vector(k);
  return v * v.adjoint();
}

ProjectiveBasis basis_from_unitary(const Matrix& unitary) {
  return ProjectiveBasis::from_unitary(unitary);
}

ProjectiveBasis computational_basis(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return ProjectiveBasis::from_unitary(Matrix::Identity(n, n), "computational");
}

ProjectiveBasis fourier_basis(std::size_t d) {
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "Fourier basis needs d >= 2");
  const auto n = static_cast<Eigen::Index>(d);
  Matrix f(n, n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // Reduce j*k mod d so the phase argument stays small.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * k) % n) /
                           static_cast<double>(d);
      f(j, k) = norm * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return ProjectiveBasis::from_unitary(f, "fourier");
}

double incompatibility_c(const ProjectiveBasis& q, const ProjectiveBasis& r) {
  if (q.dim() != r.dim()) {
    throw Error(ErrorKind::DimMismatch, "observables act on different dimensions");
  }
  return (q.vectors().adjoint() * r.vectors()).cwiseAbs2().maxCoeff();
}

ObservablePair ObservablePair::make(ProjectiveBasis q, ProjectiveBasis r) {
  const double c = incompatibility_c(q, r);
  return ObservablePair{std::move(q), std::move(r), c};
}

ObservablePair complementary_pair(std::size_t d) {
  return ObservablePair::make(computational_basis(d), fourier_basis(d));
}

DensityMatrix measure_side(const DensityMatrix& rho, const ProjectiveBasis& basis, Side side) {
  require_bipartite(rho);
  const std::size_t measured = side_index(side);
  if (basis.dim() != rho.dims()[measured]) {
    throw Error(ErrorKind::DimMismatch, "basis dimension " + std::to_string(basis.dim()) +
                                            " does not match subsystem dimension " +
                                            std::to_string(rho.dims()[measured]));
  }
  const auto other = static_cast<Eigen::Index>(rho.dims()[1 - measured]);
  const Matrix id = Matrix::Identity(other, other);
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const Matrix p = side == Side::First ? kron(basis.projector(k), id) : kron(id, basis.projector(k));
    out += p * rho.matrix() * p;
  }
  return DensityMatrix::trusted(std::move(out), rho.dims());
}

DensityMatrix measure_both(const DensityMatrix& rho, const ProjectiveBasis& a,
                           const ProjectiveBasis& b) {
  return measure_side(measure_side(rho, a, Side::First), b, Side::Second);
}

std::vector<ConditionalState> conditional_states(const DensityMatrix& rho,
                                                 const ProjectiveBasis& basis, Side side) {
  require_bipartite(rho);
  const std::size_t measured = side_index(side);
  if (basis.dim() != rho.dims()[measured]) {
    throw Error(ErrorKind::DimMismatch, "basis dimension does not match measured subsystem");
  }
  const std::size_t other = 1 - measured;
  const auto d_other = static_cast<Eigen::Index>(rho.dims()[other]);
  const Matrix id = Matrix::Identity(d_other, d_other);

  std::vector<ConditionalState> out;
  out.reserve(basis.dim());
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const Matrix p = side == Side::First ? kron(basis.projector(k), id) : kron(id, basis.projector(k));
    const DensityMatrix branch = DensityMatrix::trusted(p * rho.matrix() * p, rho.dims());
    const Matrix reduced = partial_trace(branch, {other}).matrix();
    const double prob = reduced.trace().real();
    if (prob < kNegligibleProbability) {
      out.push_back({prob, DensityMatrix::trusted(id / static_cast<double>(d_other), {rho.dims()[other]}),
                     true});
    } else {
      out.push_back({prob, DensityMatrix::trusted(reduced / prob, {rho.dims()[other]}), false});
    }
  }
  return out;
}

Eigen::MatrixXd joint_outcome_distribution(const DensityMatrix& rho, const ProjectiveBasis& basis_a,
                                           const ProjectiveBasis& basis_b) {
  require_bipartite(rho);
  if (basis_a.dim() != rho.dims()[0] || basis_b.dim() != rho.dims()[1]) {
    throw Error(ErrorKind::DimMismatch, "basis dimensions do not match the subsystems");
  }
  Eigen::MatrixXd table(basis_a.dim(), basis_b.dim());
  for (std::size_t k = 0; k < basis_a.dim(); ++k) {
    for (std::size_t l = 0; l < basis_b.dim(); ++l) {
      const Vector v = kron(basis_a.vector(k), basis_b.vector(l));
      // Clamp rounding noise on vanishing outcomes.
      table(k, l) = std::max(0.0, (v.adjoint() * rho.matrix() * v)(0, 0).real());
    }
  }
  return table;
}

Matrix haar_random_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "unitary dimension must be positive");
  const auto n = static_cast<Eigen::Index>(d);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

Matrix haar_random_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_unitary(d, rng);
}

}  // namespace qdiscord
