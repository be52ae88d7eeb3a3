#include "qdiscord/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

std::vector<std::size_t> digits_of(std::size_t index, const Dims& dims) {
  std::vector<std::size_t> digits(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
  return digits;
}

void check_indices(const std::vector<std::size_t>& indices, std::size_t n) {
  std::vector<bool> seen(n, false);
  for (std::size_t i : indices) {
    if (i >= n) {
      throw Error(ErrorKind::BadSubsystemIndex,
                  "subsystem " + std::to_string(i) + " out of range for " + std::to_string(n));
    }
    if (seen[i]) {
      throw Error(ErrorKind::BadSubsystemIndex, "subsystem " + std::to_string(i) + " repeated");
    }
    seen[i] = true;
  }
}

}  // namespace

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

DensityMatrix DensityMatrix::validated(Matrix data, Dims dims) {
  if (data.rows() != data.cols()) {
    throw Error(ErrorKind::DimMismatch, "density matrix must be square");
  }
  if (dims.empty()) dims = {static_cast<std::size_t>(data.rows())};
  if (std::find(dims.begin(), dims.end(), std::size_t{0}) != dims.end() ||
      product(dims) != static_cast<std::size_t>(data.rows())) {
    throw Error(ErrorKind::DimMismatch, "product of dims does not match matrix size " +
                                            std::to_string(data.rows()));
  }
  const double defect = hermiticity_defect(data);
  if (defect > tolerance::kHermitian) {
    throw Error(ErrorKind::NotHermitian, "max |rho - rho^dagger| = " + std::to_string(defect));
  }
  const Complex trace = data.trace();
  if (std::abs(trace - Complex(1.0, 0.0)) > tolerance::kTrace) {
    throw Error(ErrorKind::NotUnitTrace, "trace = " + std::to_string(trace.real()));
  }
  // Exact Hermitian part; the defect is below 1e-10 anyway.
  Matrix herm = 0.5 * (data + data.adjoint());
  const double min_eig = hermitian_eigenvalues(herm).minCoeff();
  if (min_eig < -tolerance::kNegativeEigenvalue) {
    throw Error(ErrorKind::NotPSD, "minimum eigenvalue " + std::to_string(min_eig));
  }
  return DensityMatrix(std::move(herm), std::move(dims));
}

DensityMatrix DensityMatrix::trusted(Matrix data, Dims dims) {
  return DensityMatrix(std::move(data), std::move(dims));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint(), psi.dims());
}

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

PureState::PureState(Vector amplitudes, Dims dims)
    : amplitudes_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (dims_.empty()) dims_ = {static_cast<std::size_t>(amplitudes_.size())};
  if (product(dims_) != static_cast<std::size_t>(amplitudes_.size())) {
    throw Error(ErrorKind::DimMismatch, "product of dims does not match vector length");
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tolerance::kPureNorm) {
    throw Error(ErrorKind::InvalidState, "state vector norm " + std::to_string(norm));
  }
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw Error(ErrorKind::InvalidState, "zero state vector");
  amplitudes /= norm;
  return PureState(std::move(amplitudes), std::move(dims));
}

DensityMatrix validate_density(const Matrix& matrix, const Dims& dims) {
  return DensityMatrix::validated(matrix, dims);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  RealVector eig = hermitian_eigenvalues(rho.matrix());
  for (auto& x : eig) {
    if (x < -tolerance::kNegativeEigenvalue) {
      throw Error(ErrorKind::InvalidState, "eigenvalue " + std::to_string(x) + " below -1e-8");
    }
    if (x < 0.0) x = 0.0;
  }
  return entropy_of_eigenvalues(eig);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep) {
  const Dims& dims = rho.dims();
  if (keep.empty()) throw Error(ErrorKind::BadSubsystemIndex, "nothing to keep");
  check_indices(keep, dims.size());

  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (!std::binary_search(kept.begin(), kept.end(), i)) traced.push_back(i);
  }
  Dims kept_dims;
  for (std::size_t i : kept) kept_dims.push_back(dims[i]);
  if (traced.empty()) return DensityMatrix::trusted(rho.matrix(), kept_dims);

  Dims traced_dims;
  for (std::size_t i : traced) traced_dims.push_back(dims[i]);
  const std::size_t dk = product(kept_dims);
  const std::size_t dt = product(traced_dims);

  // full[k * dt + t] = full index with kept digits k and traced digits t.
  std::vector<std::size_t> full(dk * dt);
  for (std::size_t idx = 0; idx < rho.dim(); ++idx) {
    const auto d = digits_of(idx, dims);
    std::size_t k = 0, t = 0;
    for (std::size_t i : kept) k = k * dims[i] + d[i];
    for (std::size_t i : traced) t = t * dims[i] + d[i];
    full[k * dt + t] = idx;
  }

  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (std::size_t a = 0; a < dk; ++a) {
    for (std::size_t b = 0; b < dk; ++b) {
      Complex sum = 0.0;
      for (std::size_t t = 0; t < dt; ++t) sum += m(full[a * dt + t], full[b * dt + t]);
      out(a, b) = sum;
    }
  }
  return DensityMatrix::trusted(std::move(out), std::move(kept_dims));
}

DensityMatrix permute_subsystems(const DensityMatrix& rho, const std::vector<std::size_t>& order) {
  const Dims& dims = rho.dims();
  if (order.size() != dims.size()) {
    throw Error(ErrorKind::BadSubsystemIndex, "permutation must list every subsystem once");
  }
  check_indices(order, dims.size());
  Dims new_dims;
  for (std::size_t i : order) new_dims.push_back(dims[i]);

  // source[new_index] = old index
  std::vector<std::size_t> source(rho.dim());
  for (std::size_t old_idx = 0; old_idx < rho.dim(); ++old_idx) {
    const auto d = digits_of(old_idx, dims);
    std::size_t new_idx = 0;
    for (std::size_t j = 0; j < order.size(); ++j) new_idx = new_idx * new_dims[j] + d[order[j]];
    source[new_idx] = old_idx;
  }
  Matrix out(rho.dim(), rho.dim());
  const Matrix& m = rho.matrix();
  for (std::size_t a = 0; a < rho.dim(); ++a) {
    for (std::size_t b = 0; b < rho.dim(); ++b) out(a, b) = m(source[a], source[b]);
  }
  return DensityMatrix::trusted(std::move(out), std::move(new_dims));
}

DensityMatrix bipartition(const DensityMatrix& rho, const std::vector<std::size_t>& first,
                          const std::vector<std::size_t>& second) {
  if (first.empty() || second.empty()) {
    throw Error(ErrorKind::BadSubsystemIndex, "both parts of a bipartition must be non-empty");
  }
  std::vector<std::size_t> all = first;
  all.insert(all.end(), second.begin(), second.end());
  check_indices(all, rho.subsystems());

  std::vector<std::size_t> kept = all;
  std::sort(kept.begin(), kept.end());
  const DensityMatrix reduced = partial_trace(rho, kept);

  auto position = [&](std::size_t original) {
    return static_cast<std::size_t>(std::lower_bound(kept.begin(), kept.end(), original) -
                                    kept.begin());
  };
  std::vector<std::size_t> order;
  for (std::size_t i : all) order.push_back(position(i));
  const DensityMatrix permuted = permute_subsystems(reduced, order);

  std::size_t d_first = 1, d_second = 1;
  for (std::size_t i : first) d_first *= rho.dims()[i];
  for (std::size_t i : second) d_second *= rho.dims()[i];
  return DensityMatrix::trusted(permuted.matrix(), {d_first, d_second});
}

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b) {
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return DensityMatrix::trusted(kron(a.matrix(), b.matrix()), std::move(dims));
}

double conditional_entropy(const DensityMatrix& rho, const std::vector<std::size_t>& conditioning) {
  if (conditioning.empty()) return von_neumann_entropy(rho);
  return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, conditioning));
}

double mutual_information(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorKind::DimMismatch, "mutual information needs a two-subsystem state");
  }
  return von_neumann_entropy(partial_trace(rho, {0})) +
         von_neumann_entropy(partial_trace(rho, {1})) - von_neumann_entropy(rho);
}

PureState purify(const DensityMatrix& rho) {
  const Spectrum spec = hermitian_eigensystem(rho.matrix());
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = spec.eigenvalues.size(); i-- > 0;) {
    if (spec.eigenvalues(i) > 1e-12) support.push_back(i);
  }
  const auto d = static_cast<Eigen::Index>(rho.dim());
  const auto rank = static_cast<Eigen::Index>(support.size());
  Vector psi = Vector::Zero(d * rank);
  for (Eigen::Index j = 0; j < rank; ++j) {
    const double weight = std::sqrt(spec.eigenvalues(support[j]));
    for (Eigen::Index i = 0; i < d; ++i) {
      psi(i * rank + j) = weight * spec.eigenvectors(i, support[j]);
    }
  }
  return PureState::normalized(std::move(psi), {rho.dim(), static_cast<std::size_t>(rank)});
}

}  // namespace qdiscord
