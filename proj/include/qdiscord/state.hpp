#pragma once

#include <cstddef>
#include <vector>

#include "qdiscord/linalg.hpp"

namespace qdiscord {

/// Subsystem dimensions, leftmost subsystem varies slowest (row-major
/// tensor convention): basis index of |i_0 i_1 ... i_{n-1}> is
/// ((i_0 * d_1 + i_1) * d_2 + i_2) ...
using Dims = std::vector<std::size_t>;

std::size_t product(const Dims& dims);

namespace tolerance {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kNegativeEigenvalue = 1e-8;
inline constexpr double kPureNorm = 1e-12;
}  // namespace tolerance

class PureState;

/// Hermitian, positive semidefinite, unit-trace operator together with its
/// subsystem structure. Instances are immutable.
class DensityMatrix {
 public:
  /// Checks every invariant; throws DimMismatch, NotHermitian,
  /// NotUnitTrace or NotPSD.
  static DensityMatrix validated(Matrix data, Dims dims);

  /// Skips the checks. Only for outputs of maps known to preserve the
  /// invariants (partial trace, tensor product, projective measurement).
  static DensityMatrix trusted(Matrix data, Dims dims);

  static DensityMatrix from_pure(const PureState& psi);

  const Matrix& matrix() const noexcept { return data_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(data_.rows()); }
  std::size_t subsystems() const noexcept { return dims_.size(); }

  /// Tr(rho^2).
  double purity() const;

 private:
  DensityMatrix(Matrix data, Dims dims) : data_(std::move(data)), dims_(std::move(dims)) {}

  Matrix data_;
  Dims dims_;
};

/// Unit-norm state vector with subsystem structure.
class PureState {
 public:
  /// Throws InvalidState when the norm is off by more than 1e-12 and
  /// DimMismatch when dims do not multiply to the vector length.
  PureState(Vector amplitudes, Dims dims);

  /// Rescales to unit norm before validating.
  static PureState normalized(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }

  DensityMatrix density() const { return DensityMatrix::from_pure(*this); }

 private:
  Vector amplitudes_;
  Dims dims_;
};

DensityMatrix validate_density(const Matrix& matrix, const Dims& dims);

/// Von Neumann entropy in bits. Eigenvalues in [-1e-8, 0) count as zero;
/// anything more negative raises InvalidState.
double von_neumann_entropy(const DensityMatrix& rho);

/// Reduced state on the listed subsystems; result keeps them in their
/// original order regardless of the order given.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& keep);

/// Reorders subsystems: result subsystem j is input subsystem order[j].
DensityMatrix permute_subsystems(const DensityMatrix& rho, const std::vector<std::size_t>& order);

/// Regroups into a two-party state (first, second); each group is merged
/// into one subsystem in the listed order. Subsystems in neither group are
/// traced out.
DensityMatrix bipartition(const DensityMatrix& rho, const std::vector<std::size_t>& first,
                          const std::vector<std::size_t>& second);

DensityMatrix tensor_product(const DensityMatrix& a, const DensityMatrix& b);

/// S(rest | conditioning) = S(rho) - S(rho_conditioning).
double conditional_entropy(const DensityMatrix& rho, const std::vector<std::size_t>& conditioning);

/// I(A:B) for a two-subsystem state.
double mutual_information(const DensityMatrix& rho);

/// sum_i sqrt(lambda_i) |e_i>|i> over the support; output dims (d, rank).
PureState purify(const DensityMatrix& rho);

}  // namespace qdiscord
