#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdiscord/random.hpp"
#include "qdiscord/state.hpp"

namespace qdiscord {

/// Orthonormal basis defining a rank-1 projective measurement. The basis
/// vectors are the columns of vectors().
class ProjectiveBasis {
 public:
  /// Throws NotUnitary when max |U^dagger U - I| > 1e-9.
  static ProjectiveBasis from_unitary(const Matrix& unitary, std::string label = {});

  std::size_t dim() const noexcept { return static_cast<std::size_t>(vectors_.cols()); }
  const Matrix& vectors() const noexcept { return vectors_; }
  Vector vector(std::size_t k) const { return vectors_.col(static_cast<Eigen::Index>(k)); }
  Matrix projector(std::size_t k) const;
  const std::string& label() const noexcept { return label_; }

 private:
  ProjectiveBasis(Matrix vectors, std::string label)
      : vectors_(std::move(vectors)), label_(std::move(label)) {}

  Matrix vectors_;
  std::string label_;
};

ProjectiveBasis basis_from_unitary(const Matrix& unitary);
ProjectiveBasis computational_basis(std::size_t d);

/// Columns (1/sqrt d) sum_j w^{jk} |j>, w = exp(2 pi i / d). Throws
/// InvalidArgument for d < 2.
ProjectiveBasis fourier_basis(std::size_t d);

/// max_{k,l} |<q_k|r_l>|^2.
double incompatibility_c(const ProjectiveBasis& q, const ProjectiveBasis& r);

struct ObservablePair {
  ProjectiveBasis q;
  ProjectiveBasis r;
  double c;

  static ObservablePair make(ProjectiveBasis q, ProjectiveBasis r);
  std::size_t dim() const noexcept { return q.dim(); }
};

/// (computational, Fourier): log2(1/c) = log2 d.
ObservablePair complementary_pair(std::size_t d);

/// Measured party of a two-subsystem state.
enum class Side : std::size_t { First = 0, Second = 1 };

/// sum_k (P_k (x) I) rho (P_k (x) I) with the projectors acting on `side`.
DensityMatrix measure_side(const DensityMatrix& rho, const ProjectiveBasis& basis, Side side);

/// Measures both parties, a first then b second (commuting).
DensityMatrix measure_both(const DensityMatrix& rho, const ProjectiveBasis& a,
                           const ProjectiveBasis& b);

inline constexpr double kNegligibleProbability = 1e-12;

struct ConditionalState {
  double probability;
  /// Post-measurement state of the unmeasured party. Outcomes with
  /// probability below 1e-12 carry the maximally mixed placeholder and
  /// `negligible = true`; they are excluded from entropy averages.
  DensityMatrix state;
  bool negligible;
};

std::vector<ConditionalState> conditional_states(const DensityMatrix& rho,
                                                 const ProjectiveBasis& basis, Side side);

/// Table p(k, l) of outcome k of `basis_a` on the first party and outcome l
/// of `basis_b` on the second.
Eigen::MatrixXd joint_outcome_distribution(const DensityMatrix& rho, const ProjectiveBasis& basis_a,
                                           const ProjectiveBasis& basis_b);

/// Haar-distributed unitary: complex Ginibre matrix, QR, and the phases of
/// diag(R) moved into Q.
Matrix haar_random_unitary(std::size_t d, std::uint64_t seed);
Matrix haar_random_unitary(std::size_t d, Rng& rng);

}  // namespace qdiscord
