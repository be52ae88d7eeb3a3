#pragma once

#include <cstdint>
#include <vector>

#include "qdiscord/measurement.hpp"

namespace qdiscord {

enum class SearchMode {
  /// Haar-seeded restarts, each refined by Nelder-Mead over Givens angles.
  MultiStartLocal,
  /// Exhaustive 1-degree (theta, phi) grid plus local polish. Measured
  /// party must be a qubit.
  QubitGridOracle,
};

struct OptimizerConfig {
  int restarts = 24;
  double tolerance = 1e-9;
  /// Per local search.
  int max_iterations = 500;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::MultiStartLocal;

  /// Throws InvalidArgument when restarts < 1, tolerance <= 0 or
  /// max_iterations < 1.
  void validate() const;
};

struct MinimizationResult {
  double value;
  ProjectiveBasis argmin;
  /// False when the best value was still moving by >= tolerance after the
  /// last restart batch; `value` is then only an upper estimate.
  bool converged;
  int restarts_run;
};

/// sum_k p_k S(rho_{other|k}) for the projective measurement `basis` on
/// `side`. Negligible outcomes (p_k < 1e-12) contribute zero.
double measured_conditional_entropy(const DensityMatrix& rho, const ProjectiveBasis& basis,
                                    Side side);

/// Same quantity evaluated as S(measured state) - H(outcome distribution).
double measured_conditional_entropy_dephasing(const DensityMatrix& rho,
                                              const ProjectiveBasis& basis, Side side);

/// Minimum of measured_conditional_entropy over rank-1 projective bases on
/// `side`. Deterministic for a given config.
MinimizationResult minimize_conditional_entropy(const DensityMatrix& rho, Side side,
                                                const OptimizerConfig& config = {});

/// Brute-force qubit search: 181 x 360 grid in degrees, then Nelder-Mead
/// polish from the best grid point. Conditional entropies are computed by
/// the dephasing route. Throws DimMismatch unless the measured party is a
/// qubit.
MinimizationResult qubit_grid_minimum(const DensityMatrix& rho, Side side);

/// Discord and classical correlation of a two-party state, measuring `side`.
/// All entries in bits. The discord is minimized over projective
/// measurements only, so it is an upper estimate of the POVM value.
struct CorrelationReport {
  Side measured_side;
  double mutual_information;
  double classical_correlation;
  double discord;
  double min_conditional_entropy;
  ProjectiveBasis argmin_basis;
  /// S(unmeasured | measured)
  double conditional_entropy;
  /// classical_correlation - discord
  double imbalance;
  bool converged;
};

double classical_correlation(const DensityMatrix& rho, Side side, const OptimizerConfig& config = {});

CorrelationReport quantum_discord(const DensityMatrix& rho, Side side,
                                  const OptimizerConfig& config = {});

/// Discord of the bipartition (measured : other) of a multipartite state,
/// measuring the `measured` group. Subsystems listed in neither group are
/// traced out.
CorrelationReport discord_measured_on(const DensityMatrix& rho,
                                      const std::vector<std::size_t>& measured,
                                      const std::vector<std::size_t>& other,
                                      const OptimizerConfig& config = {});

}  // namespace qdiscord
