#pragma once

#include "qdiscord/bounds.hpp"

namespace qdiscord {

/// Measurements on A shared between AB and AC, for a tripartite state with
/// subsystems ordered (A, B, C).
///
/// lhs = D_A(AB) + D_A(AC), rhs = D_A(A:BC) + delta_t(AB). The inequality is
/// guaranteed when S(rho_A) = -S(A|BC), which always holds for pure inputs;
/// `precondition_gap` measures how far a mixed input is from it.
struct SameSideReport {
  double d_ab;
  double d_ac;
  double d_a_bc;
  double delta_t;
  double lhs;
  double rhs;
  double slack;
  double precondition_gap;
  bool precondition_met;
  /// d_a_bc - d_ab - d_ac; negative values violate discord monogamy.
  double tau_d;
  /// S(rho_A) - D_A(AC) - J_A(AB)
  double koashi_winter_slack;
  /// J_A(AB) - D_A(AB), the imbalance of the AB marginal.
  double imbalance_ab;
};

inline constexpr double kPreconditionTolerance = 1e-6;

SameSideReport same_side_shareability(const DensityMatrix& rho_abc, const ObservablePair& pair,
                                      const OptimizerConfig& config = {});

double koashi_winter_slack(const DensityMatrix& rho_abc, const OptimizerConfig& config = {});

/// D_A(A:BC) - D_A(AB) - D_A(AC).
double discord_monogamy_score(const DensityMatrix& rho_abc, const OptimizerConfig& config = {});

/// Measurements on B and C respectively, memory A, for a pure tripartite
/// state. D_BC(A:BC) is taken as S(rho_A), exact for pure inputs.
struct CrossSideReport {
  double d_b_ab;
  double d_c_ac;
  double d_bc_a;
  double delta_t_ba;
  double delta_t_ca;
  double delta_bar;
  double lhs;
  double rhs;
  double slack;
};

/// Throws NotPure when |Tr rho^2 - 1| > 1e-8.
CrossSideReport cross_side_shareability(const DensityMatrix& rho_abc, const ObservablePair& pair_b,
                                        const ObservablePair& pair_c,
                                        const OptimizerConfig& config = {});

enum class Party : std::size_t { B = 1, C = 2 };

/// D_X(rho_AX) <= [delta_t^(XA) + S(rho_X) - S(X|A)] / 2, measuring X with
/// memory A. Holds for mixed inputs too.
struct MeasuredPartyBound {
  double lhs;
  double rhs;
  double slack;
};

MeasuredPartyBound measured_party_bound(const DensityMatrix& rho_abc, Party x,
                                        const ObservablePair& pair,
                                        const OptimizerConfig& config = {});

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// Entanglement of formation of a two-qubit state from its concurrence.
/// Throws DimMismatch for anything but dims (2, 2).
double entanglement_of_formation(const DensityMatrix& rho);

}  // namespace qdiscord
