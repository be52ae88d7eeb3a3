#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qdiscord/correlations.hpp"

namespace qdiscord {

/// Terms of the memory-assisted uncertainty relation for one observable
/// pair measured on the first party of a two-party state. Entropies in bits.
///
/// The two-side quantities (s_qq ... delta_f) pair outcome k of X on the
/// first party with outcome k of X on the second, so they exist only when
/// both parties have the same dimension.
struct UncertaintyReport {
  double s_q_given_b;
  double s_r_given_b;
  double log_inv_c;
  double s_a_given_b;
  /// s_q_given_b + s_r_given_b - log_inv_c - s_a_given_b
  double delta_t;

  std::optional<double> s_qq;
  std::optional<double> s_rr;
  std::optional<double> p_q;
  std::optional<double> p_r;
  std::optional<double> h_pq;
  std::optional<double> h_pr;
  /// s_qq + s_rr - log_inv_c - s_a_given_b
  std::optional<double> delta_m;
  /// h_pq + h_pr + (p_q + p_r) log2(d - 1) - log_inv_c - s_a_given_b
  std::optional<double> delta_f;
};

UncertaintyReport uncertainty_report(const DensityMatrix& rho, const ObservablePair& pair);

/// Tomographic discrepancy S(Q|B) + S(R|B) - log2(1/c) - S(A|B).
double delta_tomographic(const DensityMatrix& rho, const ObservablePair& pair);

/// Two-side discrepancy using S(X|X) from measuring X on both parties.
/// Throws DimMismatch when the parties differ in dimension.
double delta_measured(const DensityMatrix& rho, const ObservablePair& pair);

/// Fano-inequality discrepancy. Throws DimMismatch when the parties
/// differ in dimension.
double delta_fano(const DensityMatrix& rho, const ObservablePair& pair);

/// H(X_A | X_B) of the outcome table of X measured on both parties.
double two_side_conditional_entropy(const DensityMatrix& rho, const ProjectiveBasis& basis);

/// Probability that X on the first party and X on the second disagree.
double disagreement_probability(const DensityMatrix& rho, const ProjectiveBasis& basis);

enum class BoundBranch { MutualInformation, MarginalEntropy };
const char* to_string(BoundBranch branch) noexcept;

/// min{S(rho_A), I(rho_AB)} with the active branch recorded.
struct MarginalInformationBound {
  double s_rho_a;
  double mutual_info;
  double value;
  BoundBranch branch;
};

MarginalInformationBound marginal_information_bound(const DensityMatrix& rho);

/// Upper bounds on the first-party discord. lambda_x = (delta_x + I) / 2.
struct BoundReport {
  double s_rho_a;
  double mutual_info;
  double marginal_information;
  BoundBranch branch;
  double lambda_t;
  std::optional<double> lambda_m;
  std::optional<double> lambda_f;
  /// Minimum over every bound that is available.
  double best_bound;
  std::string pair_label;
};

BoundReport lambda_bounds(const DensityMatrix& rho, const ObservablePair& pair);
BoundReport lambda_bounds(const DensityMatrix& rho, const ObservablePair& pair,
                          const UncertaintyReport& uncertainty);

/// Both sides of the uncertainty relation, with and without the
/// discord/classical-correlation imbalance term.
struct EurCheck {
  double lhs;            ///< S(Q|B) + S(R|B)
  double berta_bound;    ///< log2(1/c) + S(A|B)
  double tightened_bound;  ///< berta_bound + max{0, -imbalance}
  double berta_slack;
  double tightened_slack;
  double imbalance;
};

EurCheck eur_check(const DensityMatrix& rho, const ObservablePair& pair,
                   const OptimizerConfig& config = {});
EurCheck eur_check(const UncertaintyReport& uncertainty, const CorrelationReport& correlations);

/// Haar-random pair with an independently sampled basis for Q and R.
ObservablePair random_pair(std::size_t d, std::uint64_t seed);

/// Smallest delta_t over the complementary pair and `samples` random pairs.
/// Ties resolve to the earliest candidate; the complementary pair is
/// candidate zero.
ObservablePair best_pair_search(const DensityMatrix& rho, int samples, std::uint64_t seed);

}  // namespace qdiscord
