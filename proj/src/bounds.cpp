#include "qdiscord/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

void require_pair_on_first(const DensityMatrix& rho, const ObservablePair& pair) {
  if (rho.subsystems() != 2) throw Error(ErrorKind::DimMismatch, "expected a two-subsystem state");
  if (pair.dim() != rho.dims()[0] || pair.r.dim() != rho.dims()[0]) {
    throw Error(ErrorKind::DimMismatch, "observable pair dimension does not match the measured party");
  }
}

void require_equal_parties(const DensityMatrix& rho) {
  if (rho.dims()[0] != rho.dims()[1]) {
    throw Error(ErrorKind::DimMismatch,
                "two-side quantities need equal party dimensions to pair outcomes");
  }
}

/// H(first | second) of a joint distribution.
double conditional_shannon(const Eigen::MatrixXd& table) {
  const Eigen::VectorXd flat = table.reshaped();
  const Eigen::VectorXd second = table.colwise().sum().transpose();
  return shannon_entropy({flat.data(), static_cast<std::size_t>(flat.size())}) -
         shannon_entropy({second.data(), static_cast<std::size_t>(second.size())});
}

struct BaseTerms {
  double s_b;
  double s_a_given_b;
};

BaseTerms base_terms(const DensityMatrix& rho) {
  const double s_b = von_neumann_entropy(partial_trace(rho, {1}));
  return {s_b, von_neumann_entropy(rho) - s_b};
}

double measured_given_memory(const DensityMatrix& rho, const ProjectiveBasis& basis, double s_b) {
  return von_neumann_entropy(measure_side(rho, basis, Side::First)) - s_b;
}

}  // namespace

double two_side_conditional_entropy(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  require_equal_parties(rho);
  return conditional_shannon(joint_outcome_distribution(rho, basis, basis));
}

double disagreement_probability(const DensityMatrix& rho, const ProjectiveBasis& basis) {
  require_equal_parties(rho);
  const Eigen::MatrixXd table = joint_outcome_distribution(rho, basis, basis);
  return std::clamp(1.0 - table.diagonal().sum(), 0.0, 1.0);
}

UncertaintyReport uncertainty_report(const DensityMatrix& rho, const ObservablePair& pair) {
  require_pair_on_first(rho, pair);
  const BaseTerms base = base_terms(rho);

  UncertaintyReport u{};
  u.s_q_given_b = measured_given_memory(rho, pair.q, base.s_b);
  u.s_r_given_b = measured_given_memory(rho, pair.r, base.s_b);
  u.log_inv_c = -std::log2(pair.c);
  u.s_a_given_b = base.s_a_given_b;
  u.delta_t = u.s_q_given_b + u.s_r_given_b - u.log_inv_c - u.s_a_given_b;

  if (rho.dims()[0] == rho.dims()[1]) {
    u.s_qq = two_side_conditional_entropy(rho, pair.q);
    u.s_rr = two_side_conditional_entropy(rho, pair.r);
    u.p_q = disagreement_probability(rho, pair.q);
    u.p_r = disagreement_probability(rho, pair.r);
    u.h_pq = binary_entropy(*u.p_q);
    u.h_pr = binary_entropy(*u.p_r);
    const double log_d_minus_1 = std::log2(static_cast<double>(rho.dims()[0]) - 1.0);
    u.delta_m = *u.s_qq + *u.s_rr - u.log_inv_c - u.s_a_given_b;
    u.delta_f = *u.h_pq + *u.h_pr + (*u.p_q + *u.p_r) * log_d_minus_1 - u.log_inv_c -
                u.s_a_given_b;
  }
  return u;
}

double delta_tomographic(const DensityMatrix& rho, const ObservablePair& pair) {
  require_pair_on_first(rho, pair);
  const BaseTerms base = base_terms(rho);
  return measured_given_memory(rho, pair.q, base.s_b) + measured_given_memory(rho, pair.r, base.s_b) +
         std::log2(pair.c) - base.s_a_given_b;
}

double delta_measured(const DensityMatrix& rho, const ObservablePair& pair) {
  require_pair_on_first(rho, pair);
  require_equal_parties(rho);
  return *uncertainty_report(rho, pair).delta_m;
}

double delta_fano(const DensityMatrix& rho, const ObservablePair& pair) {
  require_pair_on_first(rho, pair);
  require_equal_parties(rho);
  return *uncertainty_report(rho, pair).delta_f;
}

const char* to_string(BoundBranch branch) noexcept {
  return branch == BoundBranch::MutualInformation ? "mutual-info" : "marginal-entropy";
}

MarginalInformationBound marginal_information_bound(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) throw Error(ErrorKind::DimMismatch, "expected a two-subsystem state");
  const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
  const double mutual = mutual_information(rho);
  const BoundBranch branch =
      mutual < s_a ? BoundBranch::MutualInformation : BoundBranch::MarginalEntropy;
  return {s_a, mutual, std::min(s_a, mutual), branch};
}

BoundReport lambda_bounds(const DensityMatrix& rho, const ObservablePair& pair) {
  return lambda_bounds(rho, pair, uncertainty_report(rho, pair));
}

BoundReport lambda_bounds(const DensityMatrix& rho, const ObservablePair& pair,
                          const UncertaintyReport& u) {
  const MarginalInformationBound mib = marginal_information_bound(rho);
  BoundReport b{};
  b.s_rho_a = mib.s_rho_a;
  b.mutual_info = mib.mutual_info;
  b.marginal_information = mib.value;
  b.branch = mib.branch;
  b.lambda_t = 0.5 * (u.delta_t + mib.mutual_info);
  if (u.delta_m) b.lambda_m = 0.5 * (*u.delta_m + mib.mutual_info);
  if (u.delta_f) b.lambda_f = 0.5 * (*u.delta_f + mib.mutual_info);
  b.best_bound = std::min(mib.value, b.lambda_t);
  if (b.lambda_m) b.best_bound = std::min(b.best_bound, *b.lambda_m);
  if (b.lambda_f) b.best_bound = std::min(b.best_bound, *b.lambda_f);
  b.pair_label = pair.q.label() + "/" + pair.r.label();
  return b;
}

EurCheck eur_check(const UncertaintyReport& u, const CorrelationReport& correlations) {
  if (correlations.measured_side != Side::First) {
    throw Error(ErrorKind::InvalidArgument, "imbalance must come from discord measured on the first party");
  }
  EurCheck e{};
  e.lhs = u.s_q_given_b + u.s_r_given_b;
  e.berta_bound = u.log_inv_c + u.s_a_given_b;
  e.imbalance = correlations.imbalance;
  e.tightened_bound = e.berta_bound + std::max(0.0, -e.imbalance);
  e.berta_slack = e.lhs - e.berta_bound;
  e.tightened_slack = e.lhs - e.tightened_bound;
  return e;
}

EurCheck eur_check(const DensityMatrix& rho, const ObservablePair& pair, const OptimizerConfig& config) {
  return eur_check(uncertainty_report(rho, pair), quantum_discord(rho, Side::First, config));
}

ObservablePair random_pair(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  ProjectiveBasis q = ProjectiveBasis::from_unitary(haar_random_unitary(d, rng), "haar-q");
  ProjectiveBasis r = ProjectiveBasis::from_unitary(haar_random_unitary(d, rng), "haar-r");
  return ObservablePair::make(std::move(q), std::move(r));
}

ObservablePair best_pair_search(const DensityMatrix& rho, int samples, std::uint64_t seed) {
  if (samples < 0) throw Error(ErrorKind::InvalidArgument, "samples must be >= 0");
  const std::size_t d = rho.dims().at(0);
  ObservablePair best = complementary_pair(d);
  double best_delta = delta_tomographic(rho, best);
  for (int i = 0; i < samples; ++i) {
    ObservablePair candidate = random_pair(d, derive_seed(seed, static_cast<std::uint64_t>(i)));
    const double delta = delta_tomographic(rho, candidate);
    if (delta < best_delta) {
      best_delta = delta;
      best = std::move(candidate);
    }
  }
  return best;
}

}  // namespace qdiscord
