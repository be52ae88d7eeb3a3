#include "qdiscord/monogamy.hpp"

#include <algorithm>
#include <cmath>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

void require_tripartite(const DensityMatrix& rho) {
  if (rho.subsystems() != 3) {
    throw Error(ErrorKind::DimMismatch, "expected a tripartite state ordered (A, B, C)");
  }
}

void require_two_qubits(const DensityMatrix& rho) {
  if (rho.dims() != Dims{2, 2}) throw Error(ErrorKind::DimMismatch, "expected a two-qubit state");
}

}  // namespace

SameSideReport same_side_shareability(const DensityMatrix& rho_abc, const ObservablePair& pair,
                                      const OptimizerConfig& config) {
  require_tripartite(rho_abc);
  const DensityMatrix rho_ab = bipartition(rho_abc, {0}, {1});
  const DensityMatrix rho_ac = bipartition(rho_abc, {0}, {2});
  const CorrelationReport ab = quantum_discord(rho_ab, Side::First, config);
  const CorrelationReport ac = quantum_discord(rho_ac, Side::First, config);
  const CorrelationReport a_bc = discord_measured_on(rho_abc, {0}, {1, 2}, config);

  const double s_a = von_neumann_entropy(partial_trace(rho_abc, {0}));
  const double s_a_given_bc = von_neumann_entropy(rho_abc) -
                              von_neumann_entropy(partial_trace(rho_abc, {1, 2}));

  SameSideReport r{};
  r.d_ab = ab.discord;
  r.d_ac = ac.discord;
  r.d_a_bc = a_bc.discord;
  r.delta_t = delta_tomographic(rho_ab, pair);
  r.lhs = r.d_ab + r.d_ac;
  r.rhs = r.d_a_bc + r.delta_t;
  r.slack = r.rhs - r.lhs;
  r.precondition_gap = std::abs(s_a + s_a_given_bc);
  r.precondition_met = r.precondition_gap <= kPreconditionTolerance;
  r.tau_d = r.d_a_bc - r.d_ab - r.d_ac;
  r.koashi_winter_slack = s_a - ac.discord - ab.classical_correlation;
  r.imbalance_ab = ab.imbalance;
  return r;
}

double koashi_winter_slack(const DensityMatrix& rho_abc, const OptimizerConfig& config) {
  require_tripartite(rho_abc);
  const double s_a = von_neumann_entropy(partial_trace(rho_abc, {0}));
  const double d_ac = discord_measured_on(rho_abc, {0}, {2}, config).discord;
  const double j_ab = discord_measured_on(rho_abc, {0}, {1}, config).classical_correlation;
  return s_a - d_ac - j_ab;
}

double discord_monogamy_score(const DensityMatrix& rho_abc, const OptimizerConfig& config) {
  require_tripartite(rho_abc);
  return discord_measured_on(rho_abc, {0}, {1, 2}, config).discord -
         discord_measured_on(rho_abc, {0}, {1}, config).discord -
         discord_measured_on(rho_abc, {0}, {2}, config).discord;
}

CrossSideReport cross_side_shareability(const DensityMatrix& rho_abc, const ObservablePair& pair_b,
                                        const ObservablePair& pair_c,
                                        const OptimizerConfig& config) {
  require_tripartite(rho_abc);
  const double purity = rho_abc.purity();
  if (std::abs(purity - 1.0) > 1e-8) {
    throw Error(ErrorKind::NotPure, "Tr rho^2 = " + std::to_string(purity));
  }
  const DensityMatrix rho_ba = bipartition(rho_abc, {1}, {0});
  const DensityMatrix rho_ca = bipartition(rho_abc, {2}, {0});

  CrossSideReport r{};
  r.d_b_ab = quantum_discord(rho_ba, Side::First, config).discord;
  r.d_c_ac = quantum_discord(rho_ca, Side::First, config).discord;
  r.d_bc_a = von_neumann_entropy(partial_trace(rho_abc, {0}));
  r.delta_t_ba = delta_tomographic(rho_ba, pair_b);
  r.delta_t_ca = delta_tomographic(rho_ca, pair_c);
  r.delta_bar = 0.5 * (r.delta_t_ba + r.delta_t_ca);
  r.lhs = r.d_b_ab + r.d_c_ac;
  r.rhs = r.d_bc_a + r.delta_bar;
  r.slack = r.rhs - r.lhs;
  return r;
}

MeasuredPartyBound measured_party_bound(const DensityMatrix& rho_abc, Party x,
                                        const ObservablePair& pair,
                                        const OptimizerConfig& config) {
  require_tripartite(rho_abc);
  const std::size_t xi = static_cast<std::size_t>(x);
  const DensityMatrix rho_xa = bipartition(rho_abc, {xi}, {0});
  const double s_x = von_neumann_entropy(partial_trace(rho_xa, {0}));
  const double s_x_given_a = von_neumann_entropy(rho_xa) - von_neumann_entropy(partial_trace(rho_xa, {1}));

  MeasuredPartyBound b{};
  b.lhs = quantum_discord(rho_xa, Side::First, config).discord;
  b.rhs = 0.5 * (delta_tomographic(rho_xa, pair) + s_x - s_x_given_a);
  b.slack = b.rhs - b.lhs;
  return b;
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubits(rho);
  Matrix yy = Matrix::Zero(4, 4);
  // sigma_y (x) sigma_y is real: anti-diagonal (-1, 1, 1, -1).
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const Matrix& m = rho.matrix();
  const Matrix flipped = yy * m.conjugate() * yy;

  const Spectrum spec = hermitian_eigensystem(m);
  RealVector roots = spec.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const Matrix sqrt_rho = spec.eigenvectors * roots.asDiagonal() * spec.eigenvectors.adjoint();
  Matrix inner = sqrt_rho * flipped * sqrt_rho;
  inner = 0.5 * (inner + inner.adjoint());
  // Roundoff leaves O(1e-16) eigenvalues where the exact ones vanish; their
  // square roots would otherwise shift C by ~1e-8.
  RealVector lambda = hermitian_eigenvalues(inner);
  for (double& x : lambda) x = x < 1e-13 ? 0.0 : std::sqrt(x);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = std::min(1.0, concurrence(rho));
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

}  // namespace qdiscord
