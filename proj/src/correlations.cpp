#include "qdiscord/correlations.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <numbers>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include "qdiscord/error.hpp"

namespace qdiscord {

namespace {

constexpr int kMaxBatches = 4;
constexpr double kInitialStep = 0.5;
constexpr double kPolishStep = 0.05;
constexpr double kSimplexSize = 1e-8;

/// State regrouped as (measured, other) so that measuring the first party
/// is enough.
DensityMatrix measured_first(const DensityMatrix& rho, Side side) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorKind::DimMismatch, "expected a two-subsystem state");
  }
  return side == Side::First ? rho : permute_subsystems(rho, {1, 0});
}

/// Precomputes the d_m x d_m blocks of rho so that the unnormalized
/// conditional state for |v> is sum_{a,b} conj(v_a) v_b rho_{ab}.
class ConditionalEntropyEvaluator {
 public:
  explicit ConditionalEntropyEvaluator(const DensityMatrix& rho_measured_first)
      : dm_(static_cast<Eigen::Index>(rho_measured_first.dims()[0])),
        do_(static_cast<Eigen::Index>(rho_measured_first.dims()[1])) {
    blocks_.reserve(static_cast<std::size_t>(dm_ * dm_));
    for (Eigen::Index a = 0; a < dm_; ++a) {
      for (Eigen::Index b = 0; b < dm_; ++b) {
        blocks_.push_back(rho_measured_first.matrix().block(a * do_, b * do_, do_, do_));
      }
    }
  }

  std::size_t measured_dim() const { return static_cast<std::size_t>(dm_); }

  double operator()(const Matrix& basis_vectors) const {
    double total = 0.0;
    Matrix sigma(do_, do_);
    for (Eigen::Index k = 0; k < dm_; ++k) {
      sigma.setZero();
      for (Eigen::Index a = 0; a < dm_; ++a) {
        const Complex va = std::conj(basis_vectors(a, k));
        for (Eigen::Index b = 0; b < dm_; ++b) {
          sigma += (va * basis_vectors(b, k)) * blocks_[static_cast<std::size_t>(a * dm_ + b)];
        }
      }
      const double p = sigma.trace().real();
      if (p < kNegligibleProbability) continue;
      RealVector eig = hermitian_eigenvalues(sigma / p);
      total += p * entropy_of_eigenvalues(eig);
    }
    return total;
  }

 private:
  Eigen::Index dm_;
  Eigen::Index do_;
  std::vector<Matrix> blocks_;
};

/// U0 * prod_{j<k} R_jk(theta, phi). Column phases do not change the
/// projectors, so the trailing diagonal phase factor is omitted and a
/// d-dimensional basis uses d(d-1) parameters.
Matrix givens_basis(const Matrix& start, const double* x) {
  Matrix u = start;
  const Eigen::Index d = u.rows();
  std::size_t m = 0;
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = j + 1; k < d; ++k) {
      const double theta = x[2 * m];
      const double phi = x[2 * m + 1];
      ++m;
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Complex e(std::cos(phi), std::sin(phi));
      const Vector cj = u.col(j);
      const Vector ck = u.col(k);
      u.col(j) = c * cj + (e * s) * ck;
      u.col(k) = (-std::conj(e) * s) * cj + c * ck;
    }
  }
  return u;
}

Matrix qubit_basis(double theta, double phi) {
  Matrix u(2, 2);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e(std::cos(phi), std::sin(phi));
  u(0, 0) = c;
  u(1, 0) = e * s;
  u(0, 1) = -std::conj(e) * s;
  u(1, 1) = c;
  return u;
}

struct NelderMeadResult {
  std::vector<double> x;
  double value;
};

/// Nelder-Mead (GSL nmsimplex2) on an arbitrary objective.
using Objective = std::function<double(const double*)>;

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> x0, double step,
                             int max_iterations) {
  static std::once_flag gsl_handler_off;
  std::call_once(gsl_handler_off, [] { gsl_set_error_handler_off(); });
  const std::size_t n = x0.size();

  gsl_multimin_function fn;
  fn.n = n;
  fn.params = const_cast<Objective*>(&objective);
  fn.f = [](const gsl_vector* v, void* params) -> double {
    return (*static_cast<const Objective*>(params))(gsl_vector_const_ptr(v, 0));
  };

  gsl_vector* x = gsl_vector_alloc(n);
  gsl_vector* steps = gsl_vector_alloc(n);
  for (std::size_t i = 0; i < n; ++i) {
    gsl_vector_set(x, i, x0[i]);
    gsl_vector_set(steps, i, step);
  }
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, n);
  gsl_multimin_fminimizer_set(s, &fn, x, steps);
  for (int iter = 0; iter < max_iterations; ++iter) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), kSimplexSize) == GSL_SUCCESS) break;
  }
  NelderMeadResult out{std::vector<double>(n), gsl_multimin_fminimizer_minimum(s)};
  for (std::size_t i = 0; i < n; ++i) out.x[i] = gsl_vector_get(s->x, i);
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(steps);
  gsl_vector_free(x);
  return out;
}

struct LocalOptimum {
  double value;
  Matrix basis;
};

LocalOptimum refine_from(const ConditionalEntropyEvaluator& eval, const Matrix& start,
                         int max_iterations) {
  const std::size_t d = eval.measured_dim();
  const std::size_t n = d * (d - 1);
  const Objective objective = [&](const double* x) { return eval(givens_basis(start, x)); };
  if (n == 0) return {eval(start), start};

  NelderMeadResult first = nelder_mead(objective, std::vector<double>(n, 0.0), kInitialStep,
                                       max_iterations);
  // A second, smaller simplex around the first result guards against
  // premature collapse of the first one.
  NelderMeadResult second = nelder_mead(objective, first.x, kPolishStep, max_iterations);
  const NelderMeadResult& best = second.value <= first.value ? second : first;
  return {best.value, givens_basis(start, best.x.data())};
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) throw Error(ErrorKind::InvalidArgument, "restarts must be >= 1");
  if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be > 0");
  if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
}

double measured_conditional_entropy(const DensityMatrix& rho, const ProjectiveBasis& basis,
                                    Side side) {
  const DensityMatrix arranged = measured_first(rho, side);
  if (basis.dim() != arranged.dims()[0]) {
    throw Error(ErrorKind::DimMismatch, "basis dimension does not match measured subsystem");
  }
  return ConditionalEntropyEvaluator(arranged)(basis.vectors());
}

double measured_conditional_entropy_dephasing(const DensityMatrix& rho,
                                              const ProjectiveBasis& basis, Side side) {
  const DensityMatrix dephased = measure_side(rho, basis, side);
  const std::size_t measured = static_cast<std::size_t>(side);
  const DensityMatrix outcomes = partial_trace(dephased, {measured});
  return von_neumann_entropy(dephased) - von_neumann_entropy(outcomes);
}

MinimizationResult minimize_conditional_entropy(const DensityMatrix& rho, Side side,
                                                const OptimizerConfig& config) {
  config.validate();
  if (config.mode == SearchMode::QubitGridOracle) return qubit_grid_minimum(rho, side);

  const DensityMatrix arranged = measured_first(rho, side);
  const ConditionalEntropyEvaluator eval(arranged);
  const std::size_t d = eval.measured_dim();

  double best = std::numeric_limits<double>::infinity();
  double runner_up = std::numeric_limits<double>::infinity();
  Matrix best_basis = Matrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  bool converged = false;
  int restart = 0;
  for (int batch = 0; batch < kMaxBatches && !converged; ++batch) {
    const double before = best;
    for (int i = 0; i < config.restarts; ++i, ++restart) {
      const Matrix start = haar_random_unitary(d, derive_seed(config.seed, static_cast<std::uint64_t>(restart)));
      const LocalOptimum local = refine_from(eval, start, config.max_iterations);
      // Strict comparison: on ties the lowest restart index wins.
      if (local.value < best) {
        runner_up = best;
        best = local.value;
        best_basis = local.basis;
      } else if (local.value < runner_up) {
        runner_up = local.value;
      }
    }
    // First batch: the optimum must be reproduced by a second restart.
    // Later batches: the batch must not have improved the optimum.
    converged = batch == 0 ? runner_up - best < config.tolerance : before - best < config.tolerance;
  }
  return {best, ProjectiveBasis::from_unitary(best_basis, "argmin"), converged, restart};
}

MinimizationResult qubit_grid_minimum(const DensityMatrix& rho, Side side) {
  if (rho.subsystems() != 2) throw Error(ErrorKind::DimMismatch, "expected a two-subsystem state");
  if (rho.dims()[static_cast<std::size_t>(side)] != 2) {
    throw Error(ErrorKind::DimMismatch, "grid oracle requires the measured party to be a qubit");
  }
  auto value_at = [&](double theta, double phi) {
    return measured_conditional_entropy_dephasing(
        rho, ProjectiveBasis::from_unitary(qubit_basis(theta, phi)), side);
  };
  constexpr double deg = std::numbers::pi / 180.0;
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0, best_phi = 0.0;
  for (int t = 0; t <= 180; ++t) {
    for (int p = 0; p < 360; ++p) {
      const double v = value_at(t * deg, p * deg);
      if (v < best) {
        best = v;
        best_theta = t * deg;
        best_phi = p * deg;
      }
    }
  }
  const Objective objective = [&](const double* x) { return value_at(x[0], x[1]); };
  const NelderMeadResult polished = nelder_mead(objective, {best_theta, best_phi}, deg, 2000);
  double theta = best_theta, phi = best_phi;
  if (polished.value < best) {
    best = polished.value;
    theta = polished.x[0];
    phi = polished.x[1];
  }
  return {best, ProjectiveBasis::from_unitary(qubit_basis(theta, phi), "grid-argmin"), true, 1};
}

double classical_correlation(const DensityMatrix& rho, Side side, const OptimizerConfig& config) {
  return quantum_discord(rho, side, config).classical_correlation;
}

CorrelationReport quantum_discord(const DensityMatrix& rho, Side side, const OptimizerConfig& config) {
  const MinimizationResult min = minimize_conditional_entropy(rho, side, config);
  const std::size_t measured = static_cast<std::size_t>(side);
  const double s_total = von_neumann_entropy(rho);
  const double s_measured = von_neumann_entropy(partial_trace(rho, {measured}));
  const double s_other = von_neumann_entropy(partial_trace(rho, {1 - measured}));

  const double mutual = s_measured + s_other - s_total;
  const double cond = s_total - s_measured;
  const double classical = s_other - min.value;
  const double discord = min.value - cond;
  return CorrelationReport{side,           mutual, classical, discord,
                           min.value,      min.argmin,   cond,
                           classical - discord, min.converged};
}

CorrelationReport discord_measured_on(const DensityMatrix& rho,
                                      const std::vector<std::size_t>& measured,
                                      const std::vector<std::size_t>& other,
                                      const OptimizerConfig& config) {
  return quantum_discord(bipartition(rho, measured, other), Side::First, config);
}

}  // namespace qdiscord
