#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdiscord/io.hpp"

namespace qdiscord {

/// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
/// concurrency). fn must write only to slot i of its output.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

// ---------------------------------------------------------------------------
// Pseudopure sweeps

struct SweepOptions {
  std::size_t d = 2;
  /// Schmidt weights; renormalized before use.
  std::vector<double> u;
  double r_min = 0.0;
  double r_max = 1.0;
  int steps = 101;
  /// Defaults to the complementary pair of dimension d.
  std::optional<ObservablePair> pair;
  OptimizerConfig config;
  unsigned threads = 0;
};

struct SweepRow {
  double r;
  bool skipped;
  double discord;
  double bound_eq8;
  BoundBranch branch;
  double lambda_t;
  std::optional<double> lambda_m;
  std::optional<double> lambda_f;
  /// First row (after the start) on which the active branch of
  /// min{S(rho_A), I} changes.
  bool is_r_sc;
  bool converged;
};

std::vector<SweepRow> sweep_pseudopure(const SweepOptions& options);

inline constexpr const char* kSweepCsvHeader =
    "r,discord,bound_eq8,eq8_branch,lambda_t,lambda_m,lambda_f,is_r_sc,skipped";

std::string sweep_csv(const std::vector<SweepRow>& rows);
Json sweep_json(const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------
// Randomized inequality campaigns

enum class FuzzCheck {
  SameSide,       ///< "2"
  CrossSide,      ///< "3"
  MeasuredParty,  ///< "eq17"
  TightenedEur,   ///< "eur5"
  KoashiWinter,   ///< "kw"
  Berta,          ///< "eur4" (delta_t >= 0)
};

FuzzCheck parse_fuzz_check(const std::string& text);
const char* to_string(FuzzCheck check) noexcept;

enum class PairMode { Complementary, Random };

struct FuzzOptions {
  /// State family string; the per-sample seed is substituted into it.
  std::string family = "haar:dims=2x2x2";
  int samples = 100;
  std::uint64_t seed = 0;
  FuzzCheck check = FuzzCheck::SameSide;
  PairMode pair = PairMode::Complementary;
  OptimizerConfig config;
  double violation_threshold = -1e-6;
  unsigned threads = 0;
};

struct FuzzRow {
  int sample;
  std::uint64_t seed;
  std::vector<double> fields;
  double slack;
  /// False when the inequality's hypothesis does not hold for the sample
  /// (mixed input to the same-side check); such rows never count as
  /// violations.
  bool applicable;
  bool violation;
};

struct FuzzSummary {
  int samples;
  int violations;
  int not_applicable;
  double min_slack;
  std::uint64_t worst_seed;
  /// Same-side campaigns: samples with tau_d < -1e-3 (monogamy violated).
  int monogamy_violations;
  double min_tau_d;
};

struct FuzzResult {
  std::string family;
  FuzzCheck check;
  std::vector<std::string> field_names;
  std::vector<FuzzRow> rows;
  FuzzSummary summary;
};

FuzzResult run_fuzz(const FuzzOptions& options);
std::string fuzz_csv(const FuzzResult& result);
Json to_json(const FuzzSummary& summary);

// ---------------------------------------------------------------------------
// Optimizer cross-check

struct OracleComparison {
  double grid_min;
  double multistart_min;
  double gap;  ///< multistart_min - grid_min
};

OracleComparison compare_with_grid(const DensityMatrix& rho, Side side,
                                   const OptimizerConfig& config = {});

}  // namespace qdiscord
