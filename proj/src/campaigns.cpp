#include "qdiscord/campaigns.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "qdiscord/error.hpp"
#include "qdiscord/states.hpp"

namespace qdiscord {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
}

namespace {

std::string csv_number(double v) { return std::isnan(v) ? "nan" : format12(v); }
std::string csv_optional(const std::optional<double>& v) { return v ? format12(*v) : ""; }
const char* csv_bool(bool b) { return b ? "true" : "false"; }

std::string csv_text(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<SweepRow> sweep_pseudopure(const SweepOptions& options) {
  options.config.validate();
  if (options.d < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs d >= 2");
  if (options.steps < 2) throw Error(ErrorKind::InvalidArgument, "sweep needs at least 2 steps");
  if (!(options.r_min <= options.r_max)) throw Error(ErrorKind::InvalidArgument, "r-min exceeds r-max");
  if (options.u.size() != options.d) throw Error(ErrorKind::InvalidArgument, "u must have d entries");

  std::vector<double> u = options.u;
  double norm2 = 0.0;
  for (double x : u) norm2 += x * x;
  if (!(norm2 > 0.0)) throw Error(ErrorKind::InvalidArgument, "u must be nonzero");
  for (double& x : u) x /= std::sqrt(norm2);

  const ObservablePair pair = options.pair ? *options.pair : complementary_pair(options.d);
  if (pair.dim() != options.d) throw Error(ErrorKind::DimMismatch, "pair dimension differs from d");

  const auto n = static_cast<std::size_t>(options.steps);
  std::vector<SweepRow> rows(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    const double r = i + 1 == n ? options.r_max
                                : options.r_min + (options.r_max - options.r_min) *
                                                      static_cast<double>(i) /
                                                      static_cast<double>(n - 1);
    SweepRow row{};
    row.r = r;
    try {
      const DensityMatrix rho = pseudopure({options.d, r, u});
      const CorrelationReport corr = quantum_discord(rho, Side::First, options.config);
      const BoundReport b = lambda_bounds(rho, pair);
      row.discord = corr.discord;
      row.bound_eq8 = b.marginal_information;
      row.branch = b.branch;
      row.lambda_t = b.lambda_t;
      row.lambda_m = b.lambda_m;
      row.lambda_f = b.lambda_f;
      row.converged = corr.converged;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotPSD) throw;
      row.skipped = true;
    }
    rows[i] = row;
  });

  std::optional<BoundBranch> previous;
  for (auto& row : rows) {
    if (row.skipped) continue;
    row.is_r_sc = previous && *previous != row.branch;
    previous = row.branch;
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << format12(row.r) << ',';
    if (row.skipped) {
      out << ",,,,,,false,true\n";
      continue;
    }
    out << format12(row.discord) << ',' << format12(row.bound_eq8) << ',' << to_string(row.branch)
        << ',' << format12(row.lambda_t) << ',' << csv_optional(row.lambda_m) << ','
        << csv_optional(row.lambda_f) << ',' << csv_bool(row.is_r_sc) << ",false\n";
  }
  return out.str();
}

Json sweep_json(const std::vector<SweepRow>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json j{{"r", round12(row.r)}, {"skipped", row.skipped}};
    if (!row.skipped) {
      j["discord"] = round12(row.discord);
      j["bound_eq8"] = round12(row.bound_eq8);
      j["eq8_branch"] = to_string(row.branch);
      j["lambda_t"] = round12(row.lambda_t);
      j["lambda_m"] = row.lambda_m ? Json(round12(*row.lambda_m)) : Json(nullptr);
      j["lambda_f"] = row.lambda_f ? Json(round12(*row.lambda_f)) : Json(nullptr);
      j["is_r_sc"] = row.is_r_sc;
      j["converged"] = row.converged;
    }
    out.push_back(std::move(j));
  }
  return out;
}

// ---------------------------------------------------------------------------

FuzzCheck parse_fuzz_check(const std::string& text) {
  if (text == "2") return FuzzCheck::SameSide;
  if (text == "3") return FuzzCheck::CrossSide;
  if (text == "eq17") return FuzzCheck::MeasuredParty;
  if (text == "eur5") return FuzzCheck::TightenedEur;
  if (text == "kw") return FuzzCheck::KoashiWinter;
  if (text == "eur4") return FuzzCheck::Berta;
  throw Error(ErrorKind::ParseError, "unknown check '" + text + "' (2|3|eq17|eur5|kw|eur4)");
}

const char* to_string(FuzzCheck check) noexcept {
  switch (check) {
    case FuzzCheck::SameSide: return "2";
    case FuzzCheck::CrossSide: return "3";
    case FuzzCheck::MeasuredParty: return "eq17";
    case FuzzCheck::TightenedEur: return "eur5";
    case FuzzCheck::KoashiWinter: return "kw";
    case FuzzCheck::Berta: return "eur4";
  }
  return "?";
}

namespace {

std::vector<std::string> fields_for(FuzzCheck check) {
  switch (check) {
    case FuzzCheck::SameSide:
      return {"d_ab", "d_ac", "d_a_bc", "delta_t", "lhs", "rhs", "precondition_gap", "tau_d",
              "imbalance_ab", "koashi_winter_slack", "i_bc_minus_2eof"};
    case FuzzCheck::CrossSide:
      return {"d_b_ab", "d_c_ac", "d_bc_a", "delta_t_ba", "delta_t_ca", "delta_bar", "lhs", "rhs"};
    case FuzzCheck::MeasuredParty:
      return {"lhs_b", "rhs_b", "slack_b", "lhs_c", "rhs_c", "slack_c"};
    case FuzzCheck::TightenedEur:
      return {"lhs", "berta_bound", "tightened_bound", "imbalance", "berta_slack"};
    case FuzzCheck::KoashiWinter:
      return {"s_a", "d_ac", "j_ab"};
    case FuzzCheck::Berta:
      return {"s_q_given_b", "s_r_given_b", "log_inv_c", "s_a_given_b", "delta_t"};
  }
  return {};
}

ObservablePair pair_for(PairMode mode, std::size_t d, std::uint64_t seed) {
  return mode == PairMode::Random ? random_pair(d, seed) : complementary_pair(d);
}

FuzzRow evaluate_sample(const FuzzOptions& opt, const DensityMatrix& rho, std::uint64_t sample_seed) {
  OptimizerConfig config = opt.config;
  config.seed = derive_seed(sample_seed, 1);
  const std::uint64_t pair_seed = derive_seed(sample_seed, 2);
  const double nan = std::numeric_limits<double>::quiet_NaN();

  FuzzRow row{};
  row.applicable = true;
  switch (opt.check) {
    case FuzzCheck::SameSide: {
      const ObservablePair pair = pair_for(opt.pair, rho.dims().at(0), pair_seed);
      const SameSideReport r = same_side_shareability(rho, pair, config);
      double purification = nan;
      if (rho.dims() == Dims{2, 2, 2} && std::abs(rho.purity() - 1.0) <= 1e-8) {
        const DensityMatrix rho_bc = partial_trace(rho, {1, 2});
        purification = mutual_information(rho_bc) - 2.0 * entanglement_of_formation(rho_bc);
      }
      row.fields = {r.d_ab,  r.d_ac,         r.d_a_bc,
                    r.delta_t, r.lhs,        r.rhs,
                    r.precondition_gap, r.tau_d, r.imbalance_ab,
                    r.koashi_winter_slack, purification};
      row.slack = r.slack;
      row.applicable = r.precondition_met;
      break;
    }
    case FuzzCheck::CrossSide: {
      const ObservablePair pb = pair_for(opt.pair, rho.dims().at(1), pair_seed);
      const ObservablePair pc = pair_for(opt.pair, rho.dims().at(2), derive_seed(pair_seed, 1));
      const CrossSideReport r = cross_side_shareability(rho, pb, pc, config);
      row.fields = {r.d_b_ab, r.d_c_ac, r.d_bc_a, r.delta_t_ba, r.delta_t_ca, r.delta_bar, r.lhs, r.rhs};
      row.slack = r.slack;
      break;
    }
    case FuzzCheck::MeasuredParty: {
      const ObservablePair pb = pair_for(opt.pair, rho.dims().at(1), pair_seed);
      const ObservablePair pc = pair_for(opt.pair, rho.dims().at(2), derive_seed(pair_seed, 1));
      const MeasuredPartyBound b = measured_party_bound(rho, Party::B, pb, config);
      const MeasuredPartyBound c = measured_party_bound(rho, Party::C, pc, config);
      row.fields = {b.lhs, b.rhs, b.slack, c.lhs, c.rhs, c.slack};
      row.slack = std::min(b.slack, c.slack);
      break;
    }
    case FuzzCheck::TightenedEur: {
      const ObservablePair pair = pair_for(opt.pair, rho.dims().at(0), pair_seed);
      const EurCheck e = eur_check(rho, pair, config);
      row.fields = {e.lhs, e.berta_bound, e.tightened_bound, e.imbalance, e.berta_slack};
      row.slack = e.tightened_slack;
      break;
    }
    case FuzzCheck::KoashiWinter: {
      if (rho.subsystems() != 3) throw Error(ErrorKind::DimMismatch, "kw needs a tripartite family");
      const double s_a = von_neumann_entropy(partial_trace(rho, {0}));
      const double d_ac = discord_measured_on(rho, {0}, {2}, config).discord;
      const double j_ab = discord_measured_on(rho, {0}, {1}, config).classical_correlation;
      row.fields = {s_a, d_ac, j_ab};
      row.slack = s_a - d_ac - j_ab;
      break;
    }
    case FuzzCheck::Berta: {
      const ObservablePair pair = pair_for(opt.pair, rho.dims().at(0), pair_seed);
      const UncertaintyReport u = uncertainty_report(rho, pair);
      row.fields = {u.s_q_given_b, u.s_r_given_b, u.log_inv_c, u.s_a_given_b, u.delta_t};
      row.slack = u.delta_t;
      break;
    }
  }
  row.violation = row.applicable && row.slack < opt.violation_threshold;
  return row;
}

}  // namespace

FuzzResult run_fuzz(const FuzzOptions& opt) {
  opt.config.validate();
  if (opt.samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be >= 1");
  // Fail early on a malformed family string.
  (void)state_from_spec(with_seed(opt.family, 0));

  FuzzResult result{opt.family, opt.check, fields_for(opt.check), {}, {}};
  result.rows.resize(static_cast<std::size_t>(opt.samples));
  parallel_for(result.rows.size(), opt.threads, [&](std::size_t i) {
    const std::uint64_t sample_seed = derive_seed(opt.seed, i);
    const DensityMatrix rho = state_from_spec(with_seed(opt.family, sample_seed));
    FuzzRow row = evaluate_sample(opt, rho, sample_seed);
    row.sample = static_cast<int>(i);
    row.seed = sample_seed;
    result.rows[i] = std::move(row);
  });

  FuzzSummary& s = result.summary;
  s.samples = opt.samples;
  s.min_slack = std::numeric_limits<double>::infinity();
  s.min_tau_d = std::numeric_limits<double>::infinity();
  for (const auto& row : result.rows) {
    if (!row.applicable) {
      ++s.not_applicable;
      continue;
    }
    if (row.violation) ++s.violations;
    if (row.slack < s.min_slack) {
      s.min_slack = row.slack;
      s.worst_seed = row.seed;
    }
    if (opt.check == FuzzCheck::SameSide) {
      const double tau = row.fields[7];
      s.min_tau_d = std::min(s.min_tau_d, tau);
      if (tau < -1e-3) ++s.monogamy_violations;
    }
  }
  return result;
}

std::string fuzz_csv(const FuzzResult& result) {
  std::ostringstream out;
  out << "sample,seed,family,check";
  for (const auto& f : result.field_names) out << ',' << f;
  out << ",slack,applicable,violation\n";
  for (const auto& row : result.rows) {
    out << row.sample << ',' << row.seed << ',' << csv_text(result.family) << ','
        << to_string(result.check);
    for (double v : row.fields) out << ',' << csv_number(v);
    out << ',' << csv_number(row.slack) << ',' << csv_bool(row.applicable) << ','
        << csv_bool(row.violation) << '\n';
  }
  return out.str();
}

Json to_json(const FuzzSummary& s) {
  Json j{{"samples", s.samples},
         {"violations", s.violations},
         {"not_applicable", s.not_applicable},
         {"min_slack", std::isfinite(s.min_slack) ? Json(round12(s.min_slack)) : Json(nullptr)},
         {"worst_seed", s.worst_seed}};
  if (std::isfinite(s.min_tau_d)) {
    j["min_tau_d"] = round12(s.min_tau_d);
    j["monogamy_violations"] = s.monogamy_violations;
  }
  return j;
}

OracleComparison compare_with_grid(const DensityMatrix& rho, Side side, const OptimizerConfig& config) {
  const MinimizationResult grid = qubit_grid_minimum(rho, side);
  OptimizerConfig local = config;
  local.mode = SearchMode::MultiStartLocal;
  const MinimizationResult multi = minimize_conditional_entropy(rho, side, local);
  return {grid.value, multi.value, multi.value - grid.value};
}

}  // namespace qdiscord
