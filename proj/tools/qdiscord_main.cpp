// qdiscord: discord, uncertainty-relation bounds and shareability checks
// from the command line.
//
//   qdiscord report ghz:n=2
//   qdiscord sweep-pp --d 2 --u 0.942809041582,0.333333333333 --out pp2.csv
//   qdiscord fuzz --family haar:dims=2x2x2 --samples 500 --theorem 2
//   qdiscord oracle --state mixed:dims=2x2,seed=3 --side A
//
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 fuzz violations.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qdiscord/campaigns.hpp"
#include "qdiscord/error.hpp"
#include "qdiscord/states.hpp"

namespace {

using namespace qdiscord;

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitViolations = 4;

struct GlobalOptions {
  std::uint64_t seed = 0;
  int restarts = 24;
  double tolerance = 1e-9;
  int max_iterations = 500;
  bool json = false;
  bool csv = false;
  std::string out;
  unsigned threads = 0;

  OptimizerConfig config() const {
    OptimizerConfig c;
    c.seed = seed;
    c.restarts = restarts;
    c.tolerance = tolerance;
    c.max_iterations = max_iterations;
    return c;
  }
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot write " + g.out);
  file << text;
}

DensityMatrix load_state(const std::string& source) {
  if (std::filesystem::exists(source)) return read_state_file(source);
  if (source.find(':') == std::string::npos) {
    throw Error(ErrorKind::ParseError, "'" + source + "' is neither a file nor a family string");
  }
  return state_from_spec(source);
}

ObservablePair load_pair(const std::string& spec, std::size_t d) {
  if (spec == "cf") return complementary_pair(d);
  if (spec.rfind("random:", 0) == 0) {
    try {
      return random_pair(d, std::stoull(spec.substr(7)));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad pair seed in '" + spec + "'");
    }
  }
  std::ifstream in(spec);
  if (!in) throw Error(ErrorKind::ParseError, "pair must be 'cf', 'random:SEED' or a JSON file");
  try {
    return pair_from_json(Json::parse(in));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, spec + ": " + e.what());
  }
}

Side parse_side(const std::string& text) {
  if (text == "A" || text == "a" || text == "0") return Side::First;
  if (text == "B" || text == "b" || text == "1") return Side::Second;
  throw Error(ErrorKind::ParseError, "side must be A or B");
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string flatten_csv(const Json& doc) {
  std::string header, values;
  auto add = [&](const std::string& key, const Json& v) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += key;
    if (v.is_number()) {
      values += format12(v.get<double>());
    } else if (v.is_null()) {
      // empty field
    } else if (v.is_string()) {
      values += csv_field(v.get<std::string>());
    } else {
      values += csv_field(v.dump());
    }
  };
  for (const auto& [section, body] : doc.items()) {
    if (!body.is_object()) continue;
    for (const auto& [key, v] : body.items()) {
      if (key == "argmin_basis") continue;
      add(section + "." + key, v);
    }
  }
  return header + "\n" + values + "\n";
}

// ---------------------------------------------------------------------------

struct ReportOptions {
  std::string state;
  std::string side = "A";
  std::string pair = "cf";
  int pair_search = 0;
};

int run_report(const GlobalOptions& g, const ReportOptions& o) {
  const DensityMatrix loaded = load_state(o.state);
  if (loaded.subsystems() != 2) {
    throw Error(ErrorKind::DimMismatch, "report needs a two-subsystem state");
  }
  // Uncertainty terms and bounds always refer to the measured party.
  const Side side = parse_side(o.side);
  const DensityMatrix rho = side == Side::First ? loaded : permute_subsystems(loaded, {1, 0});
  const std::size_t d = rho.dims()[0];
  const ObservablePair pair =
      o.pair_search > 0 ? best_pair_search(rho, o.pair_search, g.seed) : load_pair(o.pair, d);
  if (pair.dim() != d) throw Error(ErrorKind::DimMismatch, "pair dimension differs from measured party");

  const CorrelationReport corr = quantum_discord(rho, Side::First, g.config());
  const UncertaintyReport unc = uncertainty_report(rho, pair);
  const BoundReport bounds = lambda_bounds(rho, pair, unc);
  const EurCheck eur = eur_check(unc, corr);

  Json doc{{"state", {{"dims", loaded.dims()}, {"measured_side", o.side}}},
           {"correlations", to_json(corr)},
           {"uncertainty", to_json(unc)},
           {"bounds", to_json(bounds)},
           {"eur", to_json(eur)}};
  doc["correlations"]["measured_side"] = o.side;
  doc["pair"] = {{"q", basis_to_json(pair.q)}, {"r", basis_to_json(pair.r)}, {"c", round12(pair.c)}};
  emit(g, g.csv ? flatten_csv(doc) : doc.dump(2) + "\n");
  return 0;
}

struct SweepCliOptions {
  std::size_t d = 2;
  std::vector<double> u;
  double r_min = 0.0;
  double r_max = 1.0;
  int steps = 101;
  std::string pair = "cf";
};

int run_sweep(const GlobalOptions& g, const SweepCliOptions& o) {
  SweepOptions s;
  s.d = o.d;
  s.u = o.u;
  if (s.u.empty()) s.u.assign(o.d, 1.0);
  s.r_min = o.r_min;
  s.r_max = o.r_max;
  s.steps = o.steps;
  s.pair = load_pair(o.pair, o.d);
  s.config = g.config();
  s.threads = g.threads;
  const auto rows = sweep_pseudopure(s);
  emit(g, g.json ? sweep_json(rows).dump(2) + "\n" : sweep_csv(rows));
  return 0;
}

struct FuzzCliOptions {
  std::string family = "haar:dims=2x2x2";
  int samples = 100;
  std::string theorem = "2";
  std::string pair = "cf";
  double violation_threshold = -1e-6;
  bool allow_violations = false;
};

int run_fuzz_cmd(const GlobalOptions& g, const FuzzCliOptions& o) {
  FuzzOptions f;
  f.family = o.family;
  f.samples = o.samples;
  f.seed = g.seed;
  f.check = parse_fuzz_check(o.theorem);
  if (o.pair == "cf") {
    f.pair = PairMode::Complementary;
  } else if (o.pair == "random") {
    f.pair = PairMode::Random;
  } else {
    throw Error(ErrorKind::ParseError, "fuzz --pair must be 'cf' or 'random'");
  }
  f.config = g.config();
  f.threads = g.threads;
  f.violation_threshold = o.violation_threshold;
  const FuzzResult result = run_fuzz(f);

  const std::string summary = to_json(result.summary).dump() + "\n";
  if (g.out.empty()) {
    std::cout << fuzz_csv(result) << summary;
  } else {
    emit(g, fuzz_csv(result));
    std::cout << summary;
  }
  std::cout.flush();
  if (result.summary.violations > 0) {
    std::cerr << "qdiscord: " << result.summary.violations << " violation(s)\n";
    if (!o.allow_violations) return kExitViolations;
  }
  return 0;
}

struct OracleCliOptions {
  std::string state;
  std::string side = "A";
};

int run_oracle(const GlobalOptions& g, const OracleCliOptions& o) {
  const DensityMatrix rho = load_state(o.state);
  const Side side = parse_side(o.side);
  if (rho.subsystems() != 2 || rho.dims()[static_cast<std::size_t>(side)] != 2) {
    throw Error(ErrorKind::DimMismatch, "oracle needs a two-party state with a qubit measured side");
  }
  const OracleComparison cmp = compare_with_grid(rho, side, g.config());
  const Json doc{{"grid_min", round12(cmp.grid_min)},
                 {"multistart_min", round12(cmp.multistart_min)},
                 {"gap", round12(cmp.gap)}};
  emit(g, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord, uncertainty-relation bounds and shareability checks"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "Base seed for all randomness");
  app.add_option("--restarts", g.restarts, "Optimizer restarts per batch")->check(CLI::PositiveNumber);
  app.add_option("--tol", g.tolerance, "Optimizer tolerance in bits")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", g.max_iterations, "Iterations per local search")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for sweeps and fuzzing (0 = all cores)");
  auto* json_flag = app.add_flag("--json", g.json, "Emit JSON");
  auto* csv_flag = app.add_flag("--csv", g.csv, "Emit CSV");
  json_flag->excludes(csv_flag);
  app.add_option("--out", g.out, "Output file (default stdout)");

  ReportOptions report;
  auto* report_cmd = app.add_subcommand("report", "Discord, uncertainty terms and bounds for one state");
  report_cmd->add_option("state", report.state, "Family string or state JSON file")->required();
  report_cmd->add_option("--side", report.side, "Measured party: A or B");
  report_cmd->add_option("--pair", report.pair, "cf | random:SEED | pair JSON file");
  report_cmd->add_option("--pair-search", report.pair_search,
                         "Pick the pair with smallest delta_t among N random pairs and cf");

  SweepCliOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep-pp", "Pseudopure-family sweep over r");
  sweep_cmd->add_option("--d", sweep.d, "Local dimension")->required();
  sweep_cmd->add_option("--u", sweep.u, "Schmidt weights (comma separated)")->delimiter(',');
  sweep_cmd->add_option("--r-min", sweep.r_min);
  sweep_cmd->add_option("--r-max", sweep.r_max);
  sweep_cmd->add_option("--steps", sweep.steps);
  sweep_cmd->add_option("--pair", sweep.pair, "cf | random:SEED | pair JSON file");

  FuzzCliOptions fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Randomized check of one inequality");
  fuzz_cmd->add_option("--family", fuzz.family, "State family string");
  fuzz_cmd->add_option("--samples", fuzz.samples)->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--theorem", fuzz.theorem, "2 | 3 | eq17 | eur5 | kw | eur4");
  fuzz_cmd->add_option("--pair", fuzz.pair, "cf | random");
  fuzz_cmd->add_option("--violation-threshold", fuzz.violation_threshold,
                       "Slack below this counts as a violation")
      ->capture_default_str();
  fuzz_cmd->add_flag("--allow-violations", fuzz.allow_violations, "Exit 0 even with violations");

  OracleCliOptions oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare multi-start optimum with the qubit grid");
  oracle_cmd->add_option("--state", oracle.state, "Family string or state JSON file")->required();
  oracle_cmd->add_option("--side", oracle.side, "Measured party: A or B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*report_cmd) return run_report(g, report);
    if (*sweep_cmd) return run_sweep(g, sweep);
    if (*fuzz_cmd) return run_fuzz_cmd(g, fuzz);
    if (*oracle_cmd) return run_oracle(g, oracle);
  } catch (const Error& e) {
    std::cerr << "qdiscord: " << e.what() << '\n';
    return e.kind() == ErrorKind::ParseError ? kExitParse : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "qdiscord: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
