#include <doctest.h>

#include <atomic>
#include <sstream>

#include "qdiscord/campaigns.hpp"
#include "qdiscord/error.hpp"
#include "test_helpers.hpp"

using namespace qdiscord;
using namespace qdiscord::test;

namespace {

SweepOptions small_sweep() {
  SweepOptions o;
  o.d = 2;
  o.u = fig_a(0.0).u;
  o.steps = 21;
  return o;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<int> hits(100, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);

  std::atomic<int> ran{0};
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [&](std::size_t i) {
                                 ++ran;
                                 if (i == 5) throw Error(ErrorKind::InvalidArgument, "boom");
                               }),
                  Error);
}

TEST_CASE("pseudopure sweep") {
  const std::vector<SweepRow> rows = sweep_pseudopure(small_sweep());
  REQUIRE(rows.size() == 21);
  CHECK(rows.front().r == 0.0);
  CHECK(rows.back().r == 1.0);
  CHECK(rows.back().discord == doctest::Approx(0.5032583347756454).epsilon(1e-7));
  // r = 0.25 is the fifth grid point.
  CHECK(std::abs(rows[5].discord) <= 1e-6);

  int switches = 0;
  for (const SweepRow& row : rows) {
    CHECK_FALSE(row.skipped);
    CHECK(row.discord <= row.lambda_t + 1e-6);
    CHECK(row.lambda_t <= *row.lambda_m + 1e-9);
    CHECK(*row.lambda_m <= *row.lambda_f + 1e-9);
    CHECK(row.discord <= row.bound_eq8 + 1e-6);
    switches += row.is_r_sc;
  }
  CHECK(switches == 1);

  const std::vector<std::string> csv = lines(sweep_csv(rows));
  CHECK(csv.front() == kSweepCsvHeader);
  CHECK(csv.size() == 22);
  CHECK(sweep_csv(sweep_pseudopure(small_sweep())) == sweep_csv(rows));
  CHECK(sweep_json(rows).size() == 21);
}

TEST_CASE("sweep thread count does not change the output") {
  SweepOptions a = small_sweep();
  a.threads = 1;
  SweepOptions b = small_sweep();
  b.threads = 8;
  CHECK(sweep_csv(sweep_pseudopure(a)) == sweep_csv(sweep_pseudopure(b)));
}

TEST_CASE("non-positive rows are skipped") {
  SweepOptions o = small_sweep();
  o.r_min = -0.1;
  o.r_max = 0.1;
  o.steps = 3;
  const std::vector<SweepRow> rows = sweep_pseudopure(o);
  CHECK(rows[0].skipped);
  CHECK_FALSE(rows[1].skipped);
  CHECK_FALSE(rows[2].skipped);
  CHECK(lines(sweep_csv(rows))[1].ends_with(",true"));
}

TEST_CASE("sweep options are validated") {
  SweepOptions o = small_sweep();
  o.steps = 1;
  CHECK_THROWS_AS(sweep_pseudopure(o), Error);
  o = small_sweep();
  o.r_min = 0.8;
  o.r_max = 0.2;
  CHECK_THROWS_AS(sweep_pseudopure(o), Error);
}

TEST_CASE("fuzz check names") {
  for (FuzzCheck c : {FuzzCheck::SameSide, FuzzCheck::CrossSide, FuzzCheck::MeasuredParty,
                      FuzzCheck::TightenedEur, FuzzCheck::KoashiWinter, FuzzCheck::Berta}) {
    CHECK(parse_fuzz_check(to_string(c)) == c);
  }
  CHECK_THROWS_AS(parse_fuzz_check("7"), Error);
}

TEST_CASE("fuzz campaigns") {
  FuzzOptions o;
  o.samples = 12;
  o.seed = 3;

  SUBCASE("same-side on pure states") {
    const FuzzResult r = run_fuzz(o);
    CHECK(r.rows.size() == 12);
    CHECK(r.summary.samples == 12);
    CHECK(r.summary.violations == 0);
    CHECK(r.summary.not_applicable == 0);
    CHECK(r.summary.min_slack >= -1e-6);
    CHECK(r.field_names.size() == r.rows[0].fields.size());
    for (const FuzzRow& row : r.rows) {
      CHECK(std::abs(row.fields[7] - row.fields[8]) <= 1e-5);
    }
    CHECK(fuzz_csv(run_fuzz(o)) == fuzz_csv(r));
    const Json j = to_json(r.summary);
    CHECK(j["violations"] == 0);
    CHECK(j.contains("worst_seed"));
  }
  SUBCASE("same-side on mixed states is not applicable") {
    o.family = "mixed:dims=2x2x2,rank=3";
    const FuzzResult r = run_fuzz(o);
    CHECK(r.summary.not_applicable == 12);
    CHECK(r.summary.violations == 0);
  }
  SUBCASE("other checks hold") {
    for (FuzzCheck c : {FuzzCheck::CrossSide, FuzzCheck::KoashiWinter}) {
      o.check = c;
      CHECK(run_fuzz(o).summary.violations == 0);
    }
    o.family = "mixed:dims=2x2x2,rank=2";
    o.check = FuzzCheck::MeasuredParty;
    o.pair = PairMode::Random;
    CHECK(run_fuzz(o).summary.violations == 0);
    o.family = "mixed:dims=2x2";
    o.check = FuzzCheck::TightenedEur;
    CHECK(run_fuzz(o).summary.violations == 0);
    o.family = "mixed:dims=2x3";
    o.check = FuzzCheck::Berta;
    CHECK(run_fuzz(o).summary.violations == 0);
  }
  SUBCASE("an impossible threshold flags every sample") {
    o.check = FuzzCheck::KoashiWinter;
    o.violation_threshold = 100.0;
    const FuzzResult r = run_fuzz(o);
    CHECK(r.summary.violations == 12);
    CHECK(lines(fuzz_csv(r))[1].ends_with(",true,true"));
  }
  SUBCASE("CSV quotes family strings that contain commas") {
    o.family = "mixed:dims=2x2x2,rank=2";
    o.check = FuzzCheck::MeasuredParty;
    o.samples = 1;
    CHECK(lines(fuzz_csv(run_fuzz(o)))[1].find(",\"mixed:dims=2x2x2,rank=2\",") != std::string::npos);
  }
}

TEST_CASE("grid comparison") {
  const OracleComparison bell_cmp = compare_with_grid(bell(), Side::First);
  CHECK(std::abs(bell_cmp.gap) <= 1e-9);
  const OracleComparison cmp = compare_with_grid(random_mixed({2, 2}, 3, 8), Side::Second);
  CHECK(std::abs(cmp.gap) <= 1e-6);
  CHECK(cmp.gap == doctest::Approx(cmp.multistart_min - cmp.grid_min));
}
