#include <doctest.h>

#include <fstream>

#include "qdiscord/error.hpp"
#include "qdiscord/io.hpp"
#include "test_helpers.hpp"

using namespace qdiscord;
using namespace qdiscord::test;

TEST_CASE("state JSON round trip") {
  const DensityMatrix rho = random_mixed({2, 3}, 3, 21);
  const Json doc = state_to_json(rho);
  CHECK(doc["dims"] == Json::array({2, 3}));
  // Entries are written with 12 significant digits.
  const DensityMatrix back = state_from_json(doc);
  CHECK(back.dims() == rho.dims());
  CHECK(max_abs(back.matrix() - rho.matrix()) <= 1e-11);

  const DensityMatrix reparsed = state_from_json(Json::parse(doc.dump()));
  CHECK(max_abs(reparsed.matrix() - back.matrix()) == 0.0);
}

TEST_CASE("state files") {
  const std::string path = "test_io_bell.json";
  {
    std::ofstream out(path);
    out << state_to_json(bell()).dump();
  }
  CHECK(max_abs(read_state_file(path).matrix() - bell().matrix()) <= 1e-11);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_state_file("does/not/exist.json"), Error);
}

TEST_CASE("malformed state documents") {
  Json skew = state_to_json(bell());
  skew["matrix"][0][1] = Json::array({0.3, 0.0});
  try {
    state_from_json(skew);
    FAIL("expected NotHermitian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }

  Json missing = state_to_json(bell());
  missing.erase("dims");
  CHECK_THROWS_AS(state_from_json(missing), Error);

  Json ragged = state_to_json(bell());
  ragged["matrix"][2] = Json::array();
  CHECK_THROWS_AS(state_from_json(ragged), Error);

  CHECK_THROWS_AS(state_from_json(Json::parse(R"({"dims": [2], "matrix": "x"})")), Error);
}

TEST_CASE("basis and pair JSON") {
  const ProjectiveBasis f = fourier_basis(3);
  const ProjectiveBasis back = basis_from_json(basis_to_json(f));
  CHECK(max_abs(back.vectors() - f.vectors()) <= 1e-11);

  Json pair;
  pair["q"] = basis_to_json(computational_basis(3));
  pair["r"] = basis_to_json(f);
  const ObservablePair p = pair_from_json(pair);
  CHECK(p.c == doctest::Approx(1.0 / 3.0));

  Json bad = basis_to_json(computational_basis(2));
  bad["vectors"][0] = Json::array({Json::array({1.0, 0.0}), Json::array({1.0, 0.0})});
  CHECK_THROWS_AS(basis_from_json(bad), Error);
}

TEST_CASE("number formatting") {
  CHECK(format12(1.0 / 3.0) == "0.333333333333");
  CHECK(round12(0.1234567890123456) == 0.123456789012);
}

TEST_CASE("report documents") {
  const CorrelationReport c = quantum_discord(bell(), Side::First);
  const Json j = to_json(c);
  CHECK(j["discord"].get<double>() == doctest::Approx(1.0));
  CHECK(j["upper_estimate"] == true);

  const BoundReport b = lambda_bounds(bell(), complementary_pair(2));
  const Json jb = to_json(b);
  CHECK(jb["eq8_branch"] == "marginal-entropy");
  CHECK(jb["bound_eq8"].get<double>() == doctest::Approx(1.0));

  const Json jm = to_json(lambda_bounds(random_mixed({2, 3}, 2, 1), complementary_pair(2)));
  CHECK(jm["lambda_f"].is_null());
}
