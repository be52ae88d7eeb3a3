#include <doctest.h>

#include "qdiscord/correlations.hpp"
#include "qdiscord/error.hpp"
#include "test_helpers.hpp"

using namespace qdiscord;
using namespace qdiscord::test;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("pseudopure family") {
  SUBCASE("r = 1/d^2 is maximally mixed") {
    CHECK(max_abs(pseudopure(fig_a(0.25)).matrix() - Matrix::Identity(4, 4) / 4.0) <= 1e-15);
    CHECK(max_abs(pseudopure(fig_b(1.0 / 9.0)).matrix() - Matrix::Identity(9, 9) / 9.0) <= 1e-15);
  }
  SUBCASE("r = 1 is pure with the requested Schmidt weights") {
    const DensityMatrix rho = pseudopure(fig_a(1.0));
    CHECK(rho.purity() == doctest::Approx(1.0));
    const RealVector w = hermitian_eigenvalues(partial_trace(rho, {0}).matrix());
    CHECK(w(0) == doctest::Approx(1.0 / 9.0));
    CHECK(w(1) == doctest::Approx(8.0 / 9.0));
  }
  SUBCASE("second parameter set") {
    const DensityMatrix rho = pseudopure(fig_b(0.5));
    CHECK(rho.dims() == Dims{3, 3});
    CHECK(rho.matrix().trace().real() == doctest::Approx(1.0));
    const RealVector spec = hermitian_eigenvalues(rho.matrix());
    CHECK(spec(8) == doctest::Approx(0.5));
    CHECK(spec(0) == doctest::Approx(0.5 / 8.0));
  }
  SUBCASE("positivity window") {
    CHECK_NOTHROW(pseudopure(fig_a(0.0)));
    CHECK(kind_of([] { pseudopure(fig_a(-0.01)); }) == ErrorKind::NotPSD);
    CHECK(kind_of([] { pseudopure(fig_a(1.01)); }) == ErrorKind::NotPSD);
  }
  SUBCASE("parameter validation") {
    CHECK(kind_of([] { pseudopure({1, 0.5, {1.0}}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { pseudopure({2, 0.5, {1.0}}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { pseudopure({2, 0.5, {0.6, 0.6}}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { pseudopure({2, 0.5, {-0.6, 0.8}}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { pseudopure({2, std::nan(""), {0.6, 0.8}}); }) == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("isotropic states") {
  CHECK(max_abs(isotropic(2, 1.0).matrix() - bell().matrix()) <= 1e-14);
  CHECK(max_abs(isotropic(2, 0.25).matrix() - Matrix::Identity(4, 4) / 4.0) <= 1e-15);
  // U (x) U* twirl invariance.
  const DensityMatrix rho = isotropic(3, 0.7);
  const Matrix u = haar_random_unitary(3, 12);
  const Matrix w = kron(u, u.conjugate());
  CHECK(max_abs(w * rho.matrix() * w.adjoint() - rho.matrix()) <= 1e-12);
}

TEST_CASE("GHZ states") {
  const PureState g = ghz(3);
  CHECK(g.dims() == Dims{2, 2, 2});
  CHECK(std::abs(g.amplitudes()(0) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(g.amplitudes()(7) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(g.amplitudes().segment(1, 6).norm() == 0.0);
  CHECK(max_abs(partial_trace(g.density(), {0, 1}).matrix() - classically_correlated().matrix()) <= 1e-14);
  CHECK(max_abs(ghz(2).density().matrix() - bell().matrix()) <= 1e-15);
  CHECK_THROWS_AS(ghz(1), Error);
}

TEST_CASE("W state") {
  const PureState w = w_state(3);
  for (int k : {1, 2, 4}) CHECK(std::abs(w.amplitudes()(k) - 1.0 / std::sqrt(3.0)) <= 1e-15);
  CHECK(w.amplitudes().norm() == doctest::Approx(1.0));
}

TEST_CASE("maximally entangled states") {
  for (std::size_t d : {2u, 3u, 4u}) {
    const DensityMatrix rho = maximally_entangled(d).density();
    const auto n = static_cast<Eigen::Index>(d);
    CHECK(max_abs(partial_trace(rho, {0}).matrix() - Matrix::Identity(n, n) / static_cast<double>(d)) <= 1e-14);
    CHECK(quantum_discord(rho, Side::First).discord ==
          doctest::Approx(std::log2(static_cast<double>(d))).epsilon(1e-8));
  }
}

TEST_CASE("basis states") {
  const PureState s = basis_state({2, 3}, {1, 2});
  CHECK(std::abs(s.amplitudes()(5) - 1.0) == 0.0);
  CHECK_THROWS_AS(basis_state({2, 3}, {1, 3}), Error);
  CHECK_THROWS_AS(basis_state({2, 3}, {1}), Error);
}

TEST_CASE("Haar random pure states") {
  const PureState a = haar_random_pure({2, 3}, 9);
  CHECK(a.amplitudes().norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((a.amplitudes() - haar_random_pure({2, 3}, 9).amplitudes()).norm() == 0.0);
  CHECK((a.amplitudes() - haar_random_pure({2, 3}, 10).amplitudes()).norm() > 1e-3);

  // Page average for two qubits is 1/(3 ln 2) bits.
  double sum = 0.0;
  constexpr int n = 10000;
  for (int i = 0; i < n; ++i) {
    sum += von_neumann_entropy(partial_trace(haar_random_pure({2, 2}, i).density(), {0}));
  }
  CHECK(std::abs(sum / n - 0.4808983469629878) <= 0.05);
}

TEST_CASE("random mixed states") {
  const DensityMatrix pure = random_mixed({2, 2}, 1, 3);
  CHECK(pure.purity() == doctest::Approx(1.0));
  const DensityMatrix full = random_mixed({2, 3}, 6, 3);
  const RealVector spec = hermitian_eigenvalues(full.matrix());
  CHECK(spec(0) > 1e-6);
  CHECK(spec.sum() == doctest::Approx(1.0).epsilon(1e-13));
  const RealVector rank2 = hermitian_eigenvalues(random_mixed({2, 2, 2}, 2, 4).matrix());
  CHECK(rank2.head(6).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK_THROWS_AS(random_mixed({2, 2}, 5, 1), Error);
  CHECK_THROWS_AS(random_mixed({2, 2}, 0, 1), Error);
}

TEST_CASE("perturbed GHZ") {
  const PureState p = perturbed_ghz(3, 0.0, 1);
  CHECK((p.amplitudes() - ghz(3).amplitudes()).norm() <= 1e-15);
  const PureState q = perturbed_ghz(3, 0.1, 1);
  CHECK(q.amplitudes().norm() == doctest::Approx(1.0));
  CHECK(std::abs(q.amplitudes().dot(ghz(3).amplitudes())) > 0.9);
}

TEST_CASE("state_from_spec") {
  CHECK(max_abs(state_from_spec("ghz:n=2").matrix() - bell().matrix()) <= 1e-15);
  CHECK(max_abs(state_from_spec("me:d=2").matrix() - bell().matrix()) <= 1e-15);
  CHECK(max_abs(state_from_spec("iso:d=3,r=0.7").matrix() - isotropic(3, 0.7).matrix()) <= 1e-15);
  CHECK(max_abs(state_from_spec("pp:d=2,r=0.6,u=0.9428,0.3333").matrix() -
                pseudopure(fig_a(0.6)).matrix()) <= 1e-4);
  CHECK(max_abs(state_from_spec("haar:dims=2x2x2,seed=42").matrix() -
                haar_random_pure({2, 2, 2}, 42).density().matrix()) == 0.0);
  CHECK(state_from_spec("mixed:dims=2x3,rank=2,seed=7").dims() == Dims{2, 3});
  CHECK(state_from_spec("w:n=3").dims() == Dims{2, 2, 2});
  CHECK(state_from_spec("ghzp:n=3,eps=0.1,seed=5").purity() == doctest::Approx(1.0));

  CHECK(kind_of([] { state_from_spec("nope:n=2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { state_from_spec("ghz"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { state_from_spec("ghz:n=two"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { state_from_spec("iso:d=2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { state_from_spec("haar:dims=2xx2"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { state_from_spec("pp:d=2,r=1.5,u=1,1"); }) == ErrorKind::NotPSD);
}

TEST_CASE("with_seed and parse_dims") {
  CHECK(with_seed("haar:dims=2x2x2", 5) == "haar:dims=2x2x2,seed=5");
  CHECK(max_abs(state_from_spec(with_seed("haar:dims=2x2,seed=1", 9)).matrix() -
                state_from_spec("haar:dims=2x2,seed=9").matrix()) == 0.0);
  CHECK(parse_dims("2x3x2") == Dims{2, 3, 2});
  CHECK_THROWS_AS(parse_dims(""), Error);
}
