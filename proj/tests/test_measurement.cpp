#include <doctest.h>

#include "qdiscord/error.hpp"
#include "qdiscord/measurement.hpp"
#include "test_helpers.hpp"

using namespace qdiscord;
using namespace qdiscord::test;

namespace {

ProjectiveBasis hadamard() {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return ProjectiveBasis::from_unitary(h / std::sqrt(2.0), "hadamard");
}

}  // namespace

TEST_CASE("incompatibility of common pairs") {
  CHECK(incompatibility_c(computational_basis(2), computational_basis(2)) == doctest::Approx(1.0));
  CHECK(incompatibility_c(computational_basis(2), hadamard()) == doctest::Approx(0.5));
  CHECK(incompatibility_c(computational_basis(3), fourier_basis(3)) == doctest::Approx(1.0 / 3.0));
  for (std::size_t d = 2; d <= 6; ++d) {
    const ObservablePair pair = complementary_pair(d);
    CHECK(pair.dim() == d);
    CHECK(std::log2(1.0 / pair.c) == doctest::Approx(std::log2(static_cast<double>(d))));
  }
}

TEST_CASE("incompatibility stays within [1/d, 1]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    for (std::size_t d : {2u, 3u, 4u}) {
      const auto q = basis_from_unitary(haar_random_unitary(d, seed));
      const auto r = basis_from_unitary(haar_random_unitary(d, seed + 7919));
      const double c = incompatibility_c(q, r);
      CHECK(c >= 1.0 / static_cast<double>(d) - 1e-12);
      CHECK(c <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("Fourier basis is orthonormal") {
  const Matrix f = fourier_basis(4).vectors();
  CHECK(max_abs(f.adjoint() * f - Matrix::Identity(4, 4)) <= 1e-14);
  CHECK(fourier_basis(4).label() == "fourier");
  CHECK_THROWS_AS(fourier_basis(1), Error);
}

TEST_CASE("from_unitary rejects non-unitary input") {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 0) = 1.001;
  try {
    ProjectiveBasis::from_unitary(m);
    FAIL("expected NotUnitary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotUnitary);
  }
}

TEST_CASE("projectors") {
  const ProjectiveBasis b = basis_from_unitary(haar_random_unitary(3, 5));
  Matrix sum = Matrix::Zero(3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    const Matrix p = b.projector(k);
    CHECK(max_abs(p * p - p) <= 1e-12);
    sum += p;
  }
  CHECK(max_abs(sum - Matrix::Identity(3, 3)) <= 1e-12);
}

TEST_CASE("measure_side") {
  SUBCASE("Bell state in Z on the second party") {
    const DensityMatrix m = measure_side(bell(), computational_basis(2), Side::Second);
    CHECK(max_abs(m.matrix() - classically_correlated().matrix()) <= 1e-14);
  }
  SUBCASE("idempotent and entropy non-decreasing") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const DensityMatrix rho = random_mixed({2, 3}, 3, seed);
      const ProjectiveBasis b = basis_from_unitary(haar_random_unitary(3, seed + 100));
      const DensityMatrix once = measure_side(rho, b, Side::Second);
      const DensityMatrix twice = measure_side(once, b, Side::Second);
      CHECK(max_abs(once.matrix() - twice.matrix()) <= 1e-12);
      CHECK(von_neumann_entropy(once) >= von_neumann_entropy(rho) - 1e-10);
      // The unmeasured marginal is untouched.
      CHECK(max_abs(partial_trace(once, {0}).matrix() - partial_trace(rho, {0}).matrix()) <= 1e-12);
    }
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(measure_side(random_mixed({2, 3}, 2, 1), computational_basis(2), Side::Second),
                    Error);
  }
}

TEST_CASE("conditional_states") {
  SUBCASE("Bell state measured in Z on A") {
    const auto outcomes = conditional_states(bell(), computational_basis(2), Side::First);
    REQUIRE(outcomes.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
      CHECK(outcomes[k].probability == doctest::Approx(0.5));
      CHECK_FALSE(outcomes[k].negligible);
      CHECK(outcomes[k].state.dims() == Dims{2});
      CHECK(std::abs(outcomes[k].state.matrix()(k, k) - 1.0) <= 1e-12);
    }
  }
  SUBCASE("product |0><0| (x) I/2 measured in Z on A") {
    const DensityMatrix rho = tensor_product(diag_state({1.0, 0.0}, {2}), maximally_mixed({2}));
    const auto outcomes = conditional_states(rho, computational_basis(2), Side::First);
    CHECK(outcomes[0].probability == doctest::Approx(1.0));
    CHECK(max_abs(outcomes[0].state.matrix() - Matrix::Identity(2, 2) / 2.0) <= 1e-12);
    CHECK(outcomes[1].probability == doctest::Approx(0.0));
    CHECK(outcomes[1].negligible);
    CHECK(max_abs(outcomes[1].state.matrix() - Matrix::Identity(2, 2) / 2.0) <= 1e-12);
  }
  SUBCASE("averaged conditional states reproduce the unmeasured marginal") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const DensityMatrix rho = random_mixed({3, 2}, 4, seed);
      const ProjectiveBasis b = basis_from_unitary(haar_random_unitary(3, seed + 1));
      double total = 0.0;
      Matrix avg = Matrix::Zero(2, 2);
      for (const auto& o : conditional_states(rho, b, Side::First)) {
        total += o.probability;
        avg += o.probability * o.state.matrix();
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(max_abs(avg - partial_trace(rho, {1}).matrix()) <= 1e-12);
    }
  }
}

TEST_CASE("joint_outcome_distribution") {
  const Eigen::MatrixXd zz = joint_outcome_distribution(bell(), computational_basis(2), computational_basis(2));
  CHECK(zz(0, 0) == doctest::Approx(0.5));
  CHECK(zz(1, 1) == doctest::Approx(0.5));
  CHECK(zz(0, 1) == doctest::Approx(0.0));
  CHECK(zz(1, 0) == doctest::Approx(0.0));

  const Eigen::MatrixXd xx = joint_outcome_distribution(bell(), hadamard(), hadamard());
  CHECK(xx(0, 0) == doctest::Approx(0.5));
  CHECK(xx(1, 1) == doctest::Approx(0.5));
  CHECK(std::abs(xx(0, 1)) <= 1e-14);

  const Eigen::MatrixXd uniform =
      joint_outcome_distribution(maximally_mixed({2, 3}), hadamard(), fourier_basis(3));
  CHECK(uniform.rows() == 2);
  CHECK(uniform.cols() == 3);
  CHECK((uniform.array() - 1.0 / 6.0).abs().maxCoeff() <= 1e-14);
}

TEST_CASE("Haar unitaries") {
  CHECK(max_abs(haar_random_unitary(4, 42) - haar_random_unitary(4, 42)) == 0.0);
  CHECK(max_abs(haar_random_unitary(4, 42) - haar_random_unitary(4, 43)) > 1e-3);
  for (std::size_t d : {2u, 3u, 5u}) {
    const Matrix u = haar_random_unitary(d, d);
    CHECK(max_abs(u.adjoint() * u - Matrix::Identity(d, d)) <= 1e-12);
  }
}

TEST_CASE("Haar moment: |U_00|^2 follows Beta(1, d-1)") {
  constexpr int n = 10000;
  for (std::size_t d : {2u, 3u, 4u}) {
    Rng rng(1234 + d);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += std::norm(haar_random_unitary(d, rng)(0, 0));
    const double dd = static_cast<double>(d);
    const double variance = (dd - 1.0) / (dd * dd * (dd + 1.0));
    const double sigma = std::sqrt(variance / n);
    CHECK(std::abs(sum / n - 1.0 / dd) <= 3.0 * sigma);
  }
}
