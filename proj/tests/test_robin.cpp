#include "krein/robin.hpp"

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"

using namespace krein;

namespace {

RobinProblem half_dirichlet_half_robin(int grid) {
  RobinProblem p;
  p.period = 20.0;
  p.a_samples = RealVector::Constant(grid, 1.0);
  p.b_samples = RealVector::Zero(grid);
  for (int r = grid / 2; r < grid; ++r) p.b_samples(r) = 1.0;  // Robin on [10, 20)
  return p;
}

}  // namespace

TEST_CASE("lambda_multiplier") {
  CHECK(lambda_multiplier(-1.0, 0.0) == doctest::Approx(1.0));
  CHECK(lambda_multiplier(-16.0, 3.0) == doctest::Approx(5.0));
  CHECK(lambda_multiplier(-1.0, 2.0) > lambda_multiplier(-1.0, 1.0));
  CHECK(lambda_multiplier(-2.0, 1.0) > lambda_multiplier(-1.0, 1.0));
  CHECK_THROWS_AS(lambda_multiplier(0.5, 1.0), std::invalid_argument);
}

TEST_CASE("problem validation") {
  RobinProblem p = RobinProblem::constant(10.0, 64, 1.0, 0.5);
  CHECK_NOTHROW(p.validate());

  p.a_samples(5) = 0.0;
  p.b_samples(5) = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  RobinProblem bad_grid;
  bad_grid.period = 10.0;
  bad_grid.a_samples = RealVector::Constant(48, 1.0);
  bad_grid.b_samples = RealVector::Constant(48, 1.0);
  CHECK_THROWS_AS(bad_grid.validate(), std::invalid_argument);
}

TEST_CASE("boundary_operator structure") {
  SUBCASE("pure Dirichlet gives the identity") {
    const RobinProblem p = RobinProblem::constant(20.0, 64, 1.0, 0.0);
    const RealMatrix op = robin_operator(p, -0.7);
    CHECK((op - RealMatrix::Identity(64, 64)).norm() < 1e-12);
  }
  SUBCASE("constant coefficients are diagonalized by Fourier modes") {
    const int m = 64;
    const double period = 20.0, z = -1.3, a = 0.8, b = 1.7;
    const RobinProblem p = RobinProblem::constant(period, m, a, b);
    const RealMatrix op = robin_operator(p, z);
    for (int j : {0, 1, 5, m / 2 - 1}) {
      const double k = 2.0 * M_PI * j / period;
      Eigen::VectorXcd mode(m);
      for (int r = 0; r < m; ++r) mode(r) = std::polar(1.0, k * (r * period / m));
      const Eigen::VectorXcd image = op.cast<Complex>() * mode;
      const double expected = a - b * lambda_multiplier(z, k);
      CHECK((image - expected * mode).norm() < 1e-10 * std::abs(expected) * std::sqrt(m) + 1e-10);
    }
  }
  SUBCASE("positive b makes the operator similar to a symmetric one") {
    const int m = 32;
    RobinProblem p = RobinProblem::constant(20.0, m, 1.0, 1.0);
    for (int r = 0; r < m; ++r) {
      p.a_samples(r) = 1.0 + 0.3 * std::sin(2.0 * M_PI * r / m);
      p.b_samples(r) = 1.5 + 0.5 * std::cos(2.0 * M_PI * r / m);
    }
    const RealMatrix op = robin_operator(p, -0.9);
    const RealVector scale = p.b_samples.array().sqrt();
    const RealMatrix similar =
        scale.cwiseInverse().asDiagonal() * op * scale.asDiagonal();
    CHECK((similar - similar.transpose()).norm() < 1e-10 * similar.norm());
  }
}

TEST_CASE("robin_spectral_indicator closed forms") {
  const int m = 64;
  SUBCASE("Dirichlet indicator is one") {
    const RobinProblem p = RobinProblem::constant(20.0, m, 1.0, 0.0);
    for (double z : {-0.3, -1.0, -7.5})
      CHECK(robin_spectral_indicator(p, z) == doctest::Approx(1.0));
  }
  SUBCASE("Neumann indicator is sqrt(-z)") {
    const RobinProblem p = RobinProblem::constant(20.0, m, 0.0, 1.0);
    for (double z : {-0.25, -2.0})
      CHECK(robin_spectral_indicator(p, z) == doctest::Approx(std::sqrt(-z)).epsilon(1e-10));
  }
  SUBCASE("constant Robin dips at the dispersion threshold") {
    const RobinProblem p = RobinProblem::constant(20.0, m, 1.0, 1.0);
    CHECK(robin_spectral_indicator(p, -1.0) < 1e-10);
    CHECK(robin_spectral_indicator(p, -1.2) > 1e-2);
  }
}

TEST_CASE("robin_bound_states") {
  SUBCASE("negative a with positive b binds nothing") {
    const RobinProblem p = RobinProblem::constant(20.0, 64, -1.0, 1.0);
    CHECK(robin_bound_states(p, -1.5, -0.01, 80, 1e-10).empty());
  }
  SUBCASE("constant coefficients reproduce the dispersion roots") {
    const double period = 20.0;
    const RobinProblem p = RobinProblem::constant(period, 64, 1.0, 1.0);
    const auto roots = robin_bound_states(p, -1.1, -0.02, 150, 1e-12);
    std::vector<double> expected;
    for (int j = 0;; ++j) {
      const double k = 2.0 * M_PI * j / period;
      if (k * k >= 1.0) break;
      expected.push_back(k * k - 1.0);
    }
    std::sort(expected.begin(), expected.end());
    REQUIRE(roots.size() == expected.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(std::abs(roots[i].z - expected[i]) < 1e-10);
      CHECK(roots[i].kernel_vectors.size() == (std::abs(expected[i] + 1.0) < 1e-9 ? 1 : 2));
    }
  }
  SUBCASE("mixed Dirichlet/Robin problem has a root inside (-1, 0)") {
    const auto roots = robin_bound_states(half_dirichlet_half_robin(128), -0.98, -0.05, 60, 1e-10);
    REQUIRE(!roots.empty());
    CHECK(roots.front().z > -1.0);
    CHECK(roots.front().z < 0.0);
  }
}

TEST_CASE("indicator is Lipschitz in z") {
  const RobinProblem p = half_dirichlet_half_robin(64);
  const double b_max = p.b_samples.maxCoeff();
  double previous = robin_spectral_indicator(p, -1.5);
  for (int i = 1; i <= 40; ++i) {
    const double z = -1.5 + i * 0.03;
    const double current = robin_spectral_indicator(p, z);
    const double bound = b_max / (2.0 * std::sqrt(-std::max(z, -1.5 + i * 0.03))) * 0.03;
    CHECK(std::abs(current - previous) <= bound + 1e-12);
    previous = current;
  }
}

TEST_CASE("periodization: enlarging the period barely moves a compact root") {
  // Robin window on [4, 8], Dirichlet elsewhere; doubling the period with the
  // same sample density should leave the localized root nearly unchanged.
  const auto window_problem = [](double period, int grid) {
    RobinProblem p;
    p.period = period;
    p.a_samples = RealVector::Constant(grid, 1.0);
    p.b_samples = RealVector::Zero(grid);
    for (int r = 0; r < grid; ++r) {
      const double x = r * period / grid;
      if (x >= 4.0 && x < 8.0) p.b_samples(r) = 1.0;
    }
    return p;
  };
  const auto first = robin_bound_states(window_problem(20.0, 128), -0.95, -0.2, 40, 1e-11);
  const auto second = robin_bound_states(window_problem(40.0, 256), -0.95, -0.2, 40, 1e-11);
  REQUIRE(!first.empty());
  REQUIRE(!second.empty());
  CHECK(std::abs(first.front().z - second.front().z) <= 1e-3);
}
