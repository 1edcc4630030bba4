#include "krein/krein.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "krein/point_interactions.hpp"
#include "test_support.hpp"

using namespace krein;
using testsupport::random_hermitian;
using testsupport::random_unitary;
using testsupport::random_well_conditioned;

namespace {

ComplexMatrix scalar(Complex v) {
  ComplexMatrix m(1, 1);
  m << v;
  return m;
}

// Q with strictly positive imaginary part, mimicking Q(z) at nonreal z.
ComplexMatrix herglotz_q(std::mt19937_64& rng, int n) {
  return random_hermitian(rng, n) + Complex(0, 1) * ComplexMatrix::Identity(n, n);
}

struct GramlessModel : BoundaryModel {
  int dim() const override { return 1; }
  ComplexMatrix q_at(Complex z) const override { return scalar(sqrt_minus(z)); }
  double reference_spectrum_threshold() const override { return 0.0; }
};

}  // namespace

TEST_CASE("corrections vanish for the distinguished extension and match the scalar form") {
  const ParamPair h0{Complex(0, 2) * ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)};
  const ComplexMatrix q = ComplexMatrix::Identity(2, 2) * Complex(0.3, 0.7);
  CHECK(correction_left(h0, q).norm() == 0.0);
  CHECK(correction_right(h0, q).matrix.norm() == 0.0);

  const ParamPair ones{scalar(1.0), scalar(1.0)};
  const Complex qv(2.5, 0.4);
  const Complex expected = 1.0 / (qv - 1.0);
  CHECK(std::abs(correction_left(ones, scalar(qv))(0, 0) - expected) < 1e-14);
  CHECK(std::abs(correction_right(ones, scalar(qv)).matrix(0, 0) - expected) < 1e-14);
}

TEST_CASE("the two correction formulas agree for normalized pairs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const ParamPair pair = cayley_pair(random_unitary(rng, n));
    const ComplexMatrix q = herglotz_q(rng, n);
    CHECK(corrections_consistent(pair, q) <= 1e-10 * (1.0 + q.norm()));
  }
}

TEST_CASE("correction_right is invariant under left factors") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const ParamPair pair = cayley_pair(random_unitary(rng, n));
    const ComplexMatrix q = herglotz_q(rng, n);
    const ComplexMatrix l = random_well_conditioned(rng, n);
    const ComplexMatrix base = correction_right(pair, q).matrix;
    const ComplexMatrix scaled = correction_right({l * pair.a, l * pair.b}, q).matrix;
    CHECK((base - scaled).norm() <= 1e-9 * (1.0 + base.norm()));
  }
}

TEST_CASE("correction symmetry C(z)^H = C(conj z) through a model Q") {
  const PointModel model({delta_point(0.0, -2.0), delta_point(1.3, 1.0)});
  const ParamPair pair = build_pair(model);
  const Complex z(-1.7, 0.6);
  const ComplexMatrix at_z = correction_right(pair, model.q_at(z)).matrix;
  const ComplexMatrix at_conj = correction_right(pair, model.q_at(std::conj(z))).matrix;
  CHECK((at_z.adjoint() - at_conj).norm() < 1e-11);
}

TEST_CASE("weak correction reports the range consistency residual") {
  std::mt19937_64 rng(27);
  const ParamPair pair = cayley_pair(random_unitary(rng, 3));
  const ComplexMatrix l_singular = ComplexMatrix::Identity(3, 3);
  ComplexMatrix drop = l_singular;
  drop(2, 2) = 0.0;  // rank-deficient left factor: denormalized beyond repair
  const ParamPair degenerate{drop * pair.a, drop * pair.b};
  const ComplexMatrix q = herglotz_q(rng, 3);
  // The kernel condition is unaffected for directions in ran B.
  const WeakCorrection weak = correction_right(degenerate, q);
  CHECK(weak.consistency_residual <= 1e-9 * (1.0 + degenerate.b.norm()));
}

TEST_CASE("spectral indicator locates the delta bound state") {
  const PointModel model({delta_point(0.0, -2.0)});
  const ParamPair pair = build_pair(model);
  CHECK(spectral_indicator(pair, model.q_at(Complex(-1.0, 0))) < 1e-12);
  CHECK(spectral_indicator(pair, model.q_at(Complex(-2.0, 0))) > 1e-3);

  const ParamPair h0{Complex(0, 2) * ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)};
  for (double z : {-0.5, -1.0, -4.0, -9.0})
    CHECK(spectral_indicator(h0, model.q_at(Complex(z, 0))) == doctest::Approx(2.0));
}

TEST_CASE("eigenvalue_scan finds the known single-point spectra") {
  SUBCASE("attractive delta") {
    const PointModel model({delta_point(0.0, -2.0)});
    const auto roots = eigenvalue_scan(model, build_pair(model), -10.0, -0.01, 400, 1e-12);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].eigenvalue + 1.0) < 1e-8);
    CHECK(roots[0].kernel_vectors.size() == 1);
    CHECK(roots[0].indicator_residual <= 1e-6);
    // Local-minimum certificate.
    const auto& model_ref = model;
    const ParamPair pair = build_pair(model_ref);
    const double at_root = roots[0].indicator_residual;
    for (double offset : {-1e-11, 1e-11}) {
      const double nearby =
          spectral_indicator(pair, model_ref.q_at(Complex(roots[0].eigenvalue + 10 * offset, 0)));
      CHECK(nearby >= at_root);
    }
  }
  SUBCASE("delta-prime point") {
    const PointModel model({delta_prime_point(0.0, -2.0)});
    const auto roots = eigenvalue_scan(model, build_pair(model), -10.0, -0.01, 400, 1e-12);
    REQUIRE(roots.size() == 1);
    CHECK(std::abs(roots[0].eigenvalue + 1.0) < 1e-8);
  }
  SUBCASE("distinguished extension has no negative spectrum") {
    const PointModel model({delta_point(0.0, -2.0)});
    const ParamPair h0{Complex(0, 2) * ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)};
    CHECK(eigenvalue_scan(model, h0, -10.0, -0.01, 200, 1e-10).empty());
  }
  SUBCASE("interval validation") {
    const PointModel model({delta_point(0.0, -2.0)});
    const ParamPair pair = build_pair(model);
    CHECK_THROWS_AS(eigenvalue_scan(model, pair, -1.0, -2.0, 100, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalue_scan(model, pair, -1.0, 0.5, 100, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalue_scan(model, pair, -1.0, -0.1, 1, 1e-10), std::invalid_argument);
  }
}

TEST_CASE("eigenspace extraction") {
  const PointModel single({delta_point(0.0, -2.0)});
  const ParamPair pair = build_pair(single);
  CHECK(eigenspace(single, pair, -1.0).size() == 1);

  // Two distant identical wells: two nearly degenerate states, each simple.
  const PointModel distant({delta_point(-2.5, -2.0), delta_point(2.5, -2.0)});
  const auto roots = eigenvalue_scan(distant, build_pair(distant), -1.5, -0.5, 400, 1e-13);
  REQUIRE(roots.size() == 2);
  for (const auto& r : roots) CHECK(r.kernel_vectors.size() == 1);
  CHECK(std::abs(roots[0].eigenvalue + 1.0) < 0.05);
  CHECK(std::abs(roots[1].eigenvalue + 1.0) < 0.05);

  const ParamPair h0{Complex(0, 2) * ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2)};
  CHECK_THROWS_AS(eigenspace(single, h0, -1.0), std::runtime_error);
}

TEST_CASE("q-function identity residual") {
  const PointModel model({delta_point(0.0, -2.0)});
  SUBCASE("real coincident points reduce to the Hermiticity check") {
    CHECK(q_identity_residual(model, Complex(-1, 0), Complex(-1, 0)) < 1e-12);
  }
  SUBCASE("separated real points") {
    CHECK(q_identity_residual(model, Complex(-1, 0), Complex(-4, 0)) < 1e-6);
  }
  SUBCASE("complex points") {
    CHECK(q_identity_residual(model, Complex(-1, 0.5), Complex(-2, -0.3)) < 1e-6);
  }
  SUBCASE("missing capability") {
    CHECK_THROWS_AS(q_identity_residual(GramlessModel{}, Complex(-1, 0), Complex(-2, 0)),
                    std::logic_error);
  }
}
