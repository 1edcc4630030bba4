#include "krein/quadrature.hpp"

#include <cmath>

#include "doctest.h"

using krein::Complex;
using krein::integrate;
using krein::QuadratureOptions;

TEST_CASE("quadrature recovers elementary integrals") {
  CHECK(std::abs(integrate([](double x) { return Complex(x * x); }, 0.0, 1.0) - 1.0 / 3.0) <
        1e-14);
  const Complex osc = integrate([](double x) { return std::exp(Complex(0, x)); }, 0.0,
                                2.0 * M_PI);
  CHECK(std::abs(osc) < 1e-12);
  const Complex gauss = integrate([](double x) { return Complex(std::exp(-x * x)); }, -9.0, 9.0);
  CHECK(std::abs(gauss - std::sqrt(M_PI)) < 1e-12);
}

TEST_CASE("breakpoints handle kinks and budget exhaustion throws") {
  const Complex kinked =
      integrate([](double x) { return Complex(std::abs(x)); }, -1.0, 1.0, {0.0});
  CHECK(std::abs(kinked - 1.0) < 1e-14);

  QuadratureOptions starved;
  starved.max_intervals = 3;
  CHECK_THROWS_AS(integrate([](double x) { return Complex(std::cos(50.0 * x * x)); }, 0.0, 20.0,
                            {}, starved),
                  std::runtime_error);
}
