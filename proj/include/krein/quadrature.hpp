#pragma once

#include <functional>
#include <vector>

#include "krein/types.hpp"

namespace krein {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_intervals = 4000;
};

// Adaptive Gauss-Kronrod (7-15) integration of a complex-valued integrand on
// [lo, hi]. Interior breakpoints (kinks of the integrand) are honored as
// initial subdivision points. Throws std::runtime_error when the interval
// budget runs out before the error estimate meets the tolerance.
Complex integrate(const std::function<Complex(double)>& f, double lo, double hi,
                  const std::vector<double>& breakpoints = {},
                  const QuadratureOptions& opts = {});

}  // namespace krein
