#pragma once

#include <vector>

#include "krein/types.hpp"

namespace krein {

// Robin boundary data a(x) u + b(x) du/dn = 0 for the half-plane Laplacian,
// periodized to a boundary line of length `period` and sampled on a uniform
// grid of power-of-two size M at x_r = r * period / M.
struct RobinProblem {
  double period = 0;
  RealVector a_samples;
  RealVector b_samples;

  int grid_size() const { return static_cast<int>(a_samples.size()); }
  void validate() const;  // throws std::invalid_argument naming the violation

  static RobinProblem constant(double period, int grid_size, double a, double b);
};

// Boundary multiplier Lambda(z) at frequency k: sqrt(k^2 - z), z < 0.
double lambda_multiplier(double z, double k);

// Matrix of u -> a u - b (F^{-1} diag Lambda F u) in the position basis;
// real at real z, returned as the real internal form.
RealMatrix robin_operator(const RobinProblem& problem, double z);

// Same operator with the complex carrier type.
ComplexMatrix boundary_operator(const RobinProblem& problem, double z);

// sigma_min of the boundary operator; vanishes exactly at eigenvalues of the
// Robin extension below the free threshold.
double robin_spectral_indicator(const RobinProblem& problem, double z);

struct RobinRoot {
  double z = 0;
  double indicator = 0;
  std::vector<RealVector> kernel_vectors;  // boundary traces on the grid
};

// Scan-and-refine on the Robin indicator over [z_lo, z_hi], z_hi < 0.
std::vector<RobinRoot> robin_bound_states(const RobinProblem& problem, double z_lo, double z_hi,
                                          int grid, double tol);

}  // namespace krein
