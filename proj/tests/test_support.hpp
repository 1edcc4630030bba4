#pragma once

#include <random>

#include "krein/types.hpp"

namespace testsupport {

using krein::Complex;
using krein::ComplexMatrix;
using krein::ComplexVector;

inline ComplexMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> dist;
  ComplexMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n, n));
  ComplexMatrix q = qr.householderQ();
  return q;
}

inline ComplexMatrix random_hermitian(std::mt19937_64& rng, int n) {
  ComplexMatrix m = random_matrix(rng, n, n);
  return 0.5 * (m + m.adjoint());
}

// Invertible with singular values in [0.5, 2].
inline ComplexMatrix random_well_conditioned(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> dist(0.5, 2.0);
  Eigen::VectorXd sv(n);
  for (int i = 0; i < n; ++i) sv(i) = dist(rng);
  return random_unitary(rng, n) * sv.asDiagonal() * random_unitary(rng, n);
}

}  // namespace testsupport
