#pragma once

#include <complex>

#include <Eigen/Dense>

namespace krein {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Singular values below rank_cutoff * max(1, sigma_max) count as zero in all
// rank and kernel decisions.
inline constexpr double rank_cutoff = 1e-10;

// Default tolerance for subspace comparisons (projector distance).
inline constexpr double subspace_tol = 1e-10;

bool all_finite(const ComplexMatrix& m);

double sigma_min(const ComplexMatrix& m);
double sigma_max(const ComplexMatrix& m);

// Orthonormal basis of the column span, rank decided with the cutoff above.
ComplexMatrix column_space(const ComplexMatrix& m);

// Orthonormal basis of the kernel (right null space).
ComplexMatrix kernel_space(const ComplexMatrix& m);

// Orthonormal basis of the orthogonal complement of the column span.
// Requires m to have orthonormal columns.
ComplexMatrix orthogonal_complement(const ComplexMatrix& m);

}  // namespace krein
