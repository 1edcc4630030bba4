#pragma once

#include <functional>
#include <vector>

#include "krein/linrel.hpp"
#include "krein/types.hpp"

namespace krein {

// Capabilities a solvable model must supply to drive the resolvent engine:
// the Q-function on the resolvent set of the distinguished extension, and
// (optionally) Gram matrices of the Gamma-field for consistency checks.
class BoundaryModel {
 public:
  virtual ~BoundaryModel() = default;

  virtual int dim() const = 0;
  virtual ComplexMatrix q_at(Complex z) const = 0;
  // Real z strictly below this value belong to the resolvent set of H^0.
  virtual double reference_spectrum_threshold() const = 0;

  virtual bool has_gamma_gram() const { return false; }
  // Gram matrix gamma^*(zeta) gamma(z); entry (i,j) = <gamma(zeta)e_i, gamma(z)e_j>.
  virtual ComplexMatrix gamma_gram(Complex zeta, Complex z) const;
};

struct SpectralResult {
  double eigenvalue = 0;
  std::vector<ComplexVector> kernel_vectors;  // unit-norm boundary vectors
  double indicator_residual = 0;              // sigma_min at the root
};

// Middle factor of the resolvent correction, first form: B^* (Q B^* - A^*)^{-1}.
// Requires a normalized pair and Q B^* - A^* regular.
ComplexMatrix correction_left(const ParamPair& pair, const ComplexMatrix& q);

struct WeakCorrection {
  ComplexMatrix matrix;          // (B Q - A)^{-1} B, pseudo-inverse on ran B
  double consistency_residual;   // ||(B Q - A) C - B||
};

// Middle factor, second form. For normalized pairs B Q - A is invertible and
// the residual is at rounding level; for merely self-adjoint pairs the weak
// form is returned.
WeakCorrection correction_right(const ParamPair& pair, const ComplexMatrix& q);

// ||correction_left - correction_right|| for a normalized pair.
double corrections_consistent(const ParamPair& pair, const ComplexMatrix& q);

// sigma_min(B Q - A); vanishes exactly when the extension has spectrum at
// the point where Q was evaluated.
double spectral_indicator(const ParamPair& pair, const ComplexMatrix& q);

// Grid scan of the spectral indicator over [z_lo, z_hi] with golden-section
// refinement of bracketed local minima. Roots are accepted when the refined
// indicator falls below 1e-6 * (1 + ||B Q(z) - A||).
std::vector<SpectralResult> eigenvalue_scan(const BoundaryModel& model, const ParamPair& pair,
                                            double z_lo, double z_hi, int grid, double tol);

// Orthonormal basis of ker(B Q(z) - A) at a detected eigenvalue.
std::vector<ComplexVector> eigenspace(const BoundaryModel& model, const ParamPair& pair, double z);

// ||Q(z) - Q(zeta)^H - (z - conj(zeta)) gamma^*(zeta) gamma(z)||.
double q_identity_residual(const BoundaryModel& model, Complex z, Complex zeta);

struct IndicatorMinimum {
  double z = 0;
  double value = 0;
};

// Shared scan-and-refine utility: samples the indicator on a uniform grid,
// brackets interior local minima and refines each bracket by golden-section
// search down to width tol. Returns all refined minima, unfiltered.
std::vector<IndicatorMinimum> scan_indicator_minima(const std::function<double(double)>& indicator,
                                                    double z_lo, double z_hi, int grid, double tol);

}  // namespace krein
