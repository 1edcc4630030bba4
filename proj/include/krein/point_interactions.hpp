#pragma once

#include <functional>
#include <vector>

#include "krein/krein.hpp"
#include "krein/linrel.hpp"
#include "krein/types.hpp"

namespace krein {

// One interaction point of -d^2/dx^2 on the line. The connecting condition is
//   (f(a+), f'(a+))^T = e^{i theta} [[alpha, beta], [gamma, delta]] (f(a-), f'(a-))^T
// with real unimodular entries (alpha delta - beta gamma = 1) and theta in [0, pi].
struct InteractionPoint {
  double position = 0;
  double theta = 0;
  double alpha = 1;
  double beta = 0;
  double gamma = 0;
  double delta = 1;
};

// f continuous, f' jumping by strength * f(a).
InteractionPoint delta_point(double position, double strength);

// f' continuous, f jumping by strength * f'(a).
InteractionPoint delta_prime_point(double position, double strength);

// Finitely many interaction points at strictly increasing positions. The
// boundary space is C^{2N}, ordered per point as (jump data of -f', jump data
// of f); the reference extension is the free Laplacian with spectrum [0, inf).
class PointModel : public BoundaryModel {
 public:
  explicit PointModel(std::vector<InteractionPoint> points);

  int point_count() const { return static_cast<int>(points_.size()); }
  const std::vector<InteractionPoint>& points() const { return points_; }

  int dim() const override { return 2 * point_count(); }
  ComplexMatrix q_at(Complex z) const override;
  double reference_spectrum_threshold() const override { return 0.0; }
  bool has_gamma_gram() const override { return true; }
  ComplexMatrix gamma_gram(Complex zeta, Complex z) const override;

 private:
  std::vector<InteractionPoint> points_;
};

// Principal branch of sqrt(-z); has positive real part off [0, inf).
Complex sqrt_minus(Complex z);

// Block-diagonal boundary pair encoding the transfer conditions of the model.
ParamPair build_pair(const PointModel& model);

// Q(z) as a 2N x 2N block matrix.
ComplexMatrix q_matrix(const PointModel& model, Complex z);

// Deficiency-type element g = gamma(z) h evaluated at x; h holds N pairs
// (h'_k, h''_k). Uses sgn(0) = 0 at the interaction points.
Complex gamma_apply(const PointModel& model, const ComplexVector& h, Complex z, double x);

// Gram matrix of the Gamma-field, entry (i,j) = <gamma(zeta)e_i, gamma(z)e_j>
// in L^2(R), by adaptive quadrature with exponential tail truncation.
ComplexMatrix gamma_gram(const PointModel& model, Complex zeta, Complex z);

// Kernel of the free resolvent: e^{-sqrt(-z)|x-y|} / (2 sqrt(-z)).
Complex free_green(double x, double y, Complex z);

// Green function of the extension via the resolvent correction
// G0(x,y;z) - sum_ij gamma_i(x;z) C_ij(z) gamma_j(y;z).
Complex green_function(const PointModel& model, const ParamPair& pair, double x, double y,
                       Complex z);

// Resolvent applied to an integrable function f: integral of G(x,y;z) f(y) dy.
Complex resolve_apply(const PointModel& model, const ParamPair& pair,
                      const std::function<Complex(double)>& f, Complex z, double x);

// Analytic L^2 norm of gamma_apply(model, xi, z, .) for real z < 0, from the
// piecewise-exponential closed form.
double eigenfunction_norm(const PointModel& model, const ComplexVector& xi, double z);

struct BoundState {
  double eigenvalue = 0;
  double indicator_residual = 0;
  std::vector<ComplexVector> kernel_vectors;
  // One L^2-normalized evaluator per kernel vector.
  std::vector<std::function<Complex(double)>> eigenfunctions;
};

// Negative-spectrum scan wrapping eigenvalue_scan, with eigenfunction
// evaluators built from the Gamma-field.
std::vector<BoundState> bound_states(const PointModel& model, const ParamPair& pair, double z_lo,
                                     double z_hi, int grid = 400, double tol = 1e-10);

}  // namespace krein
