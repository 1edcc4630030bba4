#include "krein/point_interactions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "krein/quadrature.hpp"

namespace krein {

namespace {

double sign_of(double t) { return t > 0 ? 1.0 : (t < 0 ? -1.0 : 0.0); }

// Kernel of the i-th Gamma-field column: index 2k carries the h'_k slot,
// index 2k+1 the h''_k slot of the point at a_k.
Complex gamma_kernel(const PointModel& model, int i, Complex kappa, double x) {
  const double a = model.points()[i / 2].position;
  const Complex decay = std::exp(-kappa * std::abs(x - a));
  if (i % 2 == 0) return decay / (2.0 * kappa);
  return 0.5 * sign_of(x - a) * decay;
}

void ensure_resolvent_point(const ParamPair& pair, const ComplexMatrix& q, Complex z) {
  const ComplexMatrix t = pair.b * q - pair.a;
  const double smin = sigma_min(t);
  const double threshold = 1e-6 * (1.0 + sigma_max(t));
  if (smin <= threshold)
    throw std::runtime_error("z = " + std::to_string(z.real()) +
                             " is at or near an eigenvalue of the extension (spectral indicator " +
                             std::to_string(smin) + ")");
}

// Truncation radius beyond which the slowest Gamma-field kernel is < eps.
double tail_radius(const PointModel& model, Complex kappa, double eps) {
  double spread = 0;
  for (const auto& p : model.points()) spread = std::max(spread, std::abs(p.position));
  const double rate = kappa.real();
  const double amp = 0.5 + 1.0 / (2.0 * std::abs(kappa));
  return spread + std::log(amp / eps) / rate;
}

}  // namespace

InteractionPoint delta_point(double position, double strength) {
  return InteractionPoint{position, 0.0, 1.0, 0.0, strength, 1.0};
}

InteractionPoint delta_prime_point(double position, double strength) {
  return InteractionPoint{position, 0.0, 1.0, strength, 0.0, 1.0};
}

PointModel::PointModel(std::vector<InteractionPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("at least one interaction point required");
  for (std::size_t k = 0; k < points_.size(); ++k) {
    const auto& p = points_[k];
    if (!(p.theta >= 0.0 && p.theta <= M_PI))
      throw std::invalid_argument("theta must lie in [0, pi] at point " + std::to_string(k));
    const double det = p.alpha * p.delta - p.beta * p.gamma;
    if (std::abs(det - 1.0) > 1e-12)
      throw std::invalid_argument("transfer matrix at point " + std::to_string(k) +
                                  " violates unimodularity alpha*delta - beta*gamma = 1 (got " +
                                  std::to_string(det) + ")");
    if (k > 0 && !(points_[k - 1].position < p.position))
      throw std::invalid_argument("interaction points must have strictly increasing positions");
  }
}

ComplexMatrix PointModel::q_at(Complex z) const { return q_matrix(*this, z); }

ComplexMatrix PointModel::gamma_gram(Complex zeta, Complex z) const {
  return krein::gamma_gram(*this, zeta, z);
}

Complex sqrt_minus(Complex z) {
  if (z.imag() == 0.0 && z.real() >= 0.0)
    throw std::invalid_argument("z lies on the reference spectrum [0, inf)");
  return std::sqrt(-z);
}

ParamPair build_pair(const PointModel& model) {
  const int n = model.dim();
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < model.point_count(); ++k) {
    const auto& p = model.points()[k];
    const Complex e = std::polar(1.0, p.theta);
    const int r = 2 * k;
    // Transfer conditions rewritten in the jump/mean boundary coordinates.
    a(r, r) = -e * p.beta;
    a(r, r + 1) = 1.0 + e * p.alpha;
    a(r + 1, r) = 1.0 + e * p.delta;
    a(r + 1, r + 1) = -e * p.gamma;
    b(r, r) = 2.0 * (e * p.alpha - 1.0);
    b(r, r + 1) = 2.0 * e * p.beta;
    b(r + 1, r) = -2.0 * e * p.gamma;
    b(r + 1, r + 1) = 2.0 * (1.0 - e * p.delta);
  }
  return ParamPair{std::move(a), std::move(b)};
}

ComplexMatrix q_matrix(const PointModel& model, Complex z) {
  const Complex kappa = sqrt_minus(z);
  const int count = model.point_count();
  ComplexMatrix q(2 * count, 2 * count);
  for (int j = 0; j < count; ++j) {
    for (int k = 0; k < count; ++k) {
      const double gap = model.points()[j].position - model.points()[k].position;
      const Complex front = 0.5 * std::exp(-kappa * std::abs(gap));
      const double s = sign_of(gap);
      q(2 * j, 2 * k) = front / kappa;
      q(2 * j, 2 * k + 1) = front * s;
      q(2 * j + 1, 2 * k) = -front * s;
      q(2 * j + 1, 2 * k + 1) = -front * kappa;
    }
  }
  return q;
}

Complex gamma_apply(const PointModel& model, const ComplexVector& h, Complex z, double x) {
  if (h.size() != model.dim())
    throw std::invalid_argument("boundary vector has wrong dimension");
  const Complex kappa = sqrt_minus(z);
  Complex g = 0;
  for (int i = 0; i < model.dim(); ++i) g += h(i) * gamma_kernel(model, i, kappa, x);
  return g;
}

ComplexMatrix gamma_gram(const PointModel& model, Complex zeta, Complex z) {
  const Complex kz = sqrt_minus(z);
  const Complex kzeta = sqrt_minus(zeta);
  const double radius =
      std::max(tail_radius(model, kz, 1e-12), tail_radius(model, kzeta, 1e-12)) + 2.0;
  std::vector<double> breaks;
  for (const auto& p : model.points()) breaks.push_back(p.position);

  QuadratureOptions opts;
  opts.rel_tol = 1e-9;
  opts.abs_tol = 1e-13;
  const int n = model.dim();
  ComplexMatrix gram(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      gram(i, j) = integrate(
          [&](double x) {
            return std::conj(gamma_kernel(model, i, kzeta, x)) * gamma_kernel(model, j, kz, x);
          },
          -radius, radius, breaks, opts);
    }
  }
  return gram;
}

Complex free_green(double x, double y, Complex z) {
  const Complex kappa = sqrt_minus(z);
  return std::exp(-kappa * std::abs(x - y)) / (2.0 * kappa);
}

Complex green_function(const PointModel& model, const ParamPair& pair, double x, double y,
                       Complex z) {
  const ComplexMatrix q = q_matrix(model, z);
  ensure_resolvent_point(pair, q, z);
  const ComplexMatrix c = correction_right(pair, q).matrix;
  const Complex kappa = sqrt_minus(z);
  const int n = model.dim();
  ComplexVector gx(n), gy(n);
  for (int i = 0; i < n; ++i) {
    gx(i) = gamma_kernel(model, i, kappa, x);
    gy(i) = gamma_kernel(model, i, kappa, y);
  }
  // The kernel of gamma^*(conj(z)) evaluates as gamma_j(y; z): no conjugation.
  const Complex correction = (gx.transpose() * (c * gy))(0);
  return free_green(x, y, z) - correction;
}

Complex resolve_apply(const PointModel& model, const ParamPair& pair,
                      const std::function<Complex(double)>& f, Complex z, double x) {
  const ComplexMatrix q = q_matrix(model, z);
  ensure_resolvent_point(pair, q, z);
  const ComplexMatrix c = correction_right(pair, q).matrix;
  const Complex kappa = sqrt_minus(z);
  const int n = model.dim();

  const double radius = tail_radius(model, kappa, 1e-13) + std::abs(x) + 10.0;
  std::vector<double> breaks{x};
  for (const auto& p : model.points()) breaks.push_back(p.position);

  QuadratureOptions opts;
  opts.rel_tol = 1e-8;
  opts.abs_tol = 1e-12;

  const Complex base = integrate([&](double y) { return free_green(x, y, z) * f(y); }, -radius,
                                 radius, breaks, opts);
  ComplexVector moments(n);
  for (int j = 0; j < n; ++j)
    moments(j) = integrate([&](double y) { return gamma_kernel(model, j, kappa, y) * f(y); },
                           -radius, radius, breaks, opts);
  ComplexVector gx(n);
  for (int i = 0; i < n; ++i) gx(i) = gamma_kernel(model, i, kappa, x);
  return base - (gx.transpose() * (c * moments))(0);
}

double eigenfunction_norm(const PointModel& model, const ComplexVector& xi, double z) {
  if (xi.size() != model.dim())
    throw std::invalid_argument("boundary vector has wrong dimension");
  if (!(z < 0)) throw std::invalid_argument("eigenfunction normalization requires z < 0");
  const double kappa = std::sqrt(-z);
  const int count = model.point_count();

  // On each interval g(x) = P e^{-kappa x} + Q e^{kappa x}; the coefficients
  // collect contributions of points to the left resp. right of the interval.
  const auto weight_plus = [&](int k) {
    return 0.5 * (xi(2 * k) / kappa + xi(2 * k + 1)) *
           std::exp(kappa * model.points()[k].position);
  };
  const auto weight_minus = [&](int k) {
    return 0.5 * (xi(2 * k) / kappa - xi(2 * k + 1)) *
           std::exp(-kappa * model.points()[k].position);
  };

  double norm_sq = 0;
  for (int i = 0; i <= count; ++i) {
    Complex p = 0, qq = 0;
    for (int k = 0; k < i; ++k) p += weight_plus(k);
    for (int k = i; k < count; ++k) qq += weight_minus(k);
    if (i == 0) {
      const double r = model.points()[0].position;
      norm_sq += std::norm(qq) * std::exp(2 * kappa * r) / (2 * kappa);
    } else if (i == count) {
      const double l = model.points()[count - 1].position;
      norm_sq += std::norm(p) * std::exp(-2 * kappa * l) / (2 * kappa);
    } else {
      const double l = model.points()[i - 1].position;
      const double r = model.points()[i].position;
      norm_sq += std::norm(p) * (std::exp(-2 * kappa * l) - std::exp(-2 * kappa * r)) / (2 * kappa);
      norm_sq += std::norm(qq) * (std::exp(2 * kappa * r) - std::exp(2 * kappa * l)) / (2 * kappa);
      norm_sq += 2.0 * (std::conj(p) * qq).real() * (r - l);
    }
  }
  return std::sqrt(norm_sq);
}

std::vector<BoundState> bound_states(const PointModel& model, const ParamPair& pair, double z_lo,
                                     double z_hi, int grid, double tol) {
  if (!(z_hi < 0)) throw std::invalid_argument("bound-state scan requires z_hi < 0");
  std::vector<BoundState> states;
  for (const auto& r : eigenvalue_scan(model, pair, z_lo, z_hi, grid, tol)) {
    BoundState s;
    s.eigenvalue = r.eigenvalue;
    s.indicator_residual = r.indicator_residual;
    s.kernel_vectors = r.kernel_vectors;
    for (const auto& xi : s.kernel_vectors) {
      const double norm = eigenfunction_norm(model, xi, r.eigenvalue);
      if (!(norm > 0)) throw std::runtime_error("degenerate eigenfunction normalization");
      const double z = r.eigenvalue;
      s.eigenfunctions.push_back([model, xi, z, norm](double x) {
        return gamma_apply(model, xi, Complex(z, 0), x) / norm;
      });
    }
    states.push_back(std::move(s));
  }
  return states;
}

}  // namespace krein
