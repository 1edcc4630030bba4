#include "krein/krein.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace krein {

ComplexMatrix BoundaryModel::gamma_gram(Complex, Complex) const {
  throw std::logic_error("model does not provide gamma_gram");
}

namespace {

struct GoldenResult {
  double x = 0;
  double fx = 0;
};

GoldenResult golden_min(const std::function<double(double)>& f, double a, double b, double tol) {
  static const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  int guard = 0;
  while (b - a > tol && ++guard < 300) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

}  // namespace

ComplexMatrix correction_left(const ParamPair& pair, const ComplexMatrix& q) {
  if (!is_normalized(pair))
    throw std::invalid_argument("correction_left requires a normalized pair");
  const ComplexMatrix m = q * pair.b.adjoint() - pair.a.adjoint();
  if (sigma_min(m) <= rank_cutoff * std::max(1.0, sigma_max(m)))
    throw std::runtime_error("Q B^* - A^* is singular; point lies in the extension spectrum");
  // C = B^H M^{-1}, computed as (M^H \ B)^H.
  return m.adjoint().partialPivLu().solve(pair.b).adjoint();
}

WeakCorrection correction_right(const ParamPair& pair, const ComplexMatrix& q) {
  const ComplexMatrix t = pair.b * q - pair.a;
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rank_cutoff);
  WeakCorrection out;
  out.matrix = svd.solve(pair.b);
  out.consistency_residual = (t * out.matrix - pair.b).norm();
  return out;
}

double corrections_consistent(const ParamPair& pair, const ComplexMatrix& q) {
  return (correction_left(pair, q) - correction_right(pair, q).matrix).norm();
}

double spectral_indicator(const ParamPair& pair, const ComplexMatrix& q) {
  return sigma_min(pair.b * q - pair.a);
}

std::vector<IndicatorMinimum> scan_indicator_minima(const std::function<double(double)>& indicator,
                                                    double z_lo, double z_hi, int grid, double tol) {
  if (grid < 2) throw std::invalid_argument("scan grid must have at least 2 cells");
  if (!(z_lo < z_hi)) throw std::invalid_argument("empty scan interval");

  const double h = (z_hi - z_lo) / grid;
  std::vector<double> values(grid + 1);
  for (int i = 0; i <= grid; ++i) values[i] = indicator(z_lo + i * h);

  std::vector<IndicatorMinimum> minima;
  for (int i = 1; i < grid; ++i) {
    if (values[i] <= values[i - 1] && values[i] < values[i + 1]) {
      GoldenResult g = golden_min(indicator, z_lo + (i - 1) * h, z_lo + (i + 1) * h, tol);
      minima.push_back({g.x, g.fx});
    }
  }
  std::sort(minima.begin(), minima.end(),
            [](const IndicatorMinimum& a, const IndicatorMinimum& b) { return a.z < b.z; });
  // Brackets that collapsed onto the same point are duplicates.
  std::vector<IndicatorMinimum> unique;
  for (const auto& m : minima) {
    if (!unique.empty() && std::abs(m.z - unique.back().z) <= 10 * tol) {
      if (m.value < unique.back().value) unique.back() = m;
    } else {
      unique.push_back(m);
    }
  }
  return unique;
}

std::vector<SpectralResult> eigenvalue_scan(const BoundaryModel& model, const ParamPair& pair,
                                            double z_lo, double z_hi, int grid, double tol) {
  if (!(z_hi < model.reference_spectrum_threshold()))
    throw std::invalid_argument("scan interval touches the reference spectrum");
  const auto indicator = [&](double z) {
    return spectral_indicator(pair, model.q_at(Complex(z, 0)));
  };
  std::vector<SpectralResult> results;
  for (const auto& m : scan_indicator_minima(indicator, z_lo, z_hi, grid, tol)) {
    const ComplexMatrix t = pair.b * model.q_at(Complex(m.z, 0)) - pair.a;
    Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double threshold = 1e-6 * (1.0 + sv(0));
    if (sv(sv.size() - 1) > threshold) continue;
    SpectralResult r;
    r.eigenvalue = m.z;
    r.indicator_residual = sv(sv.size() - 1);
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) <= 10 * threshold) r.kernel_vectors.push_back(svd.matrixV().col(i));
    results.push_back(std::move(r));
  }
  return results;
}

std::vector<ComplexVector> eigenspace(const BoundaryModel& model, const ParamPair& pair, double z) {
  const ComplexMatrix t = pair.b * model.q_at(Complex(z, 0)) - pair.a;
  Eigen::JacobiSVD<ComplexMatrix> svd(t, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double threshold = 1e-6 * (1.0 + sv(0));
  if (sv(sv.size() - 1) > threshold)
    throw std::runtime_error("z is not an eigenvalue: spectral indicator " +
                             std::to_string(sv(sv.size() - 1)) + " exceeds the root threshold");
  std::vector<ComplexVector> kernel;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= 10 * threshold) kernel.push_back(svd.matrixV().col(i));
  return kernel;
}

double q_identity_residual(const BoundaryModel& model, Complex z, Complex zeta) {
  if (!model.has_gamma_gram())
    throw std::logic_error("model does not provide gamma_gram");
  const ComplexMatrix lhs = model.q_at(z) - model.q_at(zeta).adjoint();
  const ComplexMatrix rhs = (z - std::conj(zeta)) * model.gamma_gram(zeta, z);
  return (lhs - rhs).norm();
}

}  // namespace krein
