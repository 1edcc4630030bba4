#include "krein/robin.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "krein/krein.hpp"

namespace krein {

namespace {

bool power_of_two(int m) { return m >= 2 && (m & (m - 1)) == 0; }

}  // namespace

void RobinProblem::validate() const {
  if (!(period > 0)) throw std::invalid_argument("period must be positive");
  if (a_samples.size() != b_samples.size())
    throw std::invalid_argument("a and b sample vectors differ in length");
  if (!power_of_two(grid_size()))
    throw std::invalid_argument("grid_size must be a power of two (>= 2)");
  for (int i = 0; i < grid_size(); ++i) {
    if (!std::isfinite(a_samples(i)) || !std::isfinite(b_samples(i)))
      throw std::invalid_argument("coefficient samples must be finite");
    if (std::abs(a_samples(i)) + std::abs(b_samples(i)) == 0.0)
      throw std::invalid_argument("|a| + |b| vanishes at sample " + std::to_string(i));
  }
}

RobinProblem RobinProblem::constant(double period, int grid_size, double a, double b) {
  RobinProblem p;
  p.period = period;
  p.a_samples = RealVector::Constant(grid_size, a);
  p.b_samples = RealVector::Constant(grid_size, b);
  p.validate();
  return p;
}

double lambda_multiplier(double z, double k) {
  if (!(z < 0)) throw std::invalid_argument("multiplier requires z < 0");
  return std::sqrt(k * k - z);
}

RealMatrix robin_operator(const RobinProblem& problem, double z) {
  problem.validate();
  if (!(z < 0)) throw std::invalid_argument("boundary operator requires z < 0");
  const int m = problem.grid_size();

  // The multiplier is even in the frequency index, so F^{-1} diag(lambda) F
  // is a real symmetric circulant; build its kernel by a direct inverse DFT.
  std::vector<double> lambda(m);
  for (int idx = 0; idx < m; ++idx) {
    const int j = idx < m / 2 ? idx : idx - m;
    lambda[idx] = lambda_multiplier(z, 2.0 * M_PI * j / problem.period);
  }
  std::vector<double> cos_table(m);
  for (int q = 0; q < m; ++q) cos_table[q] = std::cos(2.0 * M_PI * q / m);
  std::vector<double> kernel(m, 0.0);
  for (int t = 0; t < m; ++t) {
    double acc = 0;
    for (int idx = 0; idx < m; ++idx) acc += lambda[idx] * cos_table[(idx * t) % m];
    kernel[t] = acc / m;
  }

  RealMatrix op(m, m);
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      op(r, s) = (r == s ? problem.a_samples(r) : 0.0) -
                 problem.b_samples(r) * kernel[(r - s + m) % m];
  return op;
}

ComplexMatrix boundary_operator(const RobinProblem& problem, double z) {
  return robin_operator(problem, z).cast<Complex>();
}

double robin_spectral_indicator(const RobinProblem& problem, double z) {
  const RealMatrix op = robin_operator(problem, z);
  Eigen::BDCSVD<RealMatrix> svd(op);
  return svd.singularValues()(op.rows() - 1);
}

std::vector<RobinRoot> robin_bound_states(const RobinProblem& problem, double z_lo, double z_hi,
                                          int grid, double tol) {
  if (!(z_hi < 0)) throw std::invalid_argument("bound-state scan requires z_hi < 0");
  const auto indicator = [&](double z) { return robin_spectral_indicator(problem, z); };
  std::vector<RobinRoot> roots;
  for (const auto& m : scan_indicator_minima(indicator, z_lo, z_hi, grid, tol)) {
    const RealMatrix op = robin_operator(problem, m.z);
    Eigen::BDCSVD<RealMatrix> svd(op, Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double threshold = 1e-6 * (1.0 + sv(0));
    if (sv(sv.size() - 1) > threshold) continue;
    RobinRoot root;
    root.z = m.z;
    root.indicator = sv(sv.size() - 1);
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) <= 10 * threshold) root.kernel_vectors.push_back(svd.matrixV().col(i));
    roots.push_back(std::move(root));
  }
  return roots;
}

}  // namespace krein
