#include "krein/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace krein {

namespace {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15).
constexpr double kron_nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691, 0.7415311855993944,
    0.5860872354676911, 0.4058451513773972, 0.2077849550078985, 0.0};
constexpr double kron_weights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502, 0.1406532597155259,
    0.1690047266392679, 0.1903505780647854, 0.2044329400752989, 0.2094821410847278};
constexpr double gauss_weights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189, 0.4179591836734694};

struct Panel {
  double lo = 0, hi = 0;
  Complex value;
  double error = 0;
};

Panel gk15(const std::function<Complex(double)>& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Complex kron = kron_weights[7] * f(center);
  Complex gauss = gauss_weights[3] * f(center);
  for (int i = 0; i < 7; ++i) {
    const Complex fa = f(center - half * kron_nodes[i]);
    const Complex fb = f(center + half * kron_nodes[i]);
    kron += kron_weights[i] * (fa + fb);
    if (i % 2 == 1) gauss += gauss_weights[i / 2] * (fa + fb);
  }
  Panel p;
  p.lo = lo;
  p.hi = hi;
  p.value = half * kron;
  p.error = std::abs(half * (kron - gauss));
  return p;
}

}  // namespace

Complex integrate(const std::function<Complex(double)>& f, double lo, double hi,
                  const std::vector<double>& breakpoints, const QuadratureOptions& opts) {
  if (!(lo < hi)) throw std::invalid_argument("integration interval is empty");

  std::vector<double> edges{lo};
  for (double b : breakpoints)
    if (b > lo && b < hi) edges.push_back(b);
  edges.push_back(hi);
  std::sort(edges.begin(), edges.end());

  auto worse = [](const Panel& a, const Panel& b) { return a.error < b.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> panels(worse);

  Complex total = 0;
  double total_error = 0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gk15(f, edges[i], edges[i + 1]);
    total += p.value;
    total_error += p.error;
    panels.push(p);
  }

  int used = static_cast<int>(panels.size());
  while (total_error > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (used >= opts.max_intervals)
      throw std::runtime_error("adaptive quadrature did not converge within the interval budget");
    Panel p = panels.top();
    panels.pop();
    const double mid = 0.5 * (p.lo + p.hi);
    if (mid <= p.lo || mid >= p.hi)
      throw std::runtime_error("adaptive quadrature stalled on a degenerate interval");
    Panel left = gk15(f, p.lo, mid);
    Panel right = gk15(f, mid, p.hi);
    total += left.value + right.value - p.value;
    total_error += left.error + right.error - p.error;
    panels.push(left);
    panels.push(right);
    ++used;
  }
  return total;
}

}  // namespace krein
