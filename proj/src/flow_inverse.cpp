#include "hs/flow_inverse.hpp"

#include <algorithm>
#include <cmath>

#include "hs/errors.hpp"

namespace hs {

namespace {

double solve_preimage(const TrigInterpolant& displacement,
                      const TrigInterpolant& density, double mean, double y,
                      double lo, double hi) {
  auto phi = [&](double x) { return mean * x + displacement(x); };
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double r = phi(x) - y;
    if (std::abs(r) < 1e-15) break;
    if (r > 0) hi = x; else lo = x;
    const double slope = density(x);
    double next = x - r / slope;
    if (!(slope > 0.0) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - x) < 1e-16) { x = next; break; }
    x = next;
  }
  return x;
}

}  // namespace

FlowInverse::FlowInverse(const GridFunction& phi_x, double degenerate_below)
    : grid_(phi_x.grid()), degenerate_(phi_x.min() < degenerate_below) {
  if (phi_x.min() < -1e-12) {
    throw NotInvertible("flow map is decreasing somewhere");
  }
  const int n = grid_.size();
  const double mean = integrate(phi_x);
  const auto phi = antiderivative_from_zero(phi_x);
  phi_nodes_.assign(phi.values().begin(), phi.values().end());
  phi_nodes_.push_back(mean);
  if (degenerate_) return;

  const auto displacement = phi - mean * GridFunction::identity(grid_);
  const TrigInterpolant disp(displacement);
  const TrigInterpolant dens(phi_x);
  xi_.resize(n);
  int i = 0;
  for (int j = 0; j < n; ++j) {
    const double y = grid_.node(j) * mean;
    while (i + 1 < n && phi_nodes_[i + 1] <= y) ++i;
    if (phi_nodes_[i] == y) { xi_[j] = grid_.node(i); continue; }
    xi_[j] = solve_preimage(disp, dens, mean, y, grid_.node(i),
                            grid_.node(i + 1));
  }
}

GridFunction FlowInverse::pull(const GridFunction& lagrangian) const {
  const int n = grid_.size();
  std::vector<double> out(n);
  if (!degenerate_) {
    const TrigInterpolant f(lagrangian);
    for (int j = 0; j < n; ++j) out[j] = f(xi_[j]);
    return GridFunction(grid_, std::move(out));
  }
  // Flat stretches of phi collapse to one Eulerian point: keep the first node
  // of each run of equal phi values.
  std::vector<double> xs, ys;
  for (int j = 0; j <= n; ++j) {
    const double v = lagrangian[j % n];
    if (!xs.empty() && phi_nodes_[j] - xs.back() < 1e-14) continue;
    xs.push_back(phi_nodes_[j]);
    ys.push_back(v);
  }
  const MonotoneCubic interp(std::move(xs), std::move(ys));
  for (int j = 0; j < n; ++j) out[j] = interp(grid_.node(j) * phi_nodes_[n]);
  return GridFunction(grid_, std::move(out));
}

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)), slopes_(xs_.size(), 0.0) {
  const std::size_t m = xs_.size();
  if (m < 2 || ys_.size() != m) {
    throw std::invalid_argument("monotone cubic needs at least two points");
  }
  std::vector<double> h(m - 1), delta(m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    h[i] = xs_[i + 1] - xs_[i];
    delta[i] = (ys_[i + 1] - ys_[i]) / h[i];
  }
  slopes_[0] = delta[0];
  slopes_[m - 1] = delta[m - 2];
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      slopes_[i] = 0.0;
    } else {
      // Weighted harmonic mean (Fritsch-Butland form of Fritsch-Carlson).
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      slopes_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
}

double MonotoneCubic::operator()(double x) const {
  if (x <= xs_.front()) return ys_.front();
  if (x >= xs_.back()) return ys_.back();
  const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - xs_.begin()) - 1;
  const double h = xs_[i + 1] - xs_[i];
  const double s = (x - xs_[i]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return h00 * ys_[i] + h10 * h * slopes_[i] + h01 * ys_[i + 1] +
         h11 * h * slopes_[i + 1];
}

}  // namespace hs
