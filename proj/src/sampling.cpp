#include "hs/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace hs {

GridFunction random_trig_polynomial(const Grid& grid, int max_mode,
                                    std::mt19937_64& rng, double decay) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> a(max_mode + 1), b(max_mode + 1);
  for (int k = 1; k <= max_mode; ++k) {
    const double w = std::pow(static_cast<double>(k), -decay);
    a[k] = w * normal(rng);
    b[k] = w * normal(rng);
  }
  return GridFunction::sample(grid, [&](double x) {
    double s = 0.0;
    for (int k = 1; k <= max_mode; ++k) {
      const double arg = 2.0 * std::numbers::pi * k * x;
      s += a[k] * std::cos(arg) + b[k] * std::sin(arg);
    }
    return s;
  });
}

}  // namespace hs
