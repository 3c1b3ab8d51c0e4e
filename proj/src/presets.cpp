#include "hs/presets.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction fourier_series(const Grid& grid, double mean,
                            const std::vector<double>& cos_coeffs,
                            const std::vector<double>& sin_coeffs) {
  const int max_mode =
      static_cast<int>(std::max(cos_coeffs.size(), sin_coeffs.size()));
  if (2 * max_mode >= grid.size()) {
    throw std::invalid_argument("Fourier data exceed the grid's Nyquist mode");
  }
  return GridFunction::sample(grid, [&](double x) {
    double s = mean;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
      s += cos_coeffs[k] * std::cos(kTwoPi * (k + 1) * x);
    }
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) {
      s += sin_coeffs[k] * std::sin(kTwoPi * (k + 1) * x);
    }
    return s;
  });
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{
      "fig1a", "fig1b", "fig1c", "lightlike", "spacelike", "stationary"};
  return names;
}

InitialData preset(std::string_view name, int n, Kappa kappa) {
  const Grid grid(n);
  FourierData f;
  if (name == "fig1a") {
    f = {{1.0}, {}, 0.0, {3.0}, {}};
  } else if (name == "fig1b") {
    f = {{1.0}, {}, 3.0 / std::numbers::sqrt2, {}, {}};
  } else if (name == "fig1c") {
    // rho0 - u0x = 2 must hold exactly in floating point: the weak flow
    // multiplies 1 + (u0x - rho0) / 2 by e^t, which would turn its rounding
    // into an O(eps e^{2t}) drift of the conserved energy.
    const auto c = fourier_series(grid, 0.0, {1.0}, {});
    auto rho0 = c + 2.0;
    auto u0x = rho0 - 2.0;  // exact (Sterbenz)
    return InitialData::from_slope(std::move(u0x), std::move(rho0), kappa);
  } else if (name == "lightlike") {
    f = {{1.0}, {}, 0.0, {1.0}, {}};
  } else if (name == "spacelike") {
    f = {{1.0}, {}, 0.0, {}, {}};
  } else if (name == "stationary") {
    f = {{}, {}, 2.0, {}, {}};
  } else {
    throw std::invalid_argument("unknown preset `" + std::string(name) + "`");
  }
  return from_fourier(f, grid.size(), kappa);
}

InitialData from_fourier(const FourierData& spec, int n, Kappa kappa) {
  const Grid grid(n);
  auto u0x = fourier_series(grid, 0.0, spec.u0x_cos, spec.u0x_sin);
  auto rho0 =
      fourier_series(grid, spec.rho0_mean, spec.rho0_cos, spec.rho0_sin);
  return InitialData::from_slope(std::move(u0x), std::move(rho0), kappa);
}

}  // namespace hs
