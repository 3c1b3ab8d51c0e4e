#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hs/explicit_engine.hpp"

namespace hs {

// Named initial data on an n-point grid:
//   fig1a      u0x = cos 2 pi x, rho0 = 3 cos 2 pi x        (c = -1)
//   fig1b      u0x = cos 2 pi x, rho0 = 3 / sqrt 2          (c = -1)
//   fig1c      u0x = cos 2 pi x, rho0 = cos 2 pi x + 2      (c = -1)
//   lightlike  u0x = cos 2 pi x, rho0 = cos 2 pi x          (c = 0)
//   spacelike  u0x = cos 2 pi x, rho0 = 0                   (c = 1/8)
//   stationary u0 = 0, rho0 = 2                             (c = -1)
// Throws std::invalid_argument for unknown names.
InitialData preset(std::string_view name, int n = 256,
                   Kappa kappa = Kappa::kMinus);

const std::vector<std::string>& preset_names();

// Initial data from explicit Fourier coefficients on modes k = 1, 2, ...:
//   u0x  = sum u0x_cos[k-1] cos 2 pi k x + u0x_sin[k-1] sin 2 pi k x
//   rho0 = rho0_mean + sum rho0_cos[k-1] cos 2 pi k x + ...
struct FourierData {
  std::vector<double> u0x_cos, u0x_sin;
  double rho0_mean = 0.0;
  std::vector<double> rho0_cos, rho0_sin;
};

InitialData from_fourier(const FourierData& spec, int n,
                         Kappa kappa = Kappa::kMinus);

}  // namespace hs
