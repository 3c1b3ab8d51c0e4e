#include "hs/explicit_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hs/errors.hpp"
#include "hs/flow_inverse.hpp"

namespace hs {

namespace {

void require_kappa_minus(const InitialData& d, const char* what) {
  if (d.kappa() != Kappa::kMinus) {
    throw std::invalid_argument(std::string(what) +
                                " is implemented for kappa = -1 only");
  }
}

// (C, S) pair solving y'' = -c y with C(0) = 1, S(0) = 0, S'(0) = 1.
struct Trig {
  double C, S;
};

Trig fundamental(int c, double t) {
  switch (c) {
    case 1: return {std::cos(t), std::sin(t)};
    case 0: return {1.0, t};
    case -1: return {std::cosh(t), std::sinh(t)};
  }
  throw std::invalid_argument("normalized Casimir must be 1, 0 or -1");
}

}  // namespace

InitialData::InitialData(GridFunction u0, GridFunction u0x, GridFunction rho0,
                         Kappa kappa)
    : u0_(std::move(u0)),
      u0x_(std::move(u0x)),
      rho0_(std::move(rho0)),
      kappa_(kappa) {
  if (!(u0_.grid() == rho0_.grid())) {
    throw GridMismatch("u0 and rho0 live on different grids");
  }
}

InitialData InitialData::from_slope(GridFunction u0x, GridFunction rho0,
                                    Kappa kappa) {
  const double mean = integrate(u0x);
  if (std::abs(mean) > 1e-10) {
    std::ostringstream msg;
    msg << "u0x must have zero mean for u0 to be periodic, mean = " << mean;
    throw NonZeroMean(msg.str());
  }
  auto u0 = antiderivative_from_zero(u0x - mean);
  return InitialData(std::move(u0), std::move(u0x), std::move(rho0), kappa);
}

InitialData InitialData::from_velocity(GridFunction u0, GridFunction rho0,
                                       Kappa kappa) {
  if (std::abs(u0[0]) > 1e-12) {
    throw std::invalid_argument("initial velocity must satisfy u0(0) = 0");
  }
  auto u0x = derivative(u0);
  return InitialData(std::move(u0), std::move(u0x), std::move(rho0), kappa);
}

InitialData InitialData::scaled(double s) const {
  return InitialData(u0_ * s, u0x_ * s, rho0_ * s, kappa_);
}

const char* to_string(CausalType type) {
  switch (type) {
    case CausalType::kSpacelike: return "spacelike";
    case CausalType::kLightlike: return "lightlike";
    case CausalType::kTimelike: return "timelike";
  }
  return "unknown";
}

int Classification::unit_c() const {
  switch (type) {
    case CausalType::kSpacelike: return 1;
    case CausalType::kLightlike: return 0;
    case CausalType::kTimelike: return -1;
  }
  return 0;
}

double casimir_c(const InitialData& d) {
  const auto& ux = d.u0x();
  const auto& r = d.rho0();
  return 0.25 * integrate(ux * ux + value(d.kappa()) * (r * r));
}

NormalizedData normalize(const InitialData& d) {
  const double c = casimir_c(d);
  if (std::abs(c) < kLightlikeTolerance) {
    return {d, {c, CausalType::kLightlike, 1.0}};
  }
  const double s = 1.0 / std::sqrt(std::abs(c));
  const auto type = c > 0 ? CausalType::kSpacelike : CausalType::kTimelike;
  return {d.scaled(s), {c, type, s}};
}

double riccati(double z0, int c, double t) {
  double num = 0.0, den = 0.0;
  switch (c) {
    case 1: {
      // (2 z0 - 4 tan t) / (z0 tan t + 2), multiplied through by cos t so
      // that t = pi/2 is not a spurious singularity.
      num = 2.0 * z0 * std::cos(t) - 4.0 * std::sin(t);
      den = z0 * std::sin(t) + 2.0 * std::cos(t);
      break;
    }
    case 0: {
      num = 2.0 * z0;
      den = 2.0 + z0 * t;
      break;
    }
    case -1: {
      // 2 (z0 - 2 + e^{2t}(2 + z0)) / (2 - z0 + e^{2t}(2 + z0)), scaled by
      // e^{-2t} to avoid overflow.
      const double decay = std::exp(-2.0 * t);
      num = 2.0 * ((z0 - 2.0) * decay + (2.0 + z0));
      den = (2.0 - z0) * decay + (2.0 + z0);
      break;
    }
    default:
      throw std::invalid_argument("riccati: c must be 1, 0 or -1");
  }
  if (std::abs(den) < 1e-12) {
    std::ostringstream msg;
    msg << "riccati characteristic z0 = " << z0 << " is singular at t = " << t;
    throw Singular(msg.str());
  }
  return num / den;
}

double characteristic_factor(double z0, int c, double t) {
  const auto [C, S] = fundamental(c, t);
  return C + 0.5 * z0 * S;
}

double characteristic_zero(double z0, int c) {
  switch (c) {
    case -1:
      // coth t = -z0/2 has a positive root only when -z0/2 > 1.
      if (z0 < -2.0 - 1e-12) return std::atanh(-2.0 / z0);
      return kInfinity;
    case 0:
      if (z0 < 0.0) return -2.0 / z0;
      return kInfinity;
    case 1:
      return 0.5 * std::numbers::pi + std::atan(0.5 * z0);
  }
  throw std::invalid_argument("characteristic_zero: c must be 1, 0 or -1");
}

double blowup_time(const NormalizedData& d) {
  require_kappa_minus(d.data, "blowup_time");
  const int c = d.cls.unit_c();
  const auto& a = d.data.u0x();
  const auto& b = d.data.rho0();
  double t = kInfinity;
  for (int j = 0; j < a.size(); ++j) {
    t = std::min(t, characteristic_zero(a[j] + b[j], c));
    t = std::min(t, characteristic_zero(a[j] - b[j], c));
  }
  return t;
}

double blowup_time_formula_literal(const NormalizedData& d) {
  require_kappa_minus(d.data, "blowup_time_formula_literal");
  const auto& a = d.data.u0x();
  const auto& b = d.data.rho0();
  const int n = a.size();
  auto arccoth = [](double y) {
    if (!std::isfinite(y)) return kInfinity;
    if (y <= 1.0) return kInfinity;
    return std::atanh(1.0 / y);
  };
  switch (d.cls.unit_c()) {
    case -1: {
      double inf_a = kInfinity, inf_b = kInfinity;
      for (int j = 0; j < n; ++j) {
        if (b[j] - a[j] > 2.0) inf_a = std::min(inf_a, 0.5 * (b[j] - a[j]));
        if (a[j] + b[j] < -2.0) inf_b = std::min(inf_b, -0.5 * (a[j] + b[j]));
      }
      return std::min(arccoth(inf_a), arccoth(inf_b));
    }
    case 0: {
      double t = kInfinity;
      for (int j = 0; j < n; ++j) {
        if (a[j] < b[j]) t = std::min(t, -2.0 / (a[j] - b[j]));
        if (a[j] + b[j] < 0.0) t = std::min(t, -2.0 / (a[j] + b[j]));
      }
      return t;
    }
    default: {
      double m_minus = kInfinity, m_plus = kInfinity;
      for (int j = 0; j < n; ++j) {
        m_minus = std::min(m_minus, 0.5 * (a[j] - b[j]));
        m_plus = std::min(m_plus, 0.5 * (a[j] + b[j]));
      }
      return 0.5 * std::numbers::pi +
             std::min(std::atan(m_minus), std::atan(m_plus));
    }
  }
}

bool is_global(const NormalizedData& d) {
  if (d.cls.unit_c() != -1) return false;
  const auto& a = d.data.u0x();
  const auto& b = d.data.rho0();
  for (int j = 0; j < a.size(); ++j) {
    if (std::abs(b[j]) > a[j] + 2.0 + 1e-12) return false;
  }
  return true;
}

LagrangianFields lagrangian_fields(const NormalizedData& d, double t) {
  require_kappa_minus(d.data, "lagrangian_fields");
  if (t < 0.0) throw std::invalid_argument("lagrangian_fields needs t >= 0");
  const double t_star = blowup_time(d);
  if (t >= t_star) {
    std::ostringstream msg;
    msg << "t = " << t << " is at or past the breaking time " << t_star;
    throw BlowupReached(msg.str());
  }
  const int c = d.cls.unit_c();
  const auto [C, S] = fundamental(c, t);
  const auto& a = d.data.u0x();
  const auto& b = d.data.rho0();
  const Grid grid = a.grid();
  const int n = grid.size();

  std::vector<double> U(n), varrho(n), phi_x(n);
  for (int j = 0; j < n; ++j) {
    const double ux = a[j], r = b[j];
    double num = 0.0, den = 0.0;
    switch (c) {
      case -1:
        num = 4.0 * std::cosh(2 * t) * ux +
              std::sinh(2 * t) * (ux * ux - r * r + 4.0);
        den = std::pow(2.0 * C + ux * S, 2) - r * r * S * S;
        break;
      case 0:
        num = 4.0 * ux + 2.0 * (ux * ux - r * r) * t;
        den = std::pow(2.0 + ux * t, 2) - r * r * t * t;
        break;
      case 1:
        num = 4.0 * std::cos(2 * t) * ux +
              std::sin(2 * t) * (ux * ux - r * r - 4.0);
        den = std::pow(ux * S + 2.0 * C, 2) - r * r * S * S;
        break;
    }
    U[j] = num / den;
    varrho[j] = 4.0 * r / den;
    phi_x[j] = std::pow(C + 0.5 * ux * S, 2) - 0.25 * r * r * S * S;
  }
  LagrangianFields lf{t, GridFunction(grid, std::move(U)),
                      GridFunction(grid, std::move(varrho)),
                      GridFunction::zeros(grid),
                      GridFunction(grid, std::move(phi_x))};
  lf.phi = antiderivative_from_zero(lf.phi_x);
  return lf;
}

GridFunction flow_velocity(const LagrangianFields& lf) {
  return antiderivative_from_zero(lf.U * lf.phi_x);
}

EulerianFields eulerian_solution(const NormalizedData& d, double t) {
  const auto lf = lagrangian_fields(d, t);
  if (lf.phi_x.min() < 1e-8) {
    std::ostringstream msg;
    msg << "flow map nearly degenerate at t = " << t
        << " (min phi_x = " << lf.phi_x.min() << ")";
    throw NotInvertible(msg.str());
  }
  const FlowInverse inverse(lf.phi_x);
  return {inverse.pull(flow_velocity(lf)), inverse.pull(lf.varrho)};
}

}  // namespace hs
