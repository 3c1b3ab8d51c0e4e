#include "hs/pseudosphere.hpp"

#include <cmath>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

namespace {

// Branch coefficients of the geodesic: f = (C + u0x S / 2, rho0 S / 2) with
// C'' = -c C, S'' = -c S, C(0) = 1, S'(0) = 1.
struct Branch {
  double C, S, dC, dS;
};

Branch branch(double c, double t) {
  if (std::abs(c) < kLightlikeTolerance) return {1.0, t, 0.0, 1.0};
  const double w = std::sqrt(std::abs(c));
  if (c > 0) {
    return {std::cos(w * t), std::sin(w * t) / w, -w * std::sin(w * t),
            std::cos(w * t)};
  }
  return {std::cosh(w * t), std::sinh(w * t) / w, w * std::sinh(w * t),
          std::cosh(w * t)};
}

double geodesic_casimir(const InitialData& d) {
  const auto& a = d.u0x();
  const auto& b = d.rho0();
  return 0.25 * integrate(a * a - b * b);
}

}  // namespace

bool SpherePoint::on_sphere(double tol) const {
  return std::abs(pairing(*this, *this) - 1.0) <= tol;
}

bool SpherePoint::in_u() const {
  for (int j = 0; j < f1.size(); ++j) {
    if (!(f1[j] > 0.0) || !(f1[j] * f1[j] - f2[j] * f2[j] > 0.0)) return false;
  }
  return true;
}

double SpherePoint::min_gap() const { return (f1 * f1 - f2 * f2).min(); }

double SpherePoint::boundary_margin() const {
  return (f1 - f2.map([](double v) { return std::abs(v); })).min();
}

double pairing(const SpherePoint& X, const SpherePoint& Y) {
  return integrate(X.f1 * Y.f1 - X.f2 * Y.f2);
}

SpherePoint geodesic(const InitialData& d, double t) {
  const auto b = branch(geodesic_casimir(d), t);
  return {b.C + 0.5 * b.S * d.u0x(), 0.5 * b.S * d.rho0()};
}

SpherePoint geodesic_velocity(const InitialData& d, double t) {
  const auto b = branch(geodesic_casimir(d), t);
  return {b.dC + 0.5 * b.dS * d.u0x(), 0.5 * b.dS * d.rho0()};
}

SpherePoint phi_iso(const GroupElement& g) {
  const auto root = g.phi_x().map([](double v) { return std::sqrt(v); });
  const auto& a = g.alpha();
  return {root * a.map([](double v) { return std::cosh(0.5 * v); }),
          root * a.map([](double v) { return std::sinh(0.5 * v); })};
}

GroupElement phi_iso_inverse(const SpherePoint& f) {
  if (!f.in_u()) {
    throw NotInU("point violates f1 > 0 or f1^2 - f2^2 > 0 at some node");
  }
  auto density = f.f1 * f.f1 - f.f2 * f.f2;
  // 2 artanh(f2/f1) = ln((f1 + f2) / (f1 - f2)).
  auto alpha = ((f.f1 + f.f2) / (f.f1 - f.f2)).map([](double v) {
    return std::log(v);
  });
  return GroupElement::from_density(std::move(density), std::move(alpha));
}

SpherePoint phi_iso_tangent(const GroupElement& g, const GridFunction& U1,
                            const GridFunction& U2) {
  const auto& px = g.phi_x();
  const auto ch = g.alpha().map([](double v) { return std::cosh(0.5 * v); });
  const auto sh = g.alpha().map([](double v) { return std::sinh(0.5 * v); });
  const auto U1x = derivative(U1);
  const auto w = px.map([](double v) { return 0.5 / std::sqrt(v); });
  return {w * (U1x * ch + px * U2 * sh), w * (U1x * sh + px * U2 * ch)};
}

SpherePoint lorentz(const GridFunction& beta, const SpherePoint& f) {
  const auto ch = beta.map([](double v) { return std::cosh(v); });
  const auto sh = beta.map([](double v) { return std::sinh(v); });
  return {ch * f.f1 - sh * f.f2, ch * f.f2 - sh * f.f1};
}

SpherePoint lorentz(double beta, const SpherePoint& f) {
  return lorentz(GridFunction::constant(f.f1.grid(), beta), f);
}

SpherePoint quotient_representative(const SpherePoint& f) {
  const auto g = phi_iso_inverse(f);
  // Lambda_b shifts alpha by -2b.
  const double shift = integrate(g.alpha() * g.phi_x());
  return lorentz(0.5 * shift, f);
}

double boundary_hit_time(const InitialData& d, BoundaryScan scan) {
  if (scan.step <= 0.0 || scan.horizon <= 0.0) {
    throw std::invalid_argument("boundary scan needs positive step and horizon");
  }
  auto gap = [&](double t) { return geodesic(d, t).boundary_margin(); };
  double lo = 0.0;
  if (gap(lo) <= 0.0) return 0.0;
  const int steps = static_cast<int>(std::ceil(scan.horizon / scan.step));
  for (int i = 1; i <= steps; ++i) {
    const double hi = std::min(scan.horizon, i * scan.step);
    if (gap(hi) <= 0.0) {
      double a = lo, b = hi;
      for (int it = 0; it < 200 && b - a > 1e-15; ++it) {
        const double mid = 0.5 * (a + b);
        if (gap(mid) > 0.0) a = mid; else b = mid;
      }
      return 0.5 * (a + b);
    }
    lo = hi;
  }
  return kInfinity;
}

}  // namespace hs
