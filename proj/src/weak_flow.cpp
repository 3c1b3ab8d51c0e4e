#include "hs/weak_flow.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hs/errors.hpp"
#include "hs/flow_inverse.hpp"

namespace hs {

namespace {

constexpr double kDegenerateDensity = 1e-14;

void require_admissible(const InitialData& d) {
  const auto r = admissibility(d);
  if (r.admissible()) return;
  std::ostringstream msg;
  msg << "data not admissible for the weak flow: c = " << r.c_value;
  if (!r.condition_A) msg << " (needs c = -1)";
  if (!r.condition_B) {
    msg << ", |rho0| <= u0x + 2 fails at " << r.violating_nodes.size()
        << " node(s)";
  }
  throw NotAdmissible(msg.str());
}

// Closed forms at any real t; callers validate.
WeakState state_at(const InitialData& d, double t) {
  const double ep = 0.5 * std::exp(t), em = 0.5 * std::exp(-t);
  const auto& a = d.u0x();
  const auto& r = d.rho0();
  // 1 + s and 1 - s with s = (a +- r) / 2, formed before scaling by e^t.
  const auto up = 1.0 + 0.5 * (a + r), dp = 1.0 - 0.5 * (a + r);
  const auto um = 1.0 + 0.5 * (a - r), dm = 1.0 - 0.5 * (a - r);
  auto wp = ep * up + em * dp, wm = ep * um + em * dm;
  auto wpt = ep * up - em * dp, wmt = ep * um - em * dm;
  auto f1 = 0.5 * (wp + wm);
  auto f2 = 0.5 * (wp - wm);
  auto phi_x = wp * wm;
  auto phi_tx = wpt * wm + wp * wmt;
  // ln((f1 + f2) / (f1 - f2)) is 2 artanh(f2 / f1).
  auto alpha = (wp / wm).map([](double v) { return std::log(v); });
  // alpha_t = 2 (f1 f2t - f2 f1t) / phi_x = rho0 / phi_x.
  auto alpha_t = r / phi_x;
  auto phi = antiderivative_from_zero(phi_x);
  auto phi_t = antiderivative_from_zero(phi_tx);
  return {t,
          std::move(f1),
          std::move(f2),
          std::move(wp),
          std::move(wm),
          std::move(wpt),
          std::move(wmt),
          std::move(phi),
          std::move(phi_x),
          std::move(alpha),
          std::move(phi_t),
          std::move(phi_tx),
          std::move(alpha_t)};
}

GroupElement base_of(const WeakState& s) {
  return GroupElement::from_density(s.phi_x, s.alpha);
}

EulerianFields eulerian_at(const InitialData& d, double t) {
  const auto s = state_at(d, t);
  const FlowInverse inverse(s.phi_x);
  return {inverse.pull(s.phi_t), inverse.pull(s.alpha_t)};
}

}  // namespace

AdmissibilityReport admissibility(const InitialData& d) {
  AdmissibilityReport r;
  r.c_value = casimir_c(d);
  r.condition_A = d.kappa() == Kappa::kMinus && std::abs(r.c_value + 1.0) < 1e-9;
  const auto& a = d.u0x();
  const auto& b = d.rho0();
  for (int j = 0; j < a.size(); ++j) {
    if (std::abs(b[j]) > a[j] + 2.0 + 1e-12) r.violating_nodes.push_back(j);
  }
  r.condition_B = r.violating_nodes.empty();
  return r;
}

WeakState weak_state(const InitialData& d, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("weak_state needs t >= 0");
  require_admissible(d);
  return state_at(d, t);
}

double energy(const WeakState& s) {
  const auto& px = s.phi_x;
  std::vector<double> e(px.size());
  for (int j = 0; j < px.size(); ++j) {
    if (px[j] < kDegenerateDensity) continue;
    e[j] = 4.0 * s.w_plus_t[j] * s.w_minus_t[j];
  }
  return integrate(GridFunction(px.grid(), std::move(e)));
}

WeakAcceleration weak_acceleration(const InitialData& d, double t) {
  require_admissible(d);
  const double ch = std::cosh(t), sh = std::sinh(t);
  const auto& a = d.u0x();
  const auto& r = d.rho0();
  const auto f1 = ch + 0.5 * sh * a;
  const auto f2 = 0.5 * sh * r;
  const auto f1t = sh + 0.5 * ch * a;
  const auto f2t = 0.5 * ch * r;
  const auto phi_x = f1 * f1 - f2 * f2;
  const auto phi_tx = 2.0 * (f1 * f1t - f2 * f2t);
  return {2.0 * antiderivative_from_zero(f1t * f1t - f2t * f2t + phi_x),
          -1.0 * r * phi_tx / (phi_x * phi_x)};
}

double geodesic_residual(const InitialData& d, double t, Differencing mode,
                         double dt) {
  const auto s = weak_state(d, t);
  GridFunction phi_tt = GridFunction::zeros(d.grid());
  GridFunction alpha_tt = phi_tt;
  if (mode == Differencing::kClosedForm) {
    auto acc = weak_acceleration(d, t);
    phi_tt = std::move(acc.phi_tt);
    alpha_tt = std::move(acc.alpha_tt);
  } else {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    const auto plus = state_at(d, t + dt);
    const auto minus = state_at(d, t - dt);
    phi_tt = (plus.phi_t - minus.phi_t) / (2.0 * dt);
    alpha_tt = (plus.alpha_t - minus.alpha_t) / (2.0 * dt);
  }
  const auto at = base_of(s);
  const TangentPair vel(s.phi_t, s.alpha_t, at);
  const auto gamma = christoffel(vel, vel, at);
  return std::max(sup_norm(phi_tt - gamma.u1), sup_norm(alpha_tt - gamma.u2));
}

EulerianFields weak_solution(const InitialData& d, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("weak_solution needs t >= 0");
  require_admissible(d);
  return eulerian_at(d, t);
}

WeakResidual weak_form_residual(const InitialData& d, double t, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const auto now = weak_solution(d, t);
  const auto plus = eulerian_at(d, t + dt);
  const auto minus = eulerian_at(d, t - dt);
  const auto u_t = (plus.u - minus.u) / (2.0 * dt);
  const auto rho_t = (plus.rho - minus.rho) / (2.0 * dt);
  const auto& u = now.u;
  const auto& rho = now.rho;
  const auto u_x = derivative(u);
  const auto g = u_x * u_x - rho * rho;
  // int_0^y g - y int g.
  const auto source = 0.5 * antiderivative_from_zero(mean_zero_project(g));
  WeakResidual res;
  res.momentum = l2_norm(u_t + u * u_x - source);
  res.density = l2_norm(rho_t + derivative(u * rho));
  return res;
}

GridFunction lagrangian_snapshot(const InitialData& d, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("snapshot needs t >= 0");
  if (admissibility(d).admissible()) {
    const auto s = state_at(d, t);
    std::vector<double> U(s.phi_x.size());
    for (int j = 0; j < s.phi_x.size(); ++j) {
      U[j] = s.phi_x[j] < kDegenerateDensity ? 0.0 : s.phi_tx[j] / s.phi_x[j];
    }
    return GridFunction(d.grid(), std::move(U));
  }
  const auto nd = normalize(d);
  const double s = nd.cls.scale;
  return lagrangian_fields(nd, t / s).U / s;
}

}  // namespace hs
