#include "hs/pde_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hs/errors.hpp"

namespace hs {

namespace {

constexpr double kUnstable = 1e6;

GridFunction truncate_two_thirds(const GridFunction& f) {
  const int n = f.size();
  auto c = detail::forward_dft(f.values());
  for (int k = 0; k <= n / 2; ++k) {
    if (3 * k > n) c[k] = 0.0;
  }
  return GridFunction(f.grid(), detail::inverse_dft(c, n));
}

GridFunction product(const GridFunction& a, const GridFunction& b,
                     bool dealias) {
  auto p = a * b;
  return dealias ? truncate_two_thirds(p) : p;
}

FieldPair rk4_step(const FieldPair& s, double h, Kappa kappa, bool dealias) {
  const auto k1 = rhs(s.u, s.rho, kappa, dealias);
  const auto k2 = rhs(s.u + 0.5 * h * k1.u, s.rho + 0.5 * h * k1.rho, kappa,
                      dealias);
  const auto k3 = rhs(s.u + 0.5 * h * k2.u, s.rho + 0.5 * h * k2.rho, kappa,
                      dealias);
  const auto k4 = rhs(s.u + h * k3.u, s.rho + h * k3.rho, kappa, dealias);
  return {s.u + (h / 6.0) * (k1.u + 2.0 * k2.u + 2.0 * k3.u + k4.u),
          s.rho + (h / 6.0) * (k1.rho + 2.0 * k2.rho + 2.0 * k3.rho + k4.rho)};
}

double physical_blowup(const InitialData& d) {
  if (d.kappa() != Kappa::kMinus) return kInfinity;
  const auto nd = normalize(d);
  return nd.cls.scale * blowup_time(nd);
}

}  // namespace

void OracleConfig::validate() const {
  if (!(dt > 0.0) || dt > 0.5 / n) {
    std::ostringstream msg;
    msg << "oracle step dt = " << dt << " must lie in (0, 0.5/n = "
        << 0.5 / n << "]";
    throw std::invalid_argument(msg.str());
  }
  Grid check(n);
  (void)check;
}

FieldPair rhs(const GridFunction& u, const GridFunction& rho, Kappa kappa,
              bool dealias) {
  const auto u_x = derivative(u);
  const auto rho_x = derivative(rho);
  const auto source = product(u_x, u_x, dealias) +
                      value(kappa) * product(rho, rho, dealias);
  auto u_t = -1.0 * product(u, u_x, dealias) -
             0.5 * a_inverse(derivative(source), MeanPolicy::kSubtract);
  auto rho_t = -1.0 * product(u, rho_x, dealias) - product(rho, u_x, dealias);
  return {std::move(u_t), std::move(rho_t)};
}

std::vector<FieldPair> evolve_to(const InitialData& d,
                                 const std::vector<double>& times,
                                 const OracleConfig& cfg) {
  cfg.validate();
  if (d.grid().size() != cfg.n) {
    throw GridMismatch("oracle grid size differs from the data's grid");
  }
  if (!std::is_sorted(times.begin(), times.end()) ||
      (!times.empty() && times.front() < 0.0)) {
    throw std::invalid_argument("oracle times must be ascending and >= 0");
  }
  if (!times.empty()) {
    const double t_star = physical_blowup(d);
    if (!(times.back() < t_star - kOracleMargin)) {
      std::ostringstream msg;
      msg << "oracle end time " << times.back()
          << " is not below the breaking time " << t_star << " minus "
          << kOracleMargin;
      throw BlowupReached(msg.str());
    }
  }
  FieldPair state{d.u0(), d.rho0()};
  std::vector<FieldPair> out;
  double t = 0.0;
  for (double target : times) {
    while (t < target) {
      const double h = std::min(cfg.dt, target - t);
      state = rk4_step(state, h, d.kappa(), cfg.dealias);
      t = (target - t <= cfg.dt) ? target : t + h;
      if (sup_norm(state.u) > kUnstable || sup_norm(state.rho) > kUnstable) {
        std::ostringstream msg;
        msg << "oracle fields exceeded " << kUnstable << " at t = " << t;
        throw StepUnstable(msg.str());
      }
    }
    out.push_back(state);
  }
  return out;
}

FieldPair evolve(const InitialData& d, double t_end, const OracleConfig& cfg) {
  return evolve_to(d, {t_end}, cfg).front();
}

double casimir_of(const FieldPair& f, Kappa kappa) {
  const auto u_x = derivative(f.u);
  return 0.25 * integrate(u_x * u_x + value(kappa) * f.rho * f.rho);
}

double CompareReport::max_l2() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max({m, r.l2_u, r.l2_rho});
  return m;
}

double CompareReport::max_casimir_drift() const {
  double m = 0.0;
  for (const auto& r : rows) m = std::max(m, r.casimir_drift);
  return m;
}

CompareReport compare(const InitialData& d, const std::vector<double>& times,
                      const OracleConfig& cfg) {
  const auto nd = normalize(d);
  CompareReport report;
  report.cls = nd.cls;
  report.blowup_time = blowup_time(nd);
  const auto oracle = evolve_to(nd.data, times, cfg);
  const double c0 = casimir_of({nd.data.u0(), nd.data.rho0()}, d.kappa());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto exact = eulerian_solution(nd, times[i]);
    CompareRow row;
    row.t = times[i];
    row.l2_u = l2_norm(oracle[i].u - exact.u);
    row.l2_rho = l2_norm(oracle[i].rho - exact.rho);
    row.sup_u = sup_norm(oracle[i].u - exact.u);
    row.sup_rho = sup_norm(oracle[i].rho - exact.rho);
    row.casimir_drift = std::abs(casimir_of(oracle[i], d.kappa()) - c0);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hs
