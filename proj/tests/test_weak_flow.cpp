#include <gtest/gtest.h>

#include <cmath>

#include "hs/errors.hpp"
#include "hs/presets.hpp"
#include "hs/weak_flow.hpp"

namespace {

using hs::GridFunction;

TEST(Admissibility, Presets) {
  auto c = hs::admissibility(hs::preset("fig1c"));
  EXPECT_TRUE(c.condition_A);
  EXPECT_TRUE(c.condition_B);
  auto a = hs::admissibility(hs::preset("fig1a"));
  EXPECT_TRUE(a.condition_A);
  EXPECT_FALSE(a.condition_B);
  EXPECT_FALSE(a.violating_nodes.empty());
  auto s = hs::admissibility(hs::preset("stationary"));
  EXPECT_NEAR(s.c_value, -1.0, 1e-15);
  EXPECT_TRUE(s.admissible());
  EXPECT_FALSE(hs::admissibility(hs::preset("lightlike")).condition_A);
}

TEST(WeakState, InitialTime) {
  auto d = hs::preset("fig1c");
  auto s = hs::weak_state(d, 0.0);
  EXPECT_LT(hs::sup_norm(s.phi - GridFunction::identity(d.grid())), 1e-14);
  EXPECT_LT(hs::sup_norm(s.alpha), 1e-15);
  EXPECT_LT(hs::sup_norm(s.phi_t - d.u0()), 1e-14);
  EXPECT_LT(hs::sup_norm(s.alpha_t - d.rho0()), 1e-14);
}

TEST(WeakState, InvariantsPastClassicalBreaking) {
  auto d = hs::preset("fig1c");
  const double t = std::log(3.0);
  auto s = hs::weak_state(d, t);
  EXPECT_NEAR(s.phi[0], 0.0, 1e-15);
  EXPECT_NEAR(hs::integrate(s.phi_x), 1.0, 1e-9);
  const double bound = std::pow(std::cosh(t) - std::sinh(t), 2);
  EXPECT_GE(s.phi_x.min(), bound - 1e-9);
  for (int j = 1; j < s.phi.size(); ++j) EXPECT_GE(s.phi[j] - s.phi[j - 1], -1e-12);
  EXPECT_LT(hs::sup_norm(s.alpha_t * s.phi_x - d.rho0()), 1e-9);
}

TEST(WeakState, StationaryData) {
  auto d = hs::preset("stationary");
  for (double t : {0.5, 3.0}) {
    auto s = hs::weak_state(d, t);
    EXPECT_LT(hs::sup_norm(s.phi - GridFunction::identity(d.grid())), 1e-12);
    EXPECT_LT(hs::sup_norm(s.alpha_t - 2.0), 1e-12);
  }
}

TEST(WeakState, RejectsInadmissibleData) {
  EXPECT_THROW(hs::weak_state(hs::preset("fig1a"), 0.1), hs::NotAdmissible);
  EXPECT_THROW(hs::weak_solution(hs::preset("lightlike"), 0.1), hs::NotAdmissible);
}

TEST(Energy, ConstantMinusFour) {
  for (const char* name : {"fig1c", "stationary"}) {
    auto d = hs::preset(name);
    for (double t : {0.0, 1.0, 5.0}) {
      EXPECT_NEAR(hs::energy(hs::weak_state(d, t)), -4.0, 1e-8) << name << " t=" << t;
    }
    const double e0 = hs::integrate(d.u0x() * d.u0x() - d.rho0() * d.rho0());
    EXPECT_NEAR(e0, -4.0, 1e-12);
  }
}

TEST(GeodesicResidual, ClosedFormAndDifferences) {
  auto c = hs::preset("fig1c");
  EXPECT_LT(hs::geodesic_residual(c, 0.5, hs::Differencing::kClosedForm), 1e-10);
  EXPECT_LT(hs::geodesic_residual(c, 0.5), 1e-6);
  EXPECT_LT(hs::geodesic_residual(c, 0.0, hs::Differencing::kClosedForm), 1e-8);
  auto s = hs::preset("stationary");
  for (double t : {0.3, 4.0}) {
    EXPECT_LT(hs::geodesic_residual(s, t, hs::Differencing::kClosedForm), 1e-8);
  }
}

TEST(WeakSolution, MatchesClassicalBeforeBreaking) {
  auto d = hs::preset("fig1c");
  auto nd = hs::normalize(d);
  for (double t : {0.2, 0.5}) {
    auto w = hs::weak_solution(d, t);
    auto e = hs::eulerian_solution(nd, t);
    EXPECT_LT(hs::sup_norm(w.u - e.u), 1e-8);
    EXPECT_LT(hs::sup_norm(w.rho - e.rho), 1e-8);
  }
}

TEST(WeakSolution, ConservedQuantity) {
  auto d = hs::preset("fig1c");
  for (double t : {0.5, 2.0, 5.0}) {
    auto w = hs::weak_solution(d, t);
    auto ux = hs::derivative(w.u);
    EXPECT_NEAR(hs::integrate(ux * ux - w.rho * w.rho), -4.0, 1e-6) << "t=" << t;
  }
}

TEST(WeakSolution, StationaryData) {
  auto d = hs::preset("stationary");
  auto w = hs::weak_solution(d, 2.5);
  EXPECT_LT(hs::sup_norm(w.u), 1e-12);
  EXPECT_LT(hs::sup_norm(w.rho - 2.0), 1e-12);
  auto r = hs::weak_form_residual(d, 1.0);
  EXPECT_LT(r.momentum, 1e-8);
  EXPECT_LT(r.density, 1e-8);
}

TEST(WeakSolution, ResidualSmallPastBreaking) {
  auto d = hs::preset("fig1c");
  for (double t : {0.5, 2.0}) {
    auto r = hs::weak_form_residual(d, t);
    EXPECT_LT(r.momentum, 1e-5) << "t=" << t;
    EXPECT_LT(r.density, 1e-5) << "t=" << t;
  }
}

TEST(WeakFlow, NotTimePeriodic) {
  auto d = hs::preset("fig1c");
  auto s = hs::weak_state(d, 2.0 * M_PI);
  EXPECT_GT(hs::sup_norm(s.phi - GridFunction::identity(d.grid())), 0.05);
}

TEST(Snapshot, Behaviour) {
  auto a = hs::preset("fig1a");
  EXPECT_LT(hs::sup_norm(hs::lagrangian_snapshot(a, 0.0) - a.u0x()), 1e-14);
  const double t_star = 0.5 * std::log(3.0);
  EXPECT_LT(hs::lagrangian_snapshot(a, t_star - 1e-4).min(), -1e3);
  EXPECT_THROW(hs::lagrangian_snapshot(a, t_star + 0.01), hs::BlowupReached);
  auto c = hs::preset("fig1c");
  for (double t = 0.0; t <= 10.0; t += 0.5) {
    EXPECT_LT(hs::sup_norm(hs::lagrangian_snapshot(c, t)), 10.0);
  }
}

}  // namespace
