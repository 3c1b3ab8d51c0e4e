#include <gtest/gtest.h>

#include <cmath>

#include "hs/errors.hpp"
#include "hs/pde_oracle.hpp"
#include "hs/presets.hpp"

namespace {

using hs::GridFunction;

TEST(OracleConfig, Validation) {
  hs::OracleConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.dt = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.dt = 1.0 / 256;  // above 0.5 / n
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Rhs, Examples) {
  const hs::Grid g(64);
  auto zero = GridFunction::zeros(g);
  auto s = hs::rhs(zero, GridFunction::constant(g, 2.0), hs::Kappa::kMinus);
  EXPECT_LT(hs::sup_norm(s.u), 1e-13);
  EXPECT_LT(hs::sup_norm(s.rho), 1e-13);
  auto z = hs::rhs(zero, zero, hs::Kappa::kMinus);
  EXPECT_LT(std::max(hs::sup_norm(z.u), hs::sup_norm(z.rho)), 1e-300);

  auto d = hs::preset("spacelike", 64);
  auto r = hs::rhs(d.u0(), zero, hs::Kappa::kMinus, false);
  const auto ux = d.u0x();
  auto scalar = -1.0 * d.u0() * hs::derivative(d.u0()) -
                0.5 * hs::a_inverse(hs::derivative(hs::derivative(d.u0()) *
                                                   hs::derivative(d.u0())),
                                    hs::MeanPolicy::kSubtract);
  EXPECT_LT(hs::sup_norm(r.u - scalar), 1e-12);
  EXPECT_LT(hs::sup_norm(r.rho), 1e-300);
}

TEST(Evolve, AgreesWithClosedFormOnGlobalPreset) {
  auto d = hs::preset("fig1c");
  hs::OracleConfig cfg;
  auto f = hs::evolve(d, 0.3, cfg);
  auto e = hs::eulerian_solution(hs::normalize(d), 0.3);
  EXPECT_LT(hs::l2_norm(f.u - e.u), 1e-6);
  EXPECT_LT(hs::l2_norm(f.rho - e.rho), 1e-6);
}

TEST(Evolve, ConservesCasimirMassAndMean) {
  for (const char* name : {"fig1a", "fig1b", "fig1c", "lightlike"}) {
    auto d = hs::preset(name);
    hs::OracleConfig cfg;
    auto f = hs::evolve(d, 0.3, cfg);
    EXPECT_NEAR(hs::casimir_of(f, d.kappa()), hs::casimir_c(d), 1e-8) << name;
    EXPECT_NEAR(hs::integrate(f.rho), hs::integrate(d.rho0()), 0.3e-8) << name;
  }
}

TEST(Evolve, FourthOrderInTime) {
  auto d = hs::preset("fig1b", 128);
  auto e = hs::eulerian_solution(hs::normalize(d), 0.2);
  auto err = [&](double dt) {
    hs::OracleConfig cfg{128, dt, true};
    auto f = hs::evolve(d, 0.2, cfg);
    return hs::l2_norm(f.u - e.u) + hs::l2_norm(f.rho - e.rho);
  };
  const double coarse = err(1.0 / 256), fine = err(1.0 / 512);
  EXPECT_GT(coarse / fine, 12.0);
  EXPECT_LT(coarse / fine, 20.0);
}

TEST(Evolve, Preconditions) {
  hs::OracleConfig cfg;
  auto a = hs::preset("fig1a");
  EXPECT_THROW(hs::evolve(a, 0.52, cfg), hs::BlowupReached);
  EXPECT_THROW(hs::evolve_to(a, {0.2, 0.1}, cfg), std::invalid_argument);
  EXPECT_THROW(hs::evolve(hs::preset("fig1a", 128), 0.1, cfg), hs::GridMismatch);
}

TEST(Evolve, BlowingUpFieldsAreReported) {
  // An unstable step size on rough data drives the fields past the limit.
  auto d = hs::preset("fig1c", 16).scaled(40.0);
  hs::OracleConfig cfg{16, 0.03, false};
  EXPECT_THROW(hs::evolve(d, 3.0, cfg), hs::StepUnstable);
}

TEST(Compare, AllClasses) {
  hs::OracleConfig cfg;
  for (const char* name : {"lightlike", "spacelike"}) {
    auto rep = hs::compare(hs::preset(name), {0.3}, cfg);
    EXPECT_LT(rep.max_l2(), 1e-5) << name;
  }
  auto a = hs::preset("fig1a");
  const double t_star = 0.5 * std::log(3.0);
  auto rep = hs::compare(a, {0.1, 0.5 * t_star, 0.3}, cfg);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_LT(rep.max_l2(), 1e-5);
  EXPECT_NEAR(rep.blowup_time, t_star, 1e-12);
}

}  // namespace
