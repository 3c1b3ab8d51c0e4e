#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hs/errors.hpp"
#include "hs/explicit_engine.hpp"
#include "hs/flow_inverse.hpp"
#include "hs/presets.hpp"

namespace {

using hs::GridFunction;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * kPi;

// Dense scan of min phi_x followed by bisection, independent of the factor
// roots used by blowup_time. phi_x = (f1 - f2)(f1 + f2) has a double zero
// when rho0 = 0, so the sign is taken from the smaller factor.
double bisect_min_phi_x(const hs::NormalizedData& nd, double horizon) {
  auto min_phi_x = [&](double t) {
    const int c = nd.cls.unit_c();
    double m = 1e300;
    const auto& a = nd.data.u0x();
    const auto& r = nd.data.rho0();
    for (int j = 0; j < a.size(); ++j) {
      double C = 1, S = t;
      if (c == -1) { C = std::cosh(t); S = std::sinh(t); }
      if (c == 1) { C = std::cos(t); S = std::sin(t); }
      const double f1 = C + 0.5 * a[j] * S, f2 = 0.5 * r[j] * S;
      m = std::min(m, f1 - std::abs(f2));
    }
    return m;
  };
  double lo = 0.0;
  for (double t = 1e-3; t <= horizon; t += 1e-3) {
    if (min_phi_x(t) <= 0.0) {
      double a = lo, b = t;
      for (int i = 0; i < 200; ++i) {
        const double m = 0.5 * (a + b);
        (min_phi_x(m) > 0.0 ? a : b) = m;
      }
      return 0.5 * (a + b);
    }
    lo = t;
  }
  return hs::kInfinity;
}

TEST(Casimir, Examples) {
  EXPECT_NEAR(hs::casimir_c(hs::preset("fig1a")), -1.0, 1e-14);
  EXPECT_NEAR(hs::casimir_c(hs::preset("fig1b")), -1.0, 1e-14);
  const hs::Grid g(64);
  auto zero = hs::InitialData::from_slope(GridFunction::zeros(g),
                                          GridFunction::zeros(g));
  EXPECT_EQ(hs::casimir_c(zero), 0.0);
}

TEST(Casimir, KappaPlusFlipsSign) {
  auto d = hs::preset("fig1a", 64, hs::Kappa::kPlus);
  EXPECT_NEAR(hs::casimir_c(d), 0.25 * (0.5 + 4.5), 1e-14);
}

TEST(Normalize, Examples) {
  auto d = hs::preset("fig1a").scaled(2.0);  // c = -4
  auto nd = hs::normalize(d);
  EXPECT_NEAR(nd.cls.c, -4.0, 1e-13);
  EXPECT_NEAR(nd.cls.scale, 0.5, 1e-15);
  EXPECT_NEAR(hs::casimir_c(nd.data), -1.0, 1e-13);
  EXPECT_EQ(nd.cls.type, hs::CausalType::kTimelike);

  auto unchanged = hs::normalize(hs::preset("fig1a"));
  EXPECT_NEAR(unchanged.cls.scale, 1.0, 1e-14);

  auto light = hs::normalize(hs::preset("lightlike"));
  EXPECT_EQ(light.cls.type, hs::CausalType::kLightlike);
  EXPECT_EQ(light.cls.scale, 1.0);

  auto space = hs::normalize(hs::preset("spacelike"));
  EXPECT_EQ(space.cls.type, hs::CausalType::kSpacelike);
  EXPECT_NEAR(hs::casimir_c(space.data), 1.0, 1e-13);
}

TEST(Riccati, Examples) {
  EXPECT_EQ(hs::riccati(0.0, 0, 3.7), 0.0);
  for (double t : {0.0, 0.5, 2.0}) EXPECT_NEAR(hs::riccati(2.0, -1, t), 2.0, 1e-14);
  EXPECT_NEAR(hs::riccati(0.0, 1, kPi / 4), -2.0, 1e-14);
}

TEST(Riccati, SatisfiesOde) {
  const double h = 1e-5;
  for (int c : {-1, 0, 1}) {
    for (double z0 : {-1.5, 0.3, 1.7}) {
      for (double t : {0.1, 0.4}) {
        const double z = hs::riccati(z0, c, t);
        const double dz = (hs::riccati(z0, c, t + h) - hs::riccati(z0, c, t - h)) / (2 * h);
        const double rhs = -0.5 * z * z - 2.0 * c;
        EXPECT_LT(std::abs(dz - rhs), 1e-6 * std::max(1.0, std::abs(rhs)))
            << "c=" << c << " z0=" << z0 << " t=" << t;
      }
    }
  }
}

TEST(Riccati, SingularDenominator) {
  // z0 = -2, c = 0: z = 2 z0 / (2 + z0 t) vanishes at t = 1.
  EXPECT_THROW(hs::riccati(-2.0, 0, 1.0), hs::Singular);
}

TEST(Lagrangian, InitialTime) {
  auto nd = hs::normalize(hs::preset("fig1b"));
  auto lf = hs::lagrangian_fields(nd, 0.0);
  EXPECT_LT(hs::sup_norm(lf.U - nd.data.u0x()), 1e-14);
  EXPECT_LT(hs::sup_norm(lf.varrho - nd.data.rho0()), 1e-14);
  EXPECT_LT(hs::sup_norm(lf.phi - GridFunction::identity(nd.data.grid())), 1e-14);
}

TEST(Lagrangian, ZeroDensityGivesScalarHunterSaxton) {
  auto nd = hs::normalize(hs::preset("spacelike"));
  const double t = 0.4;
  auto lf = hs::lagrangian_fields(nd, t);
  EXPECT_LT(hs::sup_norm(lf.varrho), 1e-300);
  // Scalar characteristic solution: U = riccati(u0x, 1, t).
  for (int j = 0; j < lf.U.size(); ++j) {
    EXPECT_NEAR(lf.U[j], hs::riccati(nd.data.u0x()[j], 1, t), 1e-12);
  }
}

TEST(Lagrangian, GlobalPresetFlowDensity) {
  auto nd = hs::normalize(hs::preset("fig1c"));
  const double t = 1.0;
  auto lf = hs::lagrangian_fields(nd, t);
  const auto& g = nd.data.grid();
  for (int j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    const double expected =
        std::exp(-t) * (std::cosh(t) + (std::cos(kTwoPi * x) + 1) * std::sinh(t));
    EXPECT_NEAR(lf.phi_x[j], expected, 1e-13);
  }
  EXPECT_GT(lf.phi_x.min(), 0.0);
}

TEST(Lagrangian, AgreesWithRiccatiCharacteristics) {
  for (const char* name : {"fig1a", "fig1b", "lightlike", "spacelike"}) {
    auto nd = hs::normalize(hs::preset(name));
    const int c = nd.cls.unit_c();
    const double t = 0.3;
    auto lf = hs::lagrangian_fields(nd, t);
    const auto& a = nd.data.u0x();
    const auto& r = nd.data.rho0();
    for (int j = 0; j < a.size(); j += 7) {
      const double p = hs::riccati(a[j] + r[j], c, t);
      const double q = hs::riccati(a[j] - r[j], c, t);
      EXPECT_NEAR(0.5 * (p + q), lf.U[j], 1e-9) << name;
      EXPECT_NEAR(0.5 * (p - q), lf.varrho[j], 1e-9) << name;
      const double fac = hs::characteristic_factor(a[j] + r[j], c, t) *
                         hs::characteristic_factor(a[j] - r[j], c, t);
      EXPECT_NEAR(fac, lf.phi_x[j], 1e-9) << name;
    }
    EXPECT_NEAR(lf.phi[0], 0.0, 1e-15);
    // Mass: phi(1) = int phi_x = 1.
    EXPECT_NEAR(hs::integrate(lf.phi_x), 1.0, 1e-9) << name;
  }
}

TEST(Lagrangian, PastBlowupThrows) {
  auto nd = hs::normalize(hs::preset("fig1a"));
  EXPECT_THROW(hs::lagrangian_fields(nd, 0.6), hs::BlowupReached);
}

TEST(Blowup, Presets) {
  EXPECT_NEAR(hs::blowup_time(hs::normalize(hs::preset("fig1a"))),
              0.5 * std::log(3.0), 1e-12);
  const double y = (3.0 / std::numbers::sqrt2 + 1.0) / 2.0;
  EXPECT_NEAR(hs::blowup_time(hs::normalize(hs::preset("fig1b"))),
              std::atanh(1.0 / y), 1e-12);
  EXPECT_EQ(hs::blowup_time(hs::normalize(hs::preset("fig1c"))), hs::kInfinity);
  EXPECT_NEAR(hs::blowup_time(hs::normalize(hs::preset("lightlike"))), 1.0, 1e-12);
  // Spacelike preset after normalization: u0x = 2 sqrt 2 cos 2 pi x.
  EXPECT_NEAR(hs::blowup_time(hs::normalize(hs::preset("spacelike"))),
              kPi / 2 - std::atan(std::sqrt(2.0)), 1e-12);
}

TEST(Blowup, MatchesBisectionOnAllPresets) {
  for (const char* name : {"fig1a", "fig1b", "lightlike", "spacelike"}) {
    auto nd = hs::normalize(hs::preset(name));
    EXPECT_NEAR(hs::blowup_time(nd), bisect_min_phi_x(nd, 5.0), 1e-8) << name;
  }
}

TEST(Blowup, LiteralFormulaReportedSeparately) {
  // Reading the inf inside arccoth literally gives no breaking for fig1a.
  auto nd = hs::normalize(hs::preset("fig1a"));
  EXPECT_NE(hs::blowup_time_formula_literal(nd), hs::blowup_time(nd));
}

TEST(Global, Criterion) {
  EXPECT_TRUE(hs::is_global(hs::normalize(hs::preset("fig1c"))));
  EXPECT_FALSE(hs::is_global(hs::normalize(hs::preset("fig1a"))));
  EXPECT_FALSE(hs::is_global(hs::normalize(hs::preset("lightlike"))));
  const hs::Grid g(64);
  auto u0x = GridFunction::sample(g, [](double x) { return -3.0 * std::cos(kTwoPi * x); });
  // Pick rho0 constant so that c = -1: 1/4 (9/2 - r^2) = -1.
  auto rho0 = GridFunction::constant(g, std::sqrt(8.5));
  auto nd = hs::normalize(hs::InitialData::from_slope(u0x, rho0));
  EXPECT_NEAR(nd.cls.c, -1.0, 1e-12);
  EXPECT_FALSE(hs::is_global(nd));
}

TEST(Eulerian, InitialTimeIsData) {
  auto nd = hs::normalize(hs::preset("fig1a"));
  auto e = hs::eulerian_solution(nd, 0.0);
  EXPECT_LT(hs::sup_norm(e.u - nd.data.u0()), 1e-13);
  EXPECT_LT(hs::sup_norm(e.rho - nd.data.rho0()), 1e-13);
}

TEST(Eulerian, CasimirConserved) {
  for (const char* name : {"fig1a", "fig1b", "fig1c", "lightlike", "spacelike"}) {
    auto nd = hs::normalize(hs::preset(name));
    for (double t : {0.1, 0.3}) {
      auto e = hs::eulerian_solution(nd, t);
      EXPECT_NEAR(e.u[0], 0.0, 1e-12);
      auto ux = hs::derivative(e.u);
      const double c = 0.25 * hs::integrate(ux * ux - e.rho * e.rho);
      EXPECT_NEAR(c, hs::casimir_c(nd.data), 1e-6) << name << " t=" << t;
    }
  }
}

TEST(Eulerian, NearlyDegenerateThrows) {
  auto nd = hs::normalize(hs::preset("fig1a"));
  const double t_star = hs::blowup_time(nd);
  EXPECT_THROW(hs::eulerian_solution(nd, t_star - 1e-10), hs::NotInvertible);
}

TEST(FlowInverse, IdentityAndShift) {
  const hs::Grid g(64);
  hs::FlowInverse id(GridFunction::constant(g, 1.0));
  auto f = GridFunction::sample(g, [](double x) { return std::sin(kTwoPi * x); });
  EXPECT_LT(hs::sup_norm(id.pull(f) - f), 1e-13);
  // phi_x = 1 + 0.5 cos 2 pi x: phi(x) = x + sin(2 pi x) / (4 pi).
  hs::FlowInverse inv(GridFunction::sample(g, [](double x) {
    return 1.0 + 0.5 * std::cos(kTwoPi * x);
  }));
  for (int j = 0; j < g.size(); ++j) {
    const double xi = inv.preimages()[j];
    EXPECT_NEAR(xi + std::sin(kTwoPi * xi) / (4 * kPi), g.node(j), 1e-13);
  }
}

TEST(MonotoneCubic, PreservesMonotoneData) {
  hs::MonotoneCubic m({0.0, 1.0, 2.0, 3.0}, {0.0, 0.0, 1.0, 1.0});
  double prev = -1.0;
  for (double x = 0.0; x <= 3.0; x += 0.01) {
    const double v = m(x);
    EXPECT_GE(v, prev - 1e-15);
    EXPECT_GE(v, -1e-15);
    EXPECT_LE(v, 1.0 + 1e-15);
    prev = v;
  }
}

TEST(Presets, Fig1cDensityOffsetIsExact) {
  auto d = hs::preset("fig1c");
  for (int j = 0; j < d.grid().size(); ++j) EXPECT_EQ(d.rho0()[j] - d.u0x()[j], 2.0);
  EXPECT_NEAR(d.u0x()[d.grid().size() / 4], 0.0, 1e-15);
}

TEST(Presets, UnknownNameThrows) {
  EXPECT_THROW(hs::preset("nope"), std::invalid_argument);
  hs::FourierData tooHigh;
  tooHigh.u0x_cos.assign(40, 0.0);
  EXPECT_THROW(hs::from_fourier(tooHigh, 64), std::invalid_argument);
}

TEST(InitialData, VelocityMustVanishAtZero) {
  const hs::Grid g(16);
  EXPECT_THROW(hs::InitialData::from_velocity(GridFunction::constant(g, 1.0),
                                              GridFunction::zeros(g)),
               std::invalid_argument);
  EXPECT_THROW(hs::InitialData::from_slope(GridFunction::constant(g, 1.0),
                                           GridFunction::zeros(g)),
               hs::NonZeroMean);
}

}  // namespace
