#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hs/errors.hpp"
#include "hs/periodic_field.hpp"
#include "hs/sampling.hpp"

namespace {

using hs::Grid;
using hs::GridFunction;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

GridFunction wave(const Grid& g, double (*f)(double), double k) {
  return GridFunction::sample(g, [&](double x) { return f(kTwoPi * k * x); });
}

TEST(Grid, RejectsSmallOrOddSizes) {
  EXPECT_THROW(Grid(6), std::invalid_argument);
  EXPECT_THROW(Grid(9), std::invalid_argument);
  EXPECT_NO_THROW(Grid(8));
  EXPECT_DOUBLE_EQ(Grid(64).node(16), 0.25);
}

TEST(GridFunction, RejectsWrongLengthAndNonFinite) {
  EXPECT_THROW(GridFunction(Grid(8), std::vector<double>(7)), hs::GridMismatch);
  std::vector<double> v(8, 0.0);
  v[3] = std::nan("");
  EXPECT_THROW(GridFunction(Grid(8), v), std::invalid_argument);
}

TEST(GridFunction, ArithmeticNeedsSameGrid) {
  auto a = GridFunction::zeros(Grid(8));
  auto b = GridFunction::zeros(Grid(16));
  EXPECT_THROW(a + b, hs::GridMismatch);
}

TEST(Integrate, Examples) {
  const Grid g(64);
  EXPECT_NEAR(hs::integrate(GridFunction::constant(g, 1.0)), 1.0, 1e-15);
  EXPECT_NEAR(hs::integrate(wave(g, std::cos, 1)), 0.0, 1e-15);
  auto c = wave(g, std::cos, 1);
  EXPECT_NEAR(hs::integrate(c * c), 0.5, 1e-15);
}

TEST(Derivative, Examples) {
  const Grid g(64);
  auto d = hs::derivative(wave(g, std::sin, 1));
  EXPECT_LT(hs::sup_norm(d - kTwoPi * wave(g, std::cos, 1)), 1e-12);
  EXPECT_LT(hs::sup_norm(hs::derivative(GridFunction::constant(g, 3.0))), 1e-13);
  auto d2 = hs::derivative(wave(g, std::cos, 2));
  EXPECT_LT(hs::sup_norm(d2 + 2.0 * kTwoPi * wave(g, std::sin, 2)), 1e-11);
}

TEST(Antiderivative, Examples) {
  const Grid g(64);
  auto F = hs::antiderivative_from_zero(GridFunction::constant(g, 1.0));
  EXPECT_LT(hs::sup_norm(F - GridFunction::identity(g)), 1e-14);
  auto s = hs::antiderivative_from_zero(wave(g, std::cos, 1));
  EXPECT_LT(hs::sup_norm(s - wave(g, std::sin, 1) / kTwoPi), 1e-15);

  std::mt19937_64 rng(7);
  auto f = hs::random_trig_polynomial(g, hs::band_limit(g), rng);
  auto R = hs::antiderivative_from_zero(f);
  EXPECT_EQ(R[0], 0.0);
  EXPECT_LT(hs::sup_norm(hs::derivative(R) - f), 1e-10);
}

TEST(Antiderivative, InvertsDerivativeUpToValueAtZero) {
  const Grid g(128);
  std::mt19937_64 rng(11);
  auto f = hs::random_trig_polynomial(g, hs::band_limit(g), rng) + 0.7;
  auto back = hs::antiderivative_from_zero(hs::derivative(f));
  EXPECT_LT(hs::sup_norm(back - (f - f[0])), 1e-10);
}

TEST(AInverse, Examples) {
  const Grid g(64);
  const double w2 = kTwoPi * kTwoPi;
  auto s = hs::a_inverse(wave(g, std::sin, 1));
  EXPECT_LT(hs::sup_norm(s - wave(g, std::sin, 1) / w2), 1e-15);
  auto c = hs::a_inverse(wave(g, std::cos, 1));
  EXPECT_LT(hs::sup_norm(c - (wave(g, std::cos, 1) - 1.0) / w2), 1e-15);
  EXPECT_LT(hs::sup_norm(hs::a_inverse(GridFunction::zeros(g))), 1e-300);
}

TEST(AInverse, MeanPolicies) {
  const Grid g(64);
  auto f = wave(g, std::cos, 1) + 1.0;
  EXPECT_THROW(hs::a_inverse(f), hs::NonZeroMean);
  auto sub = hs::a_inverse(f, hs::MeanPolicy::kSubtract);
  EXPECT_LT(hs::sup_norm(sub - hs::a_inverse(wave(g, std::cos, 1))), 1e-15);
  // Literal: -g'' = f away from x = 0 with the quadratic x(1-x)/2 term.
  auto lit = hs::a_inverse(f, hs::MeanPolicy::kLiteral);
  auto expected = sub + GridFunction::sample(g, [](double x) {
                    return 0.5 * x * (1 - x);
                  });
  EXPECT_LT(hs::sup_norm(lit - expected), 1e-15);
  EXPECT_EQ(lit[0], 0.0);
}

TEST(AInverse, SecondDerivativeRecoversArgument) {
  const Grid g(256);
  std::mt19937_64 rng(3);
  auto f = hs::random_trig_polynomial(g, hs::band_limit(g), rng);
  auto back = -1.0 * hs::derivative(hs::derivative(hs::a_inverse(f)));
  EXPECT_LT(hs::sup_norm(back - f), 1e-8 * hs::sup_norm(f));
}

TEST(MeanZero, Projection) {
  const Grid g(32);
  EXPECT_LT(hs::sup_norm(hs::mean_zero_project(GridFunction::constant(g, 5.0))),
            1e-15);
  auto f = 2.0 + wave(g, std::sin, 1);
  EXPECT_LT(hs::sup_norm(hs::mean_zero_project(f) - wave(g, std::sin, 1)),
            1e-15);
  std::mt19937_64 rng(5);
  auto r = hs::random_trig_polynomial(g, 4, rng) + 1.3;
  auto p = hs::mean_zero_project(r);
  EXPECT_NEAR(hs::integrate(p), 0.0, 1e-15);
  EXPECT_LT(hs::sup_norm(hs::mean_zero_project(p) - p), 1e-15);
}

TEST(Periodicity, IntegralOfDerivativeVanishes) {
  const Grid g(128);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 10; ++i) {
    auto f = hs::random_trig_polynomial(g, 40, rng, 0.0) + 2.0;
    EXPECT_NEAR(hs::integrate(hs::derivative(f)), 0.0, 1e-10);
  }
}

TEST(TrigInterpolant, ReproducesBandLimitedFunction) {
  const Grid g(64);
  std::mt19937_64 rng(13);
  auto f = hs::random_trig_polynomial(g, 8, rng);
  hs::TrigInterpolant I(f);
  auto fx = hs::derivative(f);
  for (int j = 0; j < g.size(); ++j) {
    EXPECT_NEAR(I(g.node(j)), f[j], 1e-13);
    EXPECT_NEAR(I.derivative(g.node(j)), fx[j], 1e-11);
  }
  const double x = 0.3141;
  const double s = std::sin(kTwoPi * 3 * x);
  hs::TrigInterpolant J(wave(g, std::sin, 3));
  EXPECT_NEAR(J(x), s, 1e-14);
}

TEST(Csv, RoundTrip) {
  const Grid g(16);
  auto f = wave(g, std::sin, 1) * (1.0 / 3.0);
  const auto text = hs::to_csv(f);
  EXPECT_EQ(text.rfind("x,value\n", 0), 0u);
  auto back = hs::from_csv(text);
  EXPECT_EQ(back.size(), 16);
  for (int j = 0; j < 16; ++j) EXPECT_EQ(back[j], f[j]);
  EXPECT_THROW(hs::from_csv("a,b\n0,1\n"), std::invalid_argument);
}

}  // namespace
