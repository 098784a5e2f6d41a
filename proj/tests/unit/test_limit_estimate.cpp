#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "radialgeo/limit_estimate.hpp"

using namespace radialgeo;

namespace {

std::vector<double> probes(double (*g)(double), double t0, int count) {
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(g(t0 * std::exp2(k)));
  return out;
}

}  // namespace

TEST(Richardson, ConstantSequence) {
  const std::vector<double> p(7, 2.5);
  const LimitEstimate e = richardson_limit(p);
  ASSERT_TRUE(e.is_finite());
  EXPECT_EQ(e.value, 2.5);
  EXPECT_EQ(e.err, 0.0);
}

TEST(Richardson, AlgebraicRemainder) {
  const auto p = probes([](double t) { return 3.0 + 1.0 / t - 2.0 / (t * t); }, 4.0, 7);
  const LimitEstimate e = richardson_limit(p);
  ASSERT_TRUE(e.is_finite());
  EXPECT_NEAR(e.value, 3.0, 1e-9);
  EXPECT_GE(e.err + 1e-9, std::abs(e.value - 3.0));
}

TEST(Richardson, NonIntegerExponent) {
  const auto p = probes([](double t) { return 1.0 + std::pow(t, -1.5); }, 8.0, 7);
  const LimitEstimate e = richardson_limit(p);
  ASSERT_TRUE(e.is_finite());
  EXPECT_NEAR(e.value, 1.0, 1e-6);
}

TEST(Richardson, LogarithmicGrowthIsNotConvergent) {
  const auto p = probes([](double t) { return std::log(t); }, 1.0, 7);
  EXPECT_FALSE(richardson_limit(p).is_finite());
}

TEST(Richardson, ExponentialGrowthIsDivergent) {
  const auto p = probes([](double t) { return std::cosh(t); }, 1.0, 7);
  const LimitEstimate e = richardson_limit(p);
  EXPECT_FALSE(e.is_finite());
  EXPECT_EQ(e.last_probe, p.back());
}

TEST(Richardson, LinearGrowthIsDivergent) {
  const auto p = probes([](double t) { return 5.0 * t; }, 1.0e5, 7);
  EXPECT_FALSE(richardson_limit(p).is_finite());
}

TEST(Richardson, ShortInputs) {
  EXPECT_THROW(richardson_limit(std::vector<double>{}), std::exception);
  const std::vector<double> two{1.0, 1.5};
  const LimitEstimate e = richardson_limit(two);
  EXPECT_EQ(e.value, 1.5);
  EXPECT_EQ(e.err, 0.5);
}

TEST(Richardson, NonFiniteProbeIsDivergent) {
  const std::vector<double> p{1.0, 2.0, INFINITY, 4.0};
  const LimitEstimate e = richardson_limit(p);
  EXPECT_FALSE(e.is_finite());
  EXPECT_EQ(e.last_probe, 2.0);
}

TEST(RichardsonProperty, RecoversRandomLimits) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0), q(0.5, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double L = u(rng), a = u(rng), b = u(rng), e1 = q(rng);
    std::vector<double> p;
    for (int k = 0; k < 7; ++k) {
      const double t = 64.0 * std::exp2(k);
      p.push_back(L + a * std::pow(t, -e1) + b * std::pow(t, -e1 - 1.0));
    }
    const LimitEstimate e = richardson_limit(p);
    ASSERT_TRUE(e.is_finite()) << trial;
    EXPECT_NEAR(e.value, L, 1e-6 * (1.0 + std::abs(a) + std::abs(b))) << trial;
  }
}
