#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "radialgeo/curvature_profile.hpp"
#include "radialgeo/errors.hpp"
#include "radialgeo/gallery.hpp"

using namespace radialgeo;

namespace {

CurvatureProfile one_minus_t() {
  return CurvatureProfile({Segment{0.0, 2.0, Polynomial({1.0, -1.0}), Polynomial{}}}, ZeroTail{});
}

// Random piecewise polynomial profile with up to 4 segments on [0, 8] and a random tail.
CurvatureProfile random_profile(std::mt19937& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_int_distribution<int> nseg(1, 4), deg(0, 3), tail_kind(0, 2);
  const int count = nseg(rng);
  std::vector<Segment> segs;
  for (int i = 0; i < count; ++i) {
    std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (double& x : c) x = coef(rng);
    segs.push_back({8.0 * i / count, 8.0 * (i + 1) / count, Polynomial(c), Polynomial{}});
  }
  TailModel tail = ZeroTail{};
  switch (tail_kind(rng)) {
    case 1:
      tail = ConstantTail{coef(rng)};
      break;
    case 2:
      tail = PowerDecayTail{coef(rng), 1.0 + 3.0 * std::abs(coef(rng))};
      break;
    default:
      break;
  }
  return CurvatureProfile(std::move(segs), tail);
}

}  // namespace

TEST(Polynomial, TrimsTrailingZerosAndEvaluates) {
  Polynomial p({1.0, 2.0, 0.0, 0.0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_DOUBLE_EQ(p(3.0), 7.0);
  EXPECT_TRUE(Polynomial({0.0, 0.0}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_DOUBLE_EQ(Polynomial()(5.0), 0.0);
}

TEST(Polynomial, Derivative) {
  const Polynomial d = Polynomial({1.0, 2.0, 3.0}).derivative();
  ASSERT_EQ(d.degree(), 1);
  EXPECT_DOUBLE_EQ(d(1.0), 8.0);
  EXPECT_TRUE(Polynomial({4.0}).derivative().is_zero());
}

TEST(SignChanges, FindsSimpleRootsOnly) {
  // (t-1)(t-2)(t-3), plus a double root at 4 that is not a sign change.
  const Polynomial cubic({-6.0, 11.0, -6.0, 1.0});
  const auto roots = sign_changes(cubic, 0.0, 5.0);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_NEAR(roots[0], 1.0, 1e-12);
  EXPECT_NEAR(roots[1], 2.0, 1e-12);
  EXPECT_NEAR(roots[2], 3.0, 1e-12);
  EXPECT_TRUE(sign_changes(Polynomial({16.0, -8.0, 1.0}), 0.0, 10.0).empty());
}

TEST(SignChanges, EndpointsAreExcluded) {
  EXPECT_TRUE(sign_changes(Polynomial({-1.0, 1.0}), 1.0, 3.0).empty());
}

TEST(CurvatureProfile, EvalExamples) {
  EXPECT_EQ(eval(CurvatureProfile::zero(), 5.0), 0.0);
  EXPECT_EQ(eval(CurvatureProfile::constant(-1.0), 2.0), -1.0);
  EXPECT_DOUBLE_EQ(eval(CurvatureProfile::power_decay(-1.0, 3.0), 1.0), -0.125);
}

TEST(CurvatureProfile, NegativeTimeIsDomainError) {
  EXPECT_THROW(eval(CurvatureProfile::zero(), -1e-12), DomainError);
}

TEST(CurvatureProfile, SegmentsThenTail) {
  const CurvatureProfile K = one_minus_t();
  EXPECT_DOUBLE_EQ(K(0.5), 0.5);
  EXPECT_DOUBLE_EQ(K(1.999), 1.0 - 1.999);
  EXPECT_EQ(K(2.0), 0.0);
  EXPECT_EQ(K(100.0), 0.0);
  EXPECT_EQ(K.tail_start(), 2.0);
  EXPECT_EQ(K.piece_count(), 2u);
  EXPECT_EQ(K.piece_index(1.0), 0u);
  EXPECT_EQ(K.piece_index(2.0), 1u);
  EXPECT_TRUE(std::isinf(K.piece_bounds(1).second));
  // closed-interval evaluation of a piece at its right end
  EXPECT_DOUBLE_EQ(K.eval_piece(0, 2.0), -1.0);
}

TEST(CurvatureProfile, RationalSegment) {
  const CurvatureProfile K({Segment{0.0, 1.0, Polynomial({1.0}), Polynomial({1.0, 1.0})}}, ZeroTail{});
  EXPECT_DOUBLE_EQ(K(0.5), 1.0 / 1.5);
}

TEST(CurvatureProfile, RejectsGapsAndOverlaps) {
  EXPECT_THROW(CurvatureProfile({Segment{0.5, 1.0, Polynomial({1.0}), {}}}, ZeroTail{}), ConfigurationError);
  EXPECT_THROW(CurvatureProfile({Segment{0.0, 1.0, Polynomial({1.0}), {}}, Segment{1.5, 2.0, Polynomial({1.0}), {}}},
                                ZeroTail{}),
               ConfigurationError);
  EXPECT_THROW(CurvatureProfile({Segment{0.0, 1.0, Polynomial({1.0}), {}}, Segment{0.5, 2.0, Polynomial({1.0}), {}}},
                                ZeroTail{}),
               ConfigurationError);
  EXPECT_THROW(CurvatureProfile({Segment{0.0, 0.0, Polynomial({1.0}), {}}}, ZeroTail{}), ConfigurationError);
}

TEST(CurvatureProfile, RejectsBadCoefficientsAndTails) {
  EXPECT_THROW(CurvatureProfile({Segment{0.0, 1.0, Polynomial({NAN}), {}}}, ZeroTail{}), ConfigurationError);
  // denominator 1 - 2t vanishes at 0.5
  EXPECT_THROW(CurvatureProfile({Segment{0.0, 1.0, Polynomial({1.0}), Polynomial({1.0, -2.0})}}, ZeroTail{}),
               ConfigurationError);
  EXPECT_THROW(CurvatureProfile::power_decay(-1.0, 0.0), ConfigurationError);
  EXPECT_THROW(CurvatureProfile::constant(INFINITY), ConfigurationError);
}

TEST(CurvatureProfile, ContinuityDefectIsReportedNotEnforced) {
  const CurvatureProfile jump({Segment{0.0, 1.0, Polynomial({1.0}), {}}}, ConstantTail{-1.0});
  EXPECT_DOUBLE_EQ(jump.continuity_defect(), 2.0);
  EXPECT_EQ(CurvatureProfile::constant(3.0).continuity_defect(), 0.0);
}

TEST(NegativePart, Examples) {
  const CurvatureProfile neg = negative_part(CurvatureProfile::constant(-1.0));
  EXPECT_EQ(neg(0.0), -1.0);
  EXPECT_EQ(neg(1e6), -1.0);
  EXPECT_TRUE(negative_part(CurvatureProfile::constant(1.0)).is_identically_zero());
}

TEST(NegativePart, LinearSegmentSplitsAtOne) {
  const CurvatureProfile neg = negative_part(one_minus_t());
  const auto bps = neg.breakpoints();
  ASSERT_FALSE(bps.empty());
  EXPECT_NEAR(bps.front(), 1.0, 1e-13);
  for (double t = 0.0; t <= 4.0; t += 1.0 / 64) {
    EXPECT_NEAR(neg(t), std::min(one_minus_t()(t), 0.0), 1e-15) << "t=" << t;
  }
}

TEST(PositivePart, Examples) {
  EXPECT_TRUE(positive_part(CurvatureProfile::constant(-1.0)).is_identically_zero());
  EXPECT_EQ(positive_part(CurvatureProfile::constant(1.0))(7.0), 1.0);
  const CurvatureProfile pos = positive_part(one_minus_t());
  EXPECT_DOUBLE_EQ(pos(0.25), 0.75);
  EXPECT_EQ(pos(1.5), 0.0);
  EXPECT_EQ(pos(3.0), 0.0);
}

TEST(PositivePart, PowerTailSign) {
  EXPECT_TRUE(positive_part(CurvatureProfile::power_decay(-2.0, 3.0)).is_identically_zero());
  EXPECT_DOUBLE_EQ(negative_part(CurvatureProfile::power_decay(-2.0, 3.0))(1.0), -0.25);
}

TEST(TailMomentClass, Examples) {
  EXPECT_EQ(tail_moment_class(CurvatureProfile::constant(-1.0)), MomentClass::DivergentMoment);
  EXPECT_EQ(tail_moment_class(CurvatureProfile::power_decay(-1.0, 3.0)), MomentClass::FiniteMoment);
  EXPECT_EQ(tail_moment_class(CurvatureProfile::power_decay(-1.0, 2.0)), MomentClass::DivergentMoment);
  EXPECT_EQ(tail_moment_class(CurvatureProfile::zero()), MomentClass::FiniteMoment);
  EXPECT_EQ(tail_moment_class(CurvatureProfile::constant(1.0)), MomentClass::FiniteMoment);
  EXPECT_EQ(tail_moment_class(CurvatureProfile::power_decay(5.0, 1.0)), MomentClass::FiniteMoment);
}

TEST(TailMomentClass, SignChangingBetaHasNegativeQuarticTail) {
  EXPECT_EQ(tail_moment_class(sign_changing_beta_profile(std::log(2.0))), MomentClass::FiniteMoment);
  EXPECT_LT(std::get<PowerDecayTail>(sign_changing_beta_profile(std::log(2.0)).tail()).a, 0.0);
}

// Properties over random profiles.

TEST(ClippingProperty, PartsSumToProfile) {
  std::mt19937 rng(20261016);
  std::uniform_real_distribution<double> where(0.0, 12.0);
  for (int trial = 0; trial < 300; ++trial) {
    const CurvatureProfile K = random_profile(rng);
    const CurvatureProfile neg = negative_part(K);
    const CurvatureProfile pos = positive_part(K);
    for (int i = 0; i < 40; ++i) {
      const double t = where(rng);
      const double k = K(t);
      ASSERT_NEAR(neg(t) + pos(t), k, 1e-12 * (1.0 + std::abs(k))) << "trial " << trial << " t=" << t;
      ASSERT_LE(neg(t), 1e-14);
      ASSERT_GE(pos(t), -1e-14);
    }
  }
}

TEST(ClippingProperty, NegativePartIsIdempotent) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> where(0.0, 12.0);
  for (int trial = 0; trial < 200; ++trial) {
    const CurvatureProfile once = negative_part(random_profile(rng));
    const CurvatureProfile twice = negative_part(once);
    for (int i = 0; i < 40; ++i) {
      const double t = where(rng);
      ASSERT_NEAR(once(t), twice(t), 1e-14) << "trial " << trial << " t=" << t;
    }
  }
}

TEST(ClippingProperty, ClipsAtRootsOfHigherDegreeSegments) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const CurvatureProfile K = random_profile(rng);
    const CurvatureProfile neg = negative_part(K);
    // dense grid check against the pointwise definition
    for (double t = 0.0; t < 10.0; t += 0.01) {
      ASSERT_NEAR(neg(t), std::min(K(t), 0.0), 1e-12) << "trial " << trial << " t=" << t;
    }
  }
}
