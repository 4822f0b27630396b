// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"
#include "xi/constants.hpp"
#include "xi/error.hpp"
#include "xi/rational.hpp"

#include <gtest/gtest.h>

namespace xi {
namespace {

using testing::code_of;

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse("25/8"), Rational(25, 8));
  EXPECT_EQ(Rational::parse("50/16"), Rational(25, 8));
  EXPECT_EQ(Rational::parse("15.16"), Rational(379, 25));
  EXPECT_EQ(Rational::parse(".5"), Rational(1, 2));
}

TEST(Rational, ParseErrorsCarryPosition) {
  try {
    Rational::parse("12x4");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { Rational::parse(""); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { Rational::parse("3/"); }), ErrorCode::Parse);
  EXPECT_EQ(code_of([] { Rational::parse("3/0"); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational::parse("1.2.3"); }), ErrorCode::Parse);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a(25, 24), b(24, 25);
  EXPECT_EQ(a * b, Rational(1));
  EXPECT_EQ(a + b, Rational(1201, 600));
  EXPECT_EQ(a - a, Rational(0));
  EXPECT_EQ(a / b, Rational(625, 576));
  EXPECT_EQ(a.reciprocal(), b);
  EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(2, 3).pow(0), Rational(1));
  EXPECT_LT(b, a);
  EXPECT_EQ(code_of([] { Rational(1) / Rational(0); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational(0).reciprocal(); }), ErrorCode::DivisionByZero);
  EXPECT_EQ(code_of([] { Rational(BigInt(1), BigInt(0)); }), ErrorCode::DivisionByZero);
}

TEST(Rational, FloorRoundsTowardNegativeInfinity) {
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-4).floor(), -4);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(25, 24).to_decimal(4), "1.0417");
  EXPECT_EQ(Rational(1, 8).to_decimal(2), "0.13");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Rational(3).to_decimal(0), "3");
  EXPECT_EQ(format_decimal(Rational(25, 8)), "3.125");
  EXPECT_EQ(format_decimal(Rational(1, 3), 4), "0.3333...");
  EXPECT_EQ(Rational(25, 8).str(), "25/8");
  EXPECT_EQ(Rational(-6).str(), "-6");
}

TEST(Rational, IrregularFactorFindsSmallestOutsidePrime) {
  EXPECT_FALSE(irregular_factor(Rational(25, 24)).has_value());
  EXPECT_EQ(*irregular_factor(Rational(7)), 7);
  EXPECT_EQ(*irregular_factor(Rational(377, 360)), 13);
  EXPECT_EQ(*irregular_factor(Rational(18750, 379)), 379);
  EXPECT_TRUE(is_regular(Rational(2, 25)));
  EXPECT_FALSE(is_regular(Rational(0)));
  EXPECT_FALSE(is_regular(Rational(-2)));
}

TEST(Rational, IsRegularMatchesConstruction) {
  auto g = testing::rng(1);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational q = testing::random_regular(g);
    ASSERT_TRUE(is_regular(q)) << q;
    const int p = std::array{7, 11, 13, 59, 61, 383}[static_cast<std::size_t>(testing::uniform(g, 0, 5))];
    ASSERT_FALSE(is_regular(q * Rational(p))) << q;
    ASSERT_EQ(*irregular_factor(q / Rational(p)), p);
  }
}

TEST(Sqrt, ExactForPerfectSquares) {
  const auto r = sqrt_exact_or_approx(Rational(625, 4), default_sqrt_tolerance());
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.value, Rational(25, 2));
}

TEST(Sqrt, RejectsBadInput) {
  EXPECT_EQ(code_of([] { sqrt_exact_or_approx(Rational(0), default_sqrt_tolerance()); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { sqrt_exact_or_approx(Rational(-4), default_sqrt_tolerance()); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { sqrt_exact_or_approx(Rational(2), Rational(1, 1000)); }), ErrorCode::Argument);
  EXPECT_EQ(code_of([] { sqrt_exact_or_approx(Rational(2), Rational(0)); }), ErrorCode::Argument);
}

TEST(Sqrt, SquaresRoundTripExactly) {
  auto g = testing::rng(2);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational x = testing::random_positive(g, 100000, 100000);
    const auto r = sqrt_exact_or_approx(x * x, default_sqrt_tolerance());
    ASSERT_TRUE(r.exact) << x;
    ASSERT_EQ(r.value, x);
  }
}

TEST(Sqrt, ApproximationMeetsTolerance) {
  auto g = testing::rng(3);
  const Rational tol(1, 1'000'000'000);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational q = testing::random_positive(g, 1'000'000, 1000) + Rational(1, 7);
    const auto r = sqrt_exact_or_approx(q, tol);
    ASSERT_FALSE(r.exact) << q;
    ASSERT_LT((r.value * r.value - q).abs() / q, tol) << q;
  }
}

TEST(Sqrt, DefaultToleranceAgreesWithRealSqrt) {
  const auto r = sqrt_exact_or_approx(Rational(2), default_sqrt_tolerance());
  const Real diff = abs(r.value.to_real() - boost::multiprecision::sqrt(Real(2)));
  EXPECT_LT(diff, Real("1e-23"));
}

// Reference digits computed independently at 30 significant figures.
TEST(Constants, MatchIndependentReference) {
  EXPECT_LT(abs(modern_constant("pi").value - Real("3.14159265358979323846264338328")), Real("1e-28"));
  EXPECT_LT(abs(modern_constant("pi_over_3").value - Real("1.04719755119659774615421446109")), Real("1e-28"));
  EXPECT_LT(abs(modern_constant("pi_over_180").value - Real("0.0174532925199432957692369076849")),
            Real("1e-29"));
  EXPECT_LT(abs(modern_constant("deg_per_radian").value - Real("57.2957795130823208767981548141")),
            Real("1e-27"));
  EXPECT_EQ(code_of([] { modern_constant("tau"); }), ErrorCode::UnknownName);
}

TEST(Constants, AreMutuallyConsistent) {
  const Real pi = modern_constant("pi").value;
  EXPECT_LT(abs(modern_constant("pi_over_3").value * 3 - pi), Real("1e-45"));
  EXPECT_LT(abs(modern_constant("pi_over_180").value * modern_constant("deg_per_radian").value - 1), Real("1e-45"));
}

}  // namespace
}  // namespace xi
