// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"
#include "xi/circle.hpp"
#include "xi/registry.hpp"

#include <gtest/gtest.h>

#include <array>

namespace xi {
namespace {

using testing::code_of;

constexpr std::array kExactStages{Stage::Hexagon, Stage::Susa, Stage::Ptolemy};

TEST(Stage, Names) {
  EXPECT_EQ(parse_stage("1"), Stage::Hexagon);
  EXPECT_EQ(parse_stage("2"), Stage::Susa);
  EXPECT_EQ(parse_stage("susa"), Stage::Susa);
  EXPECT_EQ(parse_stage("ptolemy"), Stage::Ptolemy);
  EXPECT_EQ(parse_stage("modern"), Stage::Modern);
  EXPECT_EQ(to_string(Stage::Hexagon), "hexagon");
  EXPECT_EQ(code_of([] { parse_stage("3"); }), ErrorCode::Parse);
}

TEST(Formulary, FromRegistryMatchesStandard) {
  const Formulary f = Formulary::from_registry(Registry::builtin());
  const Formulary& s = Formulary::standard();
  EXPECT_EQ(f.stretch, s.stretch);
  EXPECT_EQ(f.shrink, s.shrink);
  EXPECT_EQ(f.stretch2, s.stretch2);
  EXPECT_EQ(s.xi(Stage::Hexagon), Rational(1));
  EXPECT_EQ(s.xi(Stage::Susa), Rational(25, 24));
  EXPECT_EQ(s.xi(Stage::Ptolemy), Rational(377, 360));
  EXPECT_EQ(code_of([&] { s.xi(Stage::Modern); }), ErrorCode::Domain);
}

TEST(Circle, Circumference) {
  EXPECT_EQ(circumference(Rational(1), Stage::Hexagon), Rational(3));
  EXPECT_EQ(circumference(Rational(1), Stage::Susa), Rational(25, 8));
  EXPECT_EQ(circumference(Rational(2), Stage::Susa), Rational(25, 4));
  EXPECT_EQ(circumference(Rational(1), Stage::Ptolemy), Rational(377, 120));
  const Measure m = circumference(Rational(1), Stage::Modern);
  EXPECT_FALSE(m.is_rational());
  EXPECT_LT(abs(m.real() - Real("3.14159265358979323846")), Real("1e-19"));
  EXPECT_EQ(code_of([] { circumference(Rational(0), Stage::Susa); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { circumference(Rational(-1), Stage::Hexagon); }), ErrorCode::Domain);
}

TEST(Circle, OneTwentyFifthOfACircle) {
  const Measure arc = arc_length(Rational(25), Rational(1), Stage::Susa);
  EXPECT_EQ(arc, Rational(1, 4));
  EXPECT_EQ(FloatingNumber::from_rational(arc.rational()).str(), "15");
  EXPECT_EQ(FloatingNumber::from_rational(hexagon_part(arc.rational())).str(), "14;24");
  EXPECT_EQ(arc_from_hexagon_part(Rational(6, 25)), Rational(1, 4));
  // 2 pi / 25, reference digits.
  const Measure modern = arc_length(Rational(25), Rational(1), Stage::Modern);
  EXPECT_LT(abs(modern.real() - Real("0.251327412287183459")), Real("1e-17"));
  EXPECT_EQ(arc_length(Rational(6), Rational(1), Stage::Hexagon), Rational(1));
}

TEST(Circle, AreaStages) {
  EXPECT_EQ(area_from_circumference(Rational(3), Stage::Hexagon), Rational(3, 4));
  EXPECT_EQ(area_from_circumference(Rational(5), Stage::Susa), Rational(2));
  EXPECT_EQ(area_from_circumference(Rational(377, 120), Stage::Ptolemy), Rational(377, 480));
  const Measure modern = area_from_circumference(Rational(2), Stage::Modern);
  EXPECT_LT(abs(modern.real() - Real("0.318309886183790671538")), Real("1e-20"));
}

TEST(Circle, PerimeterFromArea) {
  const Measure p = perimeter_from_area(Rational(25, 2));
  EXPECT_TRUE(p.is_exact());
  EXPECT_EQ(p, Rational(12));
  const Measure approx = perimeter_from_area(Rational(1));
  EXPECT_TRUE(approx.is_rational());
  EXPECT_FALSE(approx.is_exact());
  EXPECT_FALSE(approx == approx.rational());
  EXPECT_EQ(approx.str().front(), '~');
  EXPECT_EQ(code_of([] { perimeter_from_area(Rational(0)); }), ErrorCode::Domain);
}

TEST(Circle, SagittaAndChord) {
  EXPECT_EQ(sagitta(Rational(5), Rational(8)), Rational(2));
  EXPECT_EQ(sagitta(Rational(5), Rational(10)), Rational(5));
  EXPECT_EQ(chord_from_sagitta(Rational(5), Rational(2)), Rational(8));
  EXPECT_EQ(chord_from_sagitta(Rational(5), Rational(0)), Rational(0));
  EXPECT_EQ(chord_from_sagitta(Rational(5), Rational(5)), Rational(10));
  EXPECT_EQ(code_of([] { sagitta(Rational(5), Rational(11)); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { chord_from_sagitta(Rational(5), Rational(6)); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { chord_from_sagitta(Rational(5), Rational(-1)); }), ErrorCode::Domain);
}

TEST(Circle, EratosthenesFraction) {
  const CircleFraction susa = circle_fraction_from_chord(Rational::parse("15.16"), Rational(120), Stage::Susa);
  EXPECT_EQ(susa.sectors, Rational(18750, 379));
  EXPECT_GE(susa.nearest, 49);
  EXPECT_LE(susa.nearest, 50);
  const CircleFraction modern = circle_fraction_from_chord(Rational::parse("15.16"), Rational(120), Stage::Modern);
  EXPECT_EQ(modern.nearest, 50);
  EXPECT_LT(abs(modern.sectors.real() - Real("49.7349760462763")), Real("1e-12"));
}

TEST(Circle, StageOrdering) {
  auto g = testing::rng(20);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational d = testing::random_positive(g);
    const Rational h = circumference(d, Stage::Hexagon).rational();
    const Rational s = circumference(d, Stage::Susa).rational();
    const Rational p = circumference(d, Stage::Ptolemy).rational();
    const Real m = circumference(d, Stage::Modern).real();
    ASSERT_LT(h, s);
    ASSERT_LT(s.to_real(), m);
    ASSERT_LT(m, p.to_real());
  }
}

TEST(Properties, DiameterInvertsCircumference) {
  auto g = testing::rng(21);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational d = testing::random_positive(g);
    for (Stage stage : kExactStages) {
      ASSERT_EQ(diameter_from_circumference(circumference(d, stage).rational(), stage), d);
    }
    const Real back = diameter_from_circumference(Rational(1), Stage::Modern).real() *
                      circumference(Rational(1), Stage::Modern).real();
    ASSERT_LT(abs(back - 1), Real("1e-40"));
  }
}

TEST(Properties, SectorCountInvertsArcLength) {
  auto g = testing::rng(22);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational n(testing::uniform(g, 1, 400));
    const Rational r = testing::random_positive(g, 500, 60);
    for (Stage stage : kExactStages) {
      const Measure arc = arc_length(n, r, stage);
      ASSERT_EQ(sector_count(arc.rational(), r, stage), n);
    }
    const Rational modern_arc = Rational::parse(format_real(arc_length(n, r, Stage::Modern).real(), 40));
    ASSERT_LT(abs(sector_count(modern_arc, r, Stage::Modern).real() - n.to_real()), Real("1e-30"));
  }
}

TEST(Properties, HexagonPartRoundTrip) {
  auto g = testing::rng(23);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational b = testing::random_positive(g);
    ASSERT_EQ(arc_from_hexagon_part(hexagon_part(b)), b);
  }
}

// Perimeter of area of circumference returns 3d for any diameter.
TEST(Properties, LogClosure) {
  auto g = testing::rng(24);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational d = i < 3 ? Rational(std::array{1, 2, 4}[static_cast<std::size_t>(i)]) : testing::random_positive(g);
    const Rational c = circumference(d, Stage::Susa).rational();
    const Rational a = area_from_circumference(c, Stage::Susa).rational();
    const Measure p = perimeter_from_area(a);
    ASSERT_TRUE(p.is_exact()) << d;
    ASSERT_EQ(p, Rational(3) * d) << d;
    ASSERT_EQ(a * Rational(25, 2), c * c);
  }
}

TEST(Properties, SagittaIdentityOnExactBranch) {
  auto g = testing::rng(25);
  for (int i = 0; i < testing::kCases; ++i) {
    // Scaled Pythagorean triples keep the root rational.
    const int m = testing::uniform(g, 2, 40), n = testing::uniform(g, 1, m - 1);
    const Rational k = testing::random_positive(g, 50, 50);
    const Rational half_chord = k * Rational(2 * m * n), leg = k * Rational(m * m - n * n);
    const Rational r = k * Rational(m * m + n * n);
    for (const Rational& chord : {2 * half_chord, 2 * leg}) {
      const Measure s = sagitta(r, chord);
      ASSERT_TRUE(s.is_exact());
      const Rational sv = s.rational();
      ASSERT_EQ((r - sv) * (r - sv) + (chord / 2) * (chord / 2), r * r);
      ASSERT_EQ(chord_from_sagitta(r, sv), chord);
    }
  }
}

TEST(Properties, SagittaApproximateBranchIsClose) {
  auto g = testing::rng(26);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational r = testing::random_positive(g, 1000, 10);
    const Rational chord = r * Rational(testing::uniform(g, 1, 199), 100);
    const Measure s = sagitta(r, chord);
    const Rational sv = s.rational();
    const Rational residual = ((r - sv) * (r - sv) + (chord / 2) * (chord / 2) - r * r).abs() / (r * r);
    ASSERT_LT(residual, Rational(1, 1'000'000'000)) << r << " " << chord;
  }
}

TEST(Properties, ScaleEquivarianceBySixty) {
  auto g = testing::rng(27);
  const Rational k(60);
  for (int i = 0; i < testing::kCases; ++i) {
    const Rational d = testing::random_positive(g);
    for (Stage stage : kExactStages) {
      const Rational c = circumference(d, stage).rational();
      ASSERT_EQ(circumference(k * d, stage), k * c);
      ASSERT_EQ(area_from_circumference(k * c, stage), k * k * area_from_circumference(c, stage).rational());
      ASSERT_EQ(arc_length(Rational(25), k * d, stage), k * arc_length(Rational(25), d, stage).rational());
    }
  }
}

TEST(Measure, Rendering) {
  EXPECT_EQ(Measure(Rational(25, 4)).str(), "25/4");
  EXPECT_EQ(code_of([] { Measure(Real(2)).rational(); }), ErrorCode::Domain);
  EXPECT_EQ(Measure(Real("0.5")).str().substr(0, 5), "~0.50");
}

}  // namespace
}  // namespace xi
