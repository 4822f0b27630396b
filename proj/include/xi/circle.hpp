// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/rational.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace xi {

class Registry;

/// Which circle constant governs a computation: hexagon 3, Susa 25/8,
/// Ptolemy 377/120 or the modern pi.
enum class Stage { Hexagon, Susa, Ptolemy, Modern };

std::string_view to_string(Stage stage);
/// Accepts "1", "2", "ptolemy", "modern" (and the enum names in lowercase).
Stage parse_stage(std::string_view text);

/// Result of a formulary computation: an exact rational, a rational
/// approximation from a square root, or a decimal value for the modern stage.
class Measure {
 public:
  Measure(Rational value, bool exact = true) : value_(std::move(value)), exact_(exact) {}  // NOLINT
  Measure(Real value) : value_(std::move(value)), exact_(false) {}                          // NOLINT

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  bool is_exact() const { return exact_; }

  /// Throws Error{Domain} for a modern-stage decimal.
  const Rational& rational() const;
  Real real() const;

  /// "25/4" for exact values, "~<decimal>" otherwise.
  std::string str() const;

  friend bool operator==(const Measure& m, const Rational& q) { return m.is_rational() && m.exact_ && m.rational() == q; }

 private:
  std::variant<Rational, Real> value_;
  bool exact_;
};

/// The coefficient set behind the formulary. The standard set holds the
/// built-in registry values; `from_registry` lets a modified registry flow
/// through every computation.
struct Formulary {
  Rational hexagon;   // 3
  Rational six;       // 6
  Rational twelve;    // 12
  Rational third;     // 0;20
  Rational area1;     // 0;5
  Rational stretch;   // 1;2;30
  Rational shrink;    // 0;57,36
  Rational stretch2;  // 1;2;50

  static const Formulary& standard();
  static Formulary from_registry(const Registry& registry);

  /// Stretch factor per stage: 1, 1;2;30, 1;2;50. Modern has none here.
  Rational xi(Stage stage) const;
};

// Every operation throws Error{Domain} for nonpositive magnitudes.

Measure circumference(const Rational& diameter, Stage stage, const Formulary& f = Formulary::standard());
Measure diameter_from_circumference(const Rational& c, Stage stage, const Formulary& f = Formulary::standard());

/// b = (6/N * r) * xi(stage).
Measure arc_length(const Rational& sectors, const Rational& radius, Stage stage,
                   const Formulary& f = Formulary::standard());
/// Inverse of arc_length; the Susa stage follows N = 6 r / (b * 57;36).
Measure sector_count(const Rational& arc, const Rational& radius, Stage stage,
                     const Formulary& f = Formulary::standard());

/// h = b * 57;36.
Rational hexagon_part(const Rational& arc, const Formulary& f = Formulary::standard());
/// b = h * 1;2;30 * r; the radius multiplies after stretching.
Rational arc_from_hexagon_part(const Rational& hexagon_part, const Rational& radius = Rational(1),
                               const Formulary& f = Formulary::standard());

/// Hexagon stage c^2 * 0;5, Susa c^2 * 0;5 * 0;57,36 (= c^2 * 0;4,48),
/// Ptolemy c^2 / (4 * 3;8,30), modern c^2 / (4 pi).
Measure area_from_circumference(const Rational& c, Stage stage, const Formulary& f = Formulary::standard());

/// Stage-1 perimeter 3d = 57;36 * sqrt(A * 12 * 1;2;30).
Measure perimeter_from_area(const Rational& area, const Formulary& f = Formulary::standard());

/// s = r - sqrt(r^2 - (chord/2)^2). Requires 0 < chord <= 2r.
Measure sagitta(const Rational& radius, const Rational& chord);
/// chord = 2 sqrt(2 r s - s^2). Requires 0 <= s <= r.
Measure chord_from_sagitta(const Rational& radius, const Rational& sagitta);

struct CircleFraction {
  Measure sectors;
  BigInt nearest;
};

/// N = circumference(2r) / chord, treating the chord as the arc.
CircleFraction circle_fraction_from_chord(const Rational& chord, const Rational& radius, Stage stage,
                                          const Formulary& f = Formulary::standard());

}  // namespace xi
