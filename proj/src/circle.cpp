// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/circle.hpp"

#include "xi/constants.hpp"
#include "xi/error.hpp"
#include "xi/registry.hpp"

namespace xi {

namespace {

void require_positive(const Rational& q, std::string_view what) {
  if (!q.is_positive()) throw Error(ErrorCode::Domain, std::string(what) + " must be positive, got " + q.str());
}

Real pi() { return modern_constant("pi").value; }
Real pi_over_3() { return modern_constant("pi_over_3").value; }

BigInt nearest_integer(const Measure& m) {
  if (m.is_rational()) return (m.rational() + Rational(1, 2)).floor();
  const Real shifted = boost::multiprecision::floor(m.real() + Real("0.5"));
  return shifted.convert_to<BigInt>();
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::Hexagon: return "hexagon";
    case Stage::Susa: return "susa";
    case Stage::Ptolemy: return "ptolemy";
    case Stage::Modern: return "modern";
  }
  return "?";
}

Stage parse_stage(std::string_view text) {
  if (text == "1" || text == "hexagon") return Stage::Hexagon;
  if (text == "2" || text == "susa") return Stage::Susa;
  if (text == "ptolemy") return Stage::Ptolemy;
  if (text == "modern") return Stage::Modern;
  throw Error(ErrorCode::Parse, "unknown stage '" + std::string(text) + "' (expected 1, 2, ptolemy or modern)");
}

const Rational& Measure::rational() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return *q;
  throw Error(ErrorCode::Domain, "modern-stage value has no exact rational form");
}

Real Measure::real() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->to_real();
  return std::get<Real>(value_);
}

std::string Measure::str() const {
  if (is_rational() && exact_) return rational().str();
  return "~" + format_real(real(), 20);
}

const Formulary& Formulary::standard() {
  static const Formulary standard = from_registry(Registry::builtin());
  return standard;
}

Formulary Formulary::from_registry(const Registry& r) {
  return Formulary{r.value("HEX"),   r.value("SIX"),    r.value("TWELVE"), r.value("THIRD"),
                   r.value("AREA1"), r.value("XI1"),    r.value("SHRINK"), r.value("XI2")};
}

Rational Formulary::xi(Stage stage) const {
  switch (stage) {
    case Stage::Hexagon: return Rational(1);
    case Stage::Susa: return stretch;
    case Stage::Ptolemy: return stretch2;
    case Stage::Modern: break;
  }
  throw Error(ErrorCode::Domain, "the modern stage has no rational stretch factor");
}

Measure circumference(const Rational& diameter, Stage stage, const Formulary& f) {
  require_positive(diameter, "diameter");
  if (stage == Stage::Modern) return diameter.to_real() * pi();
  return diameter * f.hexagon * f.xi(stage);
}

Measure diameter_from_circumference(const Rational& c, Stage stage, const Formulary& f) {
  require_positive(c, "circumference");
  switch (stage) {
    case Stage::Hexagon: return c * f.third;
    case Stage::Susa: return c * f.third * f.shrink;
    case Stage::Ptolemy: return c * f.third / f.stretch2;
    case Stage::Modern: break;
  }
  return c.to_real() / pi();
}

Measure arc_length(const Rational& sectors, const Rational& radius, Stage stage, const Formulary& f) {
  require_positive(sectors, "sector count");
  require_positive(radius, "radius");
  const Rational hexagon_arc = f.six / sectors * radius;
  if (stage == Stage::Modern) return hexagon_arc.to_real() * pi_over_3();
  return hexagon_arc * f.xi(stage);
}

Measure sector_count(const Rational& arc, const Rational& radius, Stage stage, const Formulary& f) {
  require_positive(arc, "arc length");
  require_positive(radius, "radius");
  switch (stage) {
    case Stage::Hexagon: return f.six * radius / arc;
    case Stage::Susa: return f.six * radius / (arc * f.shrink);
    case Stage::Ptolemy: return f.six * radius * f.stretch2 / arc;
    case Stage::Modern: break;
  }
  return (f.six * radius / arc).to_real() * pi_over_3();
}

Rational hexagon_part(const Rational& arc, const Formulary& f) {
  require_positive(arc, "arc length");
  return arc * f.shrink;
}

Rational arc_from_hexagon_part(const Rational& hexagon_part, const Rational& radius, const Formulary& f) {
  require_positive(hexagon_part, "hexagon part");
  require_positive(radius, "radius");
  return hexagon_part * f.stretch * radius;
}

Measure area_from_circumference(const Rational& c, Stage stage, const Formulary& f) {
  require_positive(c, "circumference");
  const Rational square = c * c;
  switch (stage) {
    case Stage::Hexagon: return square * f.area1;
    case Stage::Susa: return square * (f.area1 * f.shrink);
    case Stage::Ptolemy: return square / (4 * f.hexagon * f.stretch2);
    case Stage::Modern: break;
  }
  return square.to_real() / (4 * pi());
}

Measure perimeter_from_area(const Rational& area, const Formulary& f) {
  require_positive(area, "area");
  const SqrtResult root = sqrt_exact_or_approx(area * f.twelve * f.stretch, default_sqrt_tolerance());
  return Measure(f.shrink * root.value, root.exact);
}

Measure sagitta(const Rational& radius, const Rational& chord) {
  require_positive(radius, "radius");
  require_positive(chord, "chord");
  if (chord > 2 * radius) {
    throw Error(ErrorCode::Domain, "chord " + chord.str() + " exceeds the diameter " + (2 * radius).str());
  }
  const Rational half = chord / 2;
  const Rational radicand = radius * radius - half * half;
  if (radicand.is_zero()) return radius;
  const SqrtResult root = sqrt_exact_or_approx(radicand, default_sqrt_tolerance());
  return Measure(radius - root.value, root.exact);
}

Measure chord_from_sagitta(const Rational& radius, const Rational& sagitta) {
  require_positive(radius, "radius");
  if (sagitta.sign() < 0 || sagitta > radius) {
    throw Error(ErrorCode::Domain, "sagitta " + sagitta.str() + " outside [0, " + radius.str() + "]");
  }
  const Rational radicand = 2 * radius * sagitta - sagitta * sagitta;
  if (radicand.is_zero()) return Rational(0);
  const SqrtResult root = sqrt_exact_or_approx(radicand, default_sqrt_tolerance());
  return Measure(2 * root.value, root.exact);
}

CircleFraction circle_fraction_from_chord(const Rational& chord, const Rational& radius, Stage stage,
                                          const Formulary& f) {
  require_positive(chord, "chord");
  require_positive(radius, "radius");
  const Measure c = circumference(2 * radius, stage, f);
  Measure sectors = c.is_rational() ? Measure(c.rational() / chord) : Measure(c.real() / chord.to_real());
  BigInt nearest = nearest_integer(sectors);
  return {std::move(sectors), std::move(nearest)};
}

}  // namespace xi
