// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/ptolemy.hpp"

#include "xi/error.hpp"

namespace xi {

namespace {

// Finite pinned form of a value known to be regular.
PinnedNumber exact_pinned(const Rational& q) { return from_rational(q, 64).number; }

}  // namespace

DmsAngle DmsAngle::from_arcseconds(const BigInt& total) {
  if (total < 0) throw Error(ErrorCode::Domain, "negative angle");
  return DmsAngle{total / 3600, static_cast<int>((total / 60) % 60), static_cast<int>(total % 60)};
}

std::string DmsAngle::str() const {
  return degrees.str() + "°" + (arcminutes < 10 ? "0" : "") + std::to_string(arcminutes) + "'" +
         (arcseconds < 10 ? "0" : "") + std::to_string(arcseconds) + "\"";
}

Measure xi_for_stage(Stage stage, const Formulary& f) {
  if (stage == Stage::Modern) return modern_constant("pi_over_3").value;
  return f.xi(stage);
}

PinnedNumber ptolemy_working_reciprocal(const Formulary& f) {
  return from_rational(f.stretch2.reciprocal(), 2, Rounding::Nearest).number;
}

DmsAngle chord_minutes_to_dms(const Rational& arcminutes, const Rational& factor, Rounding rounding) {
  if (!arcminutes.is_positive()) throw Error(ErrorCode::Domain, "arcminute value must be positive");
  const Rational seconds = arcminutes * factor * 60;
  BigInt whole = seconds.floor();
  if (rounding == Rounding::Nearest && (seconds - Rational(whole, 1)) * 2 >= Rational(1)) whole += 1;
  return DmsAngle::from_arcseconds(whole);
}

DmsAngle chord_minutes_to_dms(const Rational& arcminutes) {
  return chord_minutes_to_dms(arcminutes, ptolemy_working_reciprocal().value(), Rounding::Nearest);
}

DmsAngle chord_minutes_to_dms(const FloatingNumber& arcminutes) { return chord_minutes_to_dms(arcminutes.value()); }

Rational average_pair(const Rational& a, const Rational& b) {
  if (!a.is_positive() || !b.is_positive()) throw Error(ErrorCode::Domain, "values must be positive");
  return (a + b) / 2;
}

std::vector<RefinementStageError> refinement_ladder(const Formulary& f) {
  const Real pi3 = modern_constant("pi_over_3").value;
  const Real pi180 = modern_constant("pi_over_180").value;
  std::vector<RefinementStageError> ladder;
  for (Stage stage : {Stage::Susa, Stage::Ptolemy}) {
    const Rational xi = f.xi(stage);
    const Real value = xi.to_real();
    const Real per_degree = (xi / 60).to_real();
    ladder.push_back({stage, xi, (pi3 - value) / pi3, per_degree, (pi180 - per_degree) / pi180});
  }
  return ladder;
}

std::vector<EquivalenceRow> radian_equivalents(const Formulary& f) {
  struct Pairing {
    const char* label;
    Rational value;
    const char* constant;
  };
  const Pairing pairings[] = {
      {"stretch, whole circle", f.stretch, "pi_over_3"},
      {"stretch, one part", f.stretch / 60, "pi_over_180"},
      {"shrink, parts per radian", f.shrink * 60, "deg_per_radian"},
  };
  std::vector<EquivalenceRow> rows;
  for (const auto& p : pairings) {
    RealApprox modern = modern_constant(p.constant);
    const Real diff = p.value.to_real() - modern.value;
    const Real relative = diff / modern.value;
    rows.push_back({p.label, exact_pinned(p.value), std::move(modern), diff, relative});
  }
  return rows;
}

}  // namespace xi
