// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/circle.hpp"
#include "xi/constants.hpp"
#include "xi/sexagesimal.hpp"

#include <string>
#include <vector>

namespace xi {

struct DmsAngle {
  BigInt degrees = 0;
  int arcminutes = 0;
  int arcseconds = 0;

  /// Throws Error{Domain} for a negative count.
  static DmsAngle from_arcseconds(const BigInt& total);
  BigInt total_arcseconds() const { return degrees * 3600 + arcminutes * 60 + arcseconds; }

  /// 0°29'55"
  std::string str() const;

  friend bool operator==(const DmsAngle&, const DmsAngle&) = default;
};

/// Stretch factor of a stage: 1, 25/24, 377/360, or pi/3 for modern.
Measure xi_for_stage(Stage stage, const Formulary& f = Formulary::standard());

/// 360/377 cut to two sexagesimal places with nearest rounding: 0;57,18.
/// 1;2;50 has no finite reciprocal, so this is the working value.
PinnedNumber ptolemy_working_reciprocal(const Formulary& f = Formulary::standard());

/// Chord reading in arcminutes times `factor`, rounded to whole arcseconds.
/// The defaults reproduce the corrected lunar diameters (nearest rounding,
/// half away from zero). Throws Error{Domain} for nonpositive input.
DmsAngle chord_minutes_to_dms(const Rational& arcminutes, const Rational& factor, Rounding rounding);
DmsAngle chord_minutes_to_dms(const Rational& arcminutes);
/// Floating digits read with the first digit in the arcminute place.
DmsAngle chord_minutes_to_dms(const FloatingNumber& arcminutes);

Rational average_pair(const Rational& a, const Rational& b);

struct RefinementStageError {
  Stage stage;
  Measure xi;
  /// (pi/3 - xi) / (pi/3); signed.
  Real relative_error;
  /// xi / 60 against pi / 180.
  Real per_degree;
  Real per_degree_relative_error;
};

/// Susa and Ptolemy stages, in that order.
std::vector<RefinementStageError> refinement_ladder(const Formulary& f = Formulary::standard());

struct EquivalenceRow {
  std::string label;
  PinnedNumber babylonian;
  RealApprox modern;
  /// babylonian - modern
  Real absolute_difference;
  /// (babylonian - modern) / modern
  Real relative_difference;
};

/// 1;2;30 against pi/3, 0;1,2,30 against pi/180, 57;36 against 180/pi.
std::vector<EquivalenceRow> radian_equivalents(const Formulary& f = Formulary::standard());

}  // namespace xi
