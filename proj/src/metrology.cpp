// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/metrology.hpp"

#include "xi/error.hpp"

namespace xi {

std::string_view to_string(UnitSystem system) {
  return system == UnitSystem::Nippur ? "nippur" : "gudea";
}

std::string_view to_string(LengthUnit unit) {
  switch (unit) {
    case LengthUnit::Finger: return "finger";
    case LengthUnit::Cubit: return "cubit";
    case LengthUnit::Ninda: return "ninda";
  }
  return "?";
}

UnitSystem parse_unit_system(std::string_view text) {
  if (text == "nippur") return UnitSystem::Nippur;
  if (text == "gudea") return UnitSystem::Gudea;
  throw Error(ErrorCode::Parse, "unknown unit system '" + std::string(text) + "' (expected nippur or gudea)");
}

LengthUnit parse_length_unit(std::string_view text) {
  if (text == "finger" || text == "fingers") return LengthUnit::Finger;
  if (text == "cubit" || text == "cubits") return LengthUnit::Cubit;
  if (text == "ninda") return LengthUnit::Ninda;
  throw Error(ErrorCode::Parse, "unknown length unit '" + std::string(text) + "' (expected finger, cubit or ninda)");
}

Rational unit_ratio_to_nippur(UnitSystem system) {
  return system == UnitSystem::Nippur ? Rational(1) : Rational(24, 25);
}

Rational fingers_per(LengthUnit unit) {
  switch (unit) {
    case LengthUnit::Finger: return 1;
    case LengthUnit::Cubit: return 30;
    case LengthUnit::Ninda: return 360;
  }
  return 1;
}

LengthQuantity::LengthQuantity(Rational magnitude, LengthUnit unit, UnitSystem system)
    : magnitude_(std::move(magnitude)), unit_(unit), system_(system) {
  if (!magnitude_.is_positive()) {
    throw Error(ErrorCode::Domain, "length must be positive, got " + magnitude_.str());
  }
}

std::string LengthQuantity::str() const {
  return magnitude_.str() + " " + std::string(to_string(system_)) + " " + std::string(to_string(unit_));
}

Rational to_base_fingers(const LengthQuantity& q) { return q.magnitude() * fingers_per(q.unit()); }

LengthQuantity convert_unit(const LengthQuantity& q, LengthUnit target) {
  return LengthQuantity(to_base_fingers(q) / fingers_per(target), target, q.system());
}

LengthQuantity convert_system(const LengthQuantity& q, UnitSystem target, const Rational& gudea_ratio) {
  if (q.system() == target) return q;
  // magnitude * (source unit in Nippur units) / (target unit in Nippur units)
  const Rational factor = target == UnitSystem::Gudea ? gudea_ratio.reciprocal() : gudea_ratio;
  return LengthQuantity(q.magnitude() * factor, q.unit(), target);
}

VerificationReport gudea_circle_cross_check(Stage stage, const Rational& gudea_ratio, const Formulary& f) {
  VerificationReport report;
  const LengthQuantity diameter(4, LengthUnit::Cubit, UnitSystem::Gudea);
  const Rational diameter_fingers = to_base_fingers(diameter);
  report.add("metrology.diameter_fingers", "diameter of 4 cubits", "120", diameter_fingers.str(),
             diameter_fingers == Rational(120));

  const Measure c = circumference(diameter_fingers, stage, f);
  const std::string stage_name(to_string(stage));
  report.add("metrology.gudea_circumference", "circumference of a 120-finger Gudea diameter, " + stage_name,
             "375 gudea finger", c.str() + " gudea finger", c == Rational(375));

  std::string nippur_text = c.str();
  bool nippur_ok = false;
  if (c.is_rational()) {
    const LengthQuantity nippur =
        convert_system(LengthQuantity(c.rational(), LengthUnit::Finger, UnitSystem::Gudea), UnitSystem::Nippur,
                       gudea_ratio);
    nippur_text = nippur.magnitude().str();
    nippur_ok = c.is_exact() && nippur.magnitude() == Rational(360);
  }
  report.add("metrology.nippur_circumference", "same circumference in Nippur fingers", "360 nippur finger",
             nippur_text + " nippur finger", nippur_ok);
  return report;
}

}  // namespace xi
