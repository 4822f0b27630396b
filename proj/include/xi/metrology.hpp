// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/circle.hpp"
#include "xi/rational.hpp"
#include "xi/report.hpp"

#include <string>
#include <string_view>

namespace xi {

// Nippur and Gudea length systems. A Gudea unit is 0;57,36 of the Nippur
// unit of the same kind, so one physical length counts 375 Gudea fingers
// where it counts 360 Nippur fingers.

enum class UnitSystem { Nippur, Gudea };
enum class LengthUnit { Finger, Cubit, Ninda };

std::string_view to_string(UnitSystem system);
std::string_view to_string(LengthUnit unit);
UnitSystem parse_unit_system(std::string_view text);
LengthUnit parse_length_unit(std::string_view text);

/// Size of one unit of `system` measured in Nippur units of the same kind.
Rational unit_ratio_to_nippur(UnitSystem system);

/// 1 finger, 30 fingers per cubit, 360 per ninda.
Rational fingers_per(LengthUnit unit);

class LengthQuantity {
 public:
  /// Throws Error{Domain} unless magnitude > 0.
  LengthQuantity(Rational magnitude, LengthUnit unit, UnitSystem system);

  const Rational& magnitude() const { return magnitude_; }
  LengthUnit unit() const { return unit_; }
  UnitSystem system() const { return system_; }

  std::string str() const;

  friend bool operator==(const LengthQuantity&, const LengthQuantity&) = default;

 private:
  Rational magnitude_;
  LengthUnit unit_;
  UnitSystem system_;
};

Rational to_base_fingers(const LengthQuantity& q);

/// Re-expresses the same length in another unit kind of the same system.
LengthQuantity convert_unit(const LengthQuantity& q, LengthUnit target);

/// Preserves physical length; the count rescales by the ratio of units.
/// `gudea_ratio` is the Gudea unit in Nippur units (0;57,36 normally).
LengthQuantity convert_system(const LengthQuantity& q, UnitSystem target,
                              const Rational& gudea_ratio = unit_ratio_to_nippur(UnitSystem::Gudea));

/// A 120-finger Gudea diameter gives 375 Gudea fingers of circumference,
/// which is 360 Nippur fingers. Stage and ratio are parameters so faults
/// can be injected.
VerificationReport gudea_circle_cross_check(Stage stage = Stage::Susa,
                                            const Rational& gudea_ratio = unit_ratio_to_nippur(UnitSystem::Gudea),
                                            const Formulary& f = Formulary::standard());

}  // namespace xi
