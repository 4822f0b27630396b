// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/rational.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xi {

/// A base-60 digit string without magnitude: the class {q * 60^k} where q
/// reads the digits with the radix point after the first digit.
///
/// Always normalized: nonempty, first and last digit nonzero, every digit in
/// 0..59. Text form separates places with ';' ("1;2;30").
class FloatingNumber {
 public:
  /// Grammar `digit(';'digit)*`, digit a decimal 0..59 (leading zeros inside
  /// a digit are allowed and dropped). Throws Error{Parse}.
  static FloatingNumber parse(std::string_view text);

  /// Normalizes. Throws Error{Domain} for all-zero input, Error{Argument}
  /// for a digit outside 0..59.
  static FloatingNumber from_digits(std::vector<int> digits);

  /// Digit string of q * 60^k for the k making it a normalized integer.
  /// Requires q > 0 with a 5-smooth denominator, else Error{Irregular}.
  static FloatingNumber from_rational(const Rational& q);

  std::span<const int> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }

  /// Value with the radix point after the first digit (the exponent-0 pin).
  Rational value() const;
  bool is_regular() const;

  std::string str() const;

  friend bool operator==(const FloatingNumber&, const FloatingNumber&) = default;

 private:
  explicit FloatingNumber(std::vector<int> digits) : digits_(std::move(digits)) {}

  std::vector<int> digits_;
};

/// A digit string with a fixed radix position, hence a definite positive
/// rational: value = sum digit[i] * 60^(integer_places - 1 - i).
///
/// Stored with leading and trailing zero digits stripped, so equal values
/// compare equal. Text form uses ',' between places and ';' as the radix
/// point ("1,2;30" is 62.5, "0;57,36" is 24/25).
class PinnedNumber {
 public:
  PinnedNumber(std::vector<int> digits, int integer_places);

  /// Grammar `digit(','digit)* [';' digit(','digit)*]`. Throws Error{Parse}.
  static PinnedNumber parse(std::string_view text);

  std::span<const int> digits() const { return digits_; }
  int integer_places() const { return integer_places_; }

  Rational value() const;
  FloatingNumber floating() const;
  std::string str() const;

  friend bool operator==(const PinnedNumber&, const PinnedNumber&) = default;

 private:
  std::vector<int> digits_;
  int integer_places_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FloatingNumber& n);
std::ostream& operator<<(std::ostream& os, const PinnedNumber& n);

inline std::string format(const FloatingNumber& n) { return n.str(); }
inline std::string format(const PinnedNumber& n) { return n.str(); }

/// Fixes the magnitude of a floating number: value = n.value() * 60^exponent.
PinnedNumber pin(const FloatingNumber& n, int exponent);

/// Product computed digit-wise in base 60, then normalized.
FloatingNumber multiply(const FloatingNumber& a, const FloatingNumber& b);
inline FloatingNumber operator*(const FloatingNumber& a, const FloatingNumber& b) { return multiply(a, b); }

/// Place-aligned base-60 addition with carries.
PinnedNumber add(const PinnedNumber& a, const PinnedNumber& b);
inline PinnedNumber operator+(const PinnedNumber& a, const PinnedNumber& b) { return add(a, b); }

/// Throws Error{Irregular} naming the offending prime when `n` has no
/// finite reciprocal.
FloatingNumber reciprocal(const FloatingNumber& n);

enum class Rounding { Truncate, Nearest };

struct Expansion {
  PinnedNumber number;
  /// Set when the value needed more than the allowed fractional places.
  bool truncated = false;
};

/// Sexagesimal expansion of q > 0 with at most `max_places` fractional
/// places. Exact iff q's expansion terminates within that many places;
/// otherwise cut to `max_places` using `rounding` and flagged.
/// Throws Error{Argument} for max_places < 1, Error{Domain} for q <= 0 or
/// when the cut value is zero.
Expansion from_rational(const Rational& q, int max_places, Rounding rounding = Rounding::Truncate);

inline Rational to_rational(const PinnedNumber& p) { return p.value(); }

}  // namespace xi
