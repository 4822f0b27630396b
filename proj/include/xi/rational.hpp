// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace xi {

using BigInt = boost::multiprecision::cpp_int;
using Real = boost::multiprecision::cpp_dec_float_50;

/// Exact fraction in lowest terms with a positive denominator.
///
/// This is the verification medium for every sexagesimal computation. Sign
/// and zero are allowed here; the domain types built on top of it reject
/// nonpositive values where they have to.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(BigInt numerator, BigInt denominator);

  /// Accepts "7", "-7", "25/8", "15.16". Throws Error{Parse}.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_integer() const;

  Rational reciprocal() const;
  Rational abs() const;
  Rational pow(int exponent) const;
  BigInt floor() const;

  Real to_real() const;
  double to_double() const;

  /// "a" for integers, "a/b" otherwise.
  std::string str() const;
  /// Fixed-point decimal with `places` fractional digits, rounded half away
  /// from zero.
  std::string to_decimal(int places) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(boost::multiprecision::cpp_rational value) : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Smallest prime factor of numerator or denominator outside {2, 3, 5}, or
/// nullopt when q is regular. Factors beyond the trial-division bound are
/// reported as the remaining cofactor.
std::optional<BigInt> irregular_factor(const Rational& q);

/// True iff q > 0 and numerator and denominator are 5-smooth.
bool is_regular(const Rational& q);

struct SqrtResult {
  Rational value;
  bool exact = false;
};

/// Exact root when q is the square of a rational; otherwise a Newton
/// approximation with |r^2 - q| / q < rel_tol. Requires 0 < rel_tol <= 1e-6.
SqrtResult sqrt_exact_or_approx(const Rational& q, const Rational& rel_tol);

/// Default tolerance used by the geometry routines.
Rational default_sqrt_tolerance();

/// Decimal with trailing zeros dropped; "..." marks a value that does not
/// terminate within `max_places`.
std::string format_decimal(const Rational& q, int max_places = 12);

/// Decimal rendering of a real with `places` fractional digits.
std::string format_real(const Real& value, int places);

}  // namespace xi
