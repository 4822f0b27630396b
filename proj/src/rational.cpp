// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/rational.hpp"

#include "xi/error.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace xi {

namespace mp = boost::multiprecision;

namespace {

BigInt parse_unsigned(std::string_view text, std::string_view whole, std::size_t offset) {
  if (text.empty()) {
    throw Error(ErrorCode::Parse, "expected digits at position " + std::to_string(offset + 1) +
                                      " in '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "unexpected character '" + std::string(1, c) +
                                        "' at position " + std::to_string(offset + i + 1) +
                                        " in '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

BigInt pow10(int n) {
  BigInt p = 1;
  for (int i = 0; i < n; ++i) p *= 10;
  return p;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(BigInt numerator, BigInt denominator) {
  if (denominator == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  value_ = mp::cpp_rational(std::move(numerator), std::move(denominator));
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  std::size_t offset = 0;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
    offset = 1;
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_unsigned(body.substr(0, slash), text, offset);
    BigInt den = parse_unsigned(body.substr(slash + 1), text, offset + slash + 1);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    result = Rational(std::move(num), std::move(den));
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot);
    const auto frac = body.substr(dot + 1);
    BigInt int_part = whole.empty() ? BigInt(0) : parse_unsigned(whole, text, offset);
    BigInt frac_part = parse_unsigned(frac, text, offset + dot + 1);
    const BigInt scale = pow10(static_cast<int>(frac.size()));
    result = Rational(int_part * scale + frac_part, scale);
  } else {
    result = Rational(parse_unsigned(body, text, offset), BigInt(1));
  }
  return negative ? -result : result;
}

BigInt Rational::numerator() const { return mp::numerator(value_); }
BigInt Rational::denominator() const { return mp::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

bool Rational::is_integer() const { return denominator() == 1; }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::pow(int exponent) const {
  Rational base = exponent < 0 ? reciprocal() : *this;
  Rational result(1);
  for (int i = 0; i < std::abs(exponent); ++i) result *= base;
  return result;
}

BigInt Rational::floor() const {
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Real Rational::to_real() const {
  return Real(numerator().str()) / Real(denominator().str());
}

double Rational::to_double() const { return to_real().convert_to<double>(); }

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Rational::to_decimal(int places) const {
  const BigInt num = mp::abs(numerator());
  const BigInt den = denominator();
  const BigInt scaled = (2 * num * pow10(places) + den) / (2 * den);
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places)) {
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (sign() < 0 && scaled != 0) digits.insert(0, "-");
  return digits;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mp::cpp_rational(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::optional<BigInt> irregular_factor(const Rational& q) {
  constexpr unsigned kTrialBound = 1'000'000;
  BigInt rest = mp::abs(q.numerator()) * q.denominator();
  if (rest == 0) return BigInt(0);
  for (unsigned p : {2u, 3u, 5u}) {
    while (rest % p == 0) rest /= p;
  }
  if (rest == 1) return std::nullopt;
  for (unsigned p = 7; p <= kTrialBound && BigInt(p) * p <= rest; p += 2) {
    if (rest % p == 0) return BigInt(p);
  }
  return rest;
}

bool is_regular(const Rational& q) { return q.is_positive() && !irregular_factor(q).has_value(); }

Rational default_sqrt_tolerance() { return Rational(1, BigInt("1000000000000000000000000")); }

SqrtResult sqrt_exact_or_approx(const Rational& q, const Rational& rel_tol) {
  if (!q.is_positive()) throw Error(ErrorCode::Domain, "square root of nonpositive value " + q.str());
  if (!rel_tol.is_positive() || rel_tol > Rational(1, 1'000'000)) {
    throw Error(ErrorCode::Argument, "sqrt tolerance must lie in (0, 1e-6]");
  }

  const BigInt num = q.numerator();
  const BigInt den = q.denominator();
  const BigInt num_root = mp::sqrt(num);
  const BigInt den_root = mp::sqrt(den);
  if (num_root * num_root == num && den_root * den_root == den) {
    return {Rational(num_root, den_root), true};
  }

  // Iterates are rounded to m / 2^bits so the fractions stay bounded.
  const BigInt inv_tol = rel_tol.reciprocal().floor() + 1;
  const unsigned bits = 32 + static_cast<unsigned>(mp::msb(inv_tol)) + static_cast<unsigned>(mp::msb(den));
  const BigInt scale = BigInt(1) << bits;
  auto round_iterate = [&](const Rational& x) { return Rational((x * Rational(scale, 1)).floor() + 1, scale); };

  auto residual = [&](const Rational& x) { return (x * x - q).abs(); };
  const Rational target = rel_tol * q;

  Rational x = q >= Rational(1) ? q / 2 : Rational(1);
  Rational res = residual(x);
  for (int iter = 0; iter < 400; ++iter) {
    if (res < target) return {x, false};
    const Rational step = (x * x - q) / (2 * x);
    Rational damping(1);
    Rational next = round_iterate(x - step);
    Rational next_res = residual(next);
    // Halve the step while it fails to reduce the residual.
    while (next_res >= res && damping > Rational(1, 1 << 20)) {
      damping /= 2;
      next = round_iterate(x - damping * step);
      next_res = residual(next);
    }
    if (next_res >= res) break;
    x = std::move(next);
    res = std::move(next_res);
  }
  if (res < target) return {x, false};
  throw Error(ErrorCode::Domain, "square root iteration did not converge for " + q.str());
}

std::string format_decimal(const Rational& q, int max_places) {
  std::string text = q.to_decimal(max_places);
  const bool exact = (q * Rational(pow10(max_places), 1)).is_integer();
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return exact ? text : text + "...";
}

std::string format_real(const Real& value, int places) {
  return value.str(places, std::ios_base::fixed);
}

}  // namespace xi
