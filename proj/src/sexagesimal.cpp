// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/sexagesimal.hpp"

#include "xi/error.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace xi {

namespace {

constexpr int kBase = 60;

void check_digits(const std::vector<int>& digits) {
  for (int d : digits) {
    if (d < 0 || d >= kBase) throw Error(ErrorCode::Argument, "digit " + std::to_string(d) + " outside 0..59");
  }
}

// Splits `text` on `sep` and parses each token as a base-60 digit.
// `offset` is the position of text[0] in `whole` for diagnostics.
std::vector<int> parse_places(std::string_view text, char sep, std::string_view whole, std::size_t offset) {
  std::vector<int> digits;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    const std::string_view token = text.substr(start, end - start);
    const std::size_t pos = offset + start + 1;
    if (token.empty()) {
      throw Error(ErrorCode::Parse, "empty place at position " + std::to_string(pos) + " in '" +
                                        std::string(whole) + "'");
    }
    int value = 0;
    for (std::size_t i = 0; i < token.size(); ++i) {
      const char c = token[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::Parse, "unexpected character '" + std::string(1, c) + "' at position " +
                                          std::to_string(pos + i) + " in '" + std::string(whole) + "'");
      }
      value = value * 10 + (c - '0');
      if (value >= kBase) {
        throw Error(ErrorCode::Parse, "digit '" + std::string(token) + "' at position " +
                                          std::to_string(pos) + " is not below 60 in '" +
                                          std::string(whole) + "'");
      }
    }
    digits.push_back(value);
    if (end == text.size()) break;
    start = end + 1;
  }
  return digits;
}

// Base-60 digits of a positive integer, most significant first.
std::vector<int> integer_digits(BigInt value) {
  std::vector<int> digits;
  while (value > 0) {
    digits.push_back(static_cast<int>(value % kBase));
    value /= kBase;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational power_of_base(int exponent) { return Rational(kBase).pow(exponent); }

void join(std::string& out, std::span<const int> digits, char sep) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(digits[i]);
  }
}

}  // namespace

// FloatingNumber

FloatingNumber FloatingNumber::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty sexagesimal number");
  return from_digits(parse_places(text, ';', text, 0));
}

FloatingNumber FloatingNumber::from_digits(std::vector<int> digits) {
  check_digits(digits);
  const auto first = std::find_if(digits.begin(), digits.end(), [](int d) { return d != 0; });
  if (first == digits.end()) throw Error(ErrorCode::Domain, "zero is not a sexagesimal number here");
  const auto last = std::find_if(digits.rbegin(), digits.rend(), [](int d) { return d != 0; }).base();
  return FloatingNumber(std::vector<int>(first, last));
}

FloatingNumber FloatingNumber::from_rational(const Rational& q) {
  if (!q.is_positive()) throw Error(ErrorCode::Domain, "expected a positive value, got " + q.str());
  BigInt den = q.denominator();
  int twos = 0, threes = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 3 == 0) { den /= 3; ++threes; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) {
    throw Error(ErrorCode::Irregular, q.str() + " has no finite sexagesimal expansion (factor " +
                                          irregular_factor(Rational(1, q.denominator()))->str() + ")");
  }
  const int places = std::max({(twos + 1) / 2, threes, fives});
  const Rational scaled = q * power_of_base(places);
  return from_digits(integer_digits(scaled.numerator()));
}

Rational FloatingNumber::value() const { return pin(*this, 0).value(); }

bool FloatingNumber::is_regular() const { return xi::is_regular(value()); }

std::string FloatingNumber::str() const {
  std::string out;
  join(out, digits_, ';');
  return out;
}

// PinnedNumber

PinnedNumber::PinnedNumber(std::vector<int> digits, int integer_places) {
  check_digits(digits);
  const auto first = std::find_if(digits.begin(), digits.end(), [](int d) { return d != 0; });
  if (first == digits.end()) throw Error(ErrorCode::Domain, "zero is not a sexagesimal number here");
  const auto last = std::find_if(digits.rbegin(), digits.rend(), [](int d) { return d != 0; }).base();
  integer_places_ = integer_places - static_cast<int>(first - digits.begin());
  digits_.assign(first, last);
}

PinnedNumber PinnedNumber::parse(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::Parse, "empty sexagesimal number");
  const std::size_t radix = text.find(';');
  std::vector<int> digits = parse_places(text.substr(0, radix), ',', text, 0);
  const int integer_places = static_cast<int>(digits.size());
  if (radix != std::string_view::npos) {
    const auto frac = parse_places(text.substr(radix + 1), ',', text, radix + 1);
    digits.insert(digits.end(), frac.begin(), frac.end());
  }
  return PinnedNumber(std::move(digits), integer_places);
}

Rational PinnedNumber::value() const {
  BigInt whole = 0;
  for (int d : digits_) whole = whole * kBase + d;
  return Rational(std::move(whole), 1) * power_of_base(integer_places_ - static_cast<int>(digits_.size()));
}

FloatingNumber PinnedNumber::floating() const { return FloatingNumber::from_digits(digits_); }

std::string PinnedNumber::str() const {
  const int n = static_cast<int>(digits_.size());
  // Place exponent e holds digits_[integer_places_ - 1 - e], zero outside.
  auto digit_at = [&](int e) {
    const int i = integer_places_ - 1 - e;
    return (i >= 0 && i < n) ? digits_[static_cast<std::size_t>(i)] : 0;
  };
  std::vector<int> whole;
  for (int e = integer_places_ - 1; e >= 0; --e) whole.push_back(digit_at(e));
  if (whole.empty()) whole.push_back(0);
  std::vector<int> frac;
  for (int e = -1; e >= integer_places_ - n; --e) frac.push_back(digit_at(e));

  std::string out;
  join(out, whole, ',');
  if (!frac.empty()) {
    out += ';';
    join(out, frac, ',');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FloatingNumber& n) { return os << n.str(); }
std::ostream& operator<<(std::ostream& os, const PinnedNumber& n) { return os << n.str(); }

// Operations

PinnedNumber pin(const FloatingNumber& n, int exponent) {
  const auto d = n.digits();
  return PinnedNumber(std::vector<int>(d.begin(), d.end()), exponent + 1);
}

FloatingNumber multiply(const FloatingNumber& a, const FloatingNumber& b) {
  const auto x = a.digits();
  const auto y = b.digits();
  // Column sums, least significant column last; each column stays far below
  // int overflow for any realistic length.
  std::vector<long long> columns(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) columns[i + j] += static_cast<long long>(x[i]) * y[j];
  }
  std::vector<int> out(columns.size(), 0);
  long long carry = 0;
  for (std::size_t k = columns.size(); k-- > 0;) {
    const long long sum = columns[k] + carry;
    out[k] = static_cast<int>(sum % kBase);
    carry = sum / kBase;
  }
  std::vector<int> head;
  while (carry > 0) {
    head.push_back(static_cast<int>(carry % kBase));
    carry /= kBase;
  }
  std::reverse(head.begin(), head.end());
  out.insert(out.begin(), head.begin(), head.end());
  return FloatingNumber::from_digits(std::move(out));
}

PinnedNumber add(const PinnedNumber& a, const PinnedNumber& b) {
  auto low = [](const PinnedNumber& p) { return p.integer_places() - static_cast<int>(p.digits().size()); };
  const int lo = std::min(low(a), low(b));
  const int hi = std::max(a.integer_places(), b.integer_places());
  // sum[i] holds place exponent hi - 1 - i.
  std::vector<int> sum(static_cast<std::size_t>(hi - lo), 0);
  for (const PinnedNumber* p : {&a, &b}) {
    const auto d = p->digits();
    const int offset = hi - p->integer_places();
    for (std::size_t i = 0; i < d.size(); ++i) sum[static_cast<std::size_t>(offset) + i] += d[i];
  }
  int carry = 0;
  for (std::size_t k = sum.size(); k-- > 0;) {
    const int s = sum[k] + carry;
    sum[k] = s % kBase;
    carry = s / kBase;
  }
  int integer_places = hi;
  if (carry > 0) {
    sum.insert(sum.begin(), carry);
    ++integer_places;
  }
  return PinnedNumber(std::move(sum), integer_places);
}

FloatingNumber reciprocal(const FloatingNumber& n) {
  const Rational q = n.value();
  if (auto factor = irregular_factor(q)) {
    throw Error(ErrorCode::Irregular,
                n.str() + " is not regular: prime factor " + factor->str() + " has no finite reciprocal");
  }
  return FloatingNumber::from_rational(q.reciprocal());
}

Expansion from_rational(const Rational& q, int max_places, Rounding rounding) {
  if (max_places < 1) throw Error(ErrorCode::Argument, "max_places must be at least 1");
  if (!q.is_positive()) throw Error(ErrorCode::Domain, "expected a positive value, got " + q.str());
  const Rational scaled = q * power_of_base(max_places);
  BigInt whole = scaled.floor();
  const bool truncated = !scaled.is_integer();
  if (truncated && rounding == Rounding::Nearest && (scaled - Rational(whole, 1)) * 2 >= Rational(1)) {
    whole += 1;
  }
  if (whole == 0) {
    throw Error(ErrorCode::Domain, q.str() + " vanishes at " + std::to_string(max_places) + " places");
  }
  std::vector<int> digits = integer_digits(std::move(whole));
  const int integer_places = static_cast<int>(digits.size()) - max_places;
  return {PinnedNumber(std::move(digits), integer_places), truncated};
}

}  // namespace xi
