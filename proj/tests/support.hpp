// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/error.hpp"
#include "xi/rational.hpp"
#include "xi/sexagesimal.hpp"

#include <optional>
#include <random>
#include <vector>

namespace xi::testing {

constexpr int kCases = 1000;

// Code of the xi::Error thrown by f, or nullopt when it returns normally.
inline std::optional<ErrorCode> code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eca9e51ULL ^ salt); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

// 1..max_len places, nonzero first and last digit.
inline FloatingNumber random_floating(std::mt19937_64& g, int max_len = 6) {
  const int len = uniform(g, 1, max_len);
  std::vector<int> d(static_cast<std::size_t>(len));
  for (auto& x : d) x = uniform(g, 0, 59);
  d.front() = uniform(g, 1, 59);
  d.back() = uniform(g, 1, 59);
  return FloatingNumber::from_digits(std::move(d));
}

inline PinnedNumber random_pinned(std::mt19937_64& g, int max_len = 5) {
  const FloatingNumber f = random_floating(g, max_len);
  return pin(f, uniform(g, -4, 3));
}

// 2^a 3^b 5^c with exponents in [-span, span].
inline Rational random_regular(std::mt19937_64& g, int span = 8) {
  Rational q(1);
  for (int p : {2, 3, 5}) q *= Rational(p).pow(uniform(g, -span, span));
  return q;
}

inline Rational random_positive(std::mt19937_64& g, int num_max = 5000, int den_max = 5000) {
  return Rational(BigInt(uniform(g, 1, num_max)), BigInt(uniform(g, 1, den_max)));
}

}  // namespace xi::testing
