// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/constants.hpp"

#include "xi/error.hpp"

#include <array>
#include <utility>

namespace xi {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kConstants{{
    {"pi", "3.1415926535897932384626433832795028841971693993751"},
    {"pi_over_3", "1.0471975511965977461542144610931676280657231331250"},
    {"pi_over_180", "0.017453292519943295769236907684886127134428718885417"},
    {"deg_per_radian", "57.295779513082320876798154814105170332405472466564"},
}};

}  // namespace

RealApprox modern_constant(std::string_view name) {
  for (const auto& [key, digits] : kConstants) {
    if (key == name) return {Real(std::string(digits)), std::string(key)};
  }
  throw Error(ErrorCode::UnknownName, "unknown constant '" + std::string(name) + "'");
}

}  // namespace xi
