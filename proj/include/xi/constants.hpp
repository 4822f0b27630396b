// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/rational.hpp"

#include <string>
#include <string_view>

namespace xi {

struct RealApprox {
  Real value;
  std::string source;
};

// Known names: pi, pi_over_3, pi_over_180, deg_per_radian.
// Stored as 50-digit literals. Throws Error{UnknownName}.
RealApprox modern_constant(std::string_view name);

}  // namespace xi
