// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace xi {

enum class ErrorCode {
  Parse,
  Domain,
  Irregular,
  Argument,
  Io,
  Corpus,
  Structure,
  UnknownName,
  DivisionByZero,
};

// Single exception type for the library. The C API maps `code()` onto
// xi_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xi
