// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/registry.hpp"
#include "xi/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace xi {

/// Replays every identity the library reconstructs: registry derivations,
/// formulary closures at d = 1, 2, 4, the metrology cross-check, the lunar
/// diameter conversions, the 1/25 circle, the Eratosthenes fraction and the
/// refinement ladder. Values flow from `registry`, so a modified coefficient
/// shows up as failures.
VerificationReport run_verification(const Registry& registry);

/// run_verification over the built-ins merged with an optional corpus file.
/// Corpus line errors become failing `corpus.line.N` entries and the run
/// falls back to the built-ins. Throws Error{Io} for an unreadable file.
VerificationReport verify_corpus(const std::optional<std::filesystem::path>& corpus);

/// Table names: formulary, lunar, ladder, equivalents.
/// Throws Error{UnknownName} for anything else.
std::string emit_table(std::string_view name, const Registry& registry, OutputFormat format);

}  // namespace xi
