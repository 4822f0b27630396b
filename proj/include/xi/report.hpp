// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace xi {

enum class CheckStatus { Pass, Fail, NotApplicable };

std::string_view to_string(CheckStatus status);

struct CheckEntry {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::Fail;
};

/// Ordered collection of check outcomes. Entries are kept sorted by id
/// (stable for equal ids), so rendering is deterministic.
class VerificationReport {
 public:
  void add(CheckEntry entry);
  void add(std::string id, std::string anchor, std::string expected, std::string actual, bool pass);
  void merge(const VerificationReport& other);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(std::string_view id) const;

  std::size_t passed() const { return count(CheckStatus::Pass); }
  std::size_t failed() const { return count(CheckStatus::Fail); }
  std::size_t not_applicable() const { return count(CheckStatus::NotApplicable); }
  bool ok() const { return failed() == 0; }

  std::string render_text() const;
  /// One TAB-separated line per entry: id, status, expected, actual, anchor.
  std::string render_records() const;

 private:
  std::size_t count(CheckStatus status) const;

  std::vector<CheckEntry> entries_;
};

enum class OutputFormat { Text, Records };

/// Renders rows either as space-aligned columns (first row is the header)
/// or as TAB-separated records. Widths count UTF-8 code points.
std::string render_rows(const std::vector<std::vector<std::string>>& rows, OutputFormat format);

}  // namespace xi
