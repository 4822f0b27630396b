// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/report.hpp"

#include <algorithm>

namespace xi {

namespace {

std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

void VerificationReport::add(CheckEntry entry) {
  const auto pos = std::upper_bound(entries_.begin(), entries_.end(), entry.id,
                                    [](const std::string& id, const CheckEntry& e) { return id < e.id; });
  entries_.insert(pos, std::move(entry));
}

void VerificationReport::add(std::string id, std::string anchor, std::string expected, std::string actual,
                             bool pass) {
  add(CheckEntry{std::move(id), std::move(anchor), std::move(expected), std::move(actual),
                 pass ? CheckStatus::Pass : CheckStatus::Fail});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& e : other.entries_) add(e);
}

const CheckEntry* VerificationReport::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

std::string VerificationReport::render_text() const {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"status", "check", "expected", "actual", "anchor"});
  for (const auto& e : entries_) {
    rows.push_back({std::string(to_string(e.status)), e.id, e.expected, e.actual, e.anchor});
  }
  std::string out = render_rows(rows, OutputFormat::Text);
  out += std::to_string(entries_.size()) + " checks: " + std::to_string(passed()) + " passed, " +
         std::to_string(failed()) + " failed, " + std::to_string(not_applicable()) + " not applicable\n";
  return out;
}

std::string VerificationReport::render_records() const {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : entries_) {
    rows.push_back({e.id, std::string(to_string(e.status)), e.expected, e.actual, e.anchor});
  }
  return render_rows(rows, OutputFormat::Records);
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows, OutputFormat format) {
  std::string out;
  if (format == OutputFormat::Records) {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) out += '\t';
        out += row[i];
      }
      out += '\n';
    }
    return out;
  }

  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line.append(widths[i] - display_width(row[i]) + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace xi
