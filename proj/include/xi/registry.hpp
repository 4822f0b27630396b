// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "xi/rational.hpp"
#include "xi/report.hpp"
#include "xi/sexagesimal.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace xi {

enum class Role { Stretch, Shrink, Area, Combined, Conversion, Base };

std::string_view to_string(Role role);
/// Throws Error{Parse} for an unknown role name.
Role parse_role(std::string_view text);

/// A named historical coefficient. Tablets write floating digits; the
/// canonical pin gives the default magnitude used by the formulary.
struct CoefficientRecord {
  std::string id;
  FloatingNumber digits;
  int canonical_pin = 0;
  Role role = Role::Base;
  std::string provenance;
  /// Value this record is documented to have at its canonical pin. Only
  /// built-in records carry one.
  std::optional<Rational> documented;

  Rational value() const { return pin(digits, canonical_pin).value(); }

  friend bool operator==(const CoefficientRecord&, const CoefficientRecord&) = default;
};

enum class RuleOp { Multiply, Divide, Reciprocal };

std::string_view to_string(RuleOp op);

/// `result` is expected to equal op(operands...) as floating numbers.
/// Multiply takes the product of all operands, Divide is operands[0] /
/// operands[1], Reciprocal takes a single operand.
struct DerivationRule {
  std::string id;
  std::vector<std::string> operands;
  RuleOp op = RuleOp::Multiply;
  std::string result;
  std::string anchor;

  friend bool operator==(const DerivationRule&, const DerivationRule&) = default;
};

class Registry {
 public:
  static Registry builtin();

  const std::vector<CoefficientRecord>& records() const { return records_; }
  const std::vector<DerivationRule>& rules() const { return rules_; }

  const CoefficientRecord* find(std::string_view id) const;
  /// Throws Error{UnknownName}.
  const CoefficientRecord& lookup(std::string_view id) const;
  Rational value(std::string_view id) const { return lookup(id).value(); }

  /// Adds the record, replacing any record with the same id. Returns true
  /// when a record was replaced.
  bool put(CoefficientRecord record);
  void add_rule(DerivationRule rule);

  friend bool operator==(const Registry&, const Registry&) = default;

 private:
  std::vector<CoefficientRecord> records_;
  std::vector<DerivationRule> rules_;
};

/// Evaluates every rule in exact arithmetic. A reciprocal of an irregular
/// operand is reported as not applicable. Records carrying a documented
/// value are checked against their canonical pin as well.
/// Throws Error{Structure} when a rule names an unknown id.
VerificationReport verify_derivations(const Registry& registry);

struct CorpusIssue {
  int line = 0;
  std::string message;
};

struct CorpusLoad {
  Registry registry;
  std::vector<CorpusIssue> warnings;
  std::vector<CorpusIssue> errors;
};

/// Parses corpus text (id TAB digits TAB role TAB provenance per line, '#'
/// comments, blank lines ignored) and merges it over the built-ins. Bad
/// lines land in `errors` and are skipped; duplicates land in `warnings`
/// and the later record wins.
CorpusLoad parse_corpus(std::string_view text);

/// Reads and parses a corpus file. Throws Error{Io} if unreadable.
CorpusLoad read_corpus(const std::filesystem::path& path);

/// Like read_corpus but throws Error{Corpus} listing every bad line.
CorpusLoad load_corpus(const std::filesystem::path& path);

}  // namespace xi
