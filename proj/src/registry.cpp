// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/registry.hpp"

#include "xi/error.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace xi {

namespace {

struct RoleName {
  Role role;
  std::string_view name;
};

constexpr std::array<RoleName, 6> kRoles{{
    {Role::Stretch, "stretch"},
    {Role::Shrink, "shrink"},
    {Role::Area, "area"},
    {Role::Combined, "combined"},
    {Role::Conversion, "conversion"},
    {Role::Base, "base"},
}};

CoefficientRecord make_record(std::string id, std::string_view digits, int pin, Role role, Rational documented,
                              std::string provenance) {
  return CoefficientRecord{std::move(id), FloatingNumber::parse(digits), pin, role, std::move(provenance),
                           std::move(documented)};
}

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

}  // namespace

std::string_view to_string(Role role) {
  for (const auto& r : kRoles) {
    if (r.role == role) return r.name;
  }
  return "?";
}

Role parse_role(std::string_view text) {
  for (const auto& r : kRoles) {
    if (r.name == text) return r.role;
  }
  throw Error(ErrorCode::Parse, "unknown role '" + std::string(text) + "'");
}

std::string_view to_string(RuleOp op) {
  switch (op) {
    case RuleOp::Multiply: return "multiply";
    case RuleOp::Divide: return "divide";
    case RuleOp::Reciprocal: return "reciprocal";
  }
  return "?";
}

Registry Registry::builtin() {
  Registry r;
  r.put(make_record("XI1", "1;2;30", 0, Role::Stretch, Rational(25, 24),
                    "Nippur/Gudea ratio 375/360; implicit in TMS 1 (Sb 13090)"));
  r.put(make_record("SHRINK", "57;36", -1, Role::Shrink, Rational(24, 25),
                    "TMS 3 (Sb 13089) line 30; YBC 5022 lines 65-66, 'of the rope'"));
  r.put(make_record("PI_SUSA", "3;7;30", 0, Role::Combined, Rational(25, 8),
                    "3 x 1;2;30, circle constant implied by TMS 3 (Sb 13089)"));
  r.put(make_record("AREA2", "4;48", -1, Role::Area, Rational(2, 25),
                    "YBC 7243, coefficient of a log; YBC 8600"));
  r.put(make_record("AREA2_RECIP", "12;30", 0, Role::Area, Rational(25, 2),
                    "YBC 8600, reciprocal of 4;48; also the circumference of a 4-cubit circle "
                    "(one ninda plus half a cubit)"));
  r.put(make_record("DIAM2", "19;12", -1, Role::Conversion, Rational(8, 25),
                    "diameter coefficient 20 x 57;36 of the two-stage formulary"));
  r.put(make_record("HEX_CIRC", "6;15", 0, Role::Combined, Rational(25, 4),
                    "circle around the unit hexagon, 6 / 6;15 = 57;36 (TMS 3, Sb 13089)"));
  r.put(make_record("AREA1", "5", -1, Role::Area, Rational(1, 12),
                    "hexagon-stage area coefficient c^2/12 (YBC 5022, YBC 8600)"));
  r.put(make_record("THIRD", "20", -1, Role::Conversion, Rational(1, 3),
                    "reciprocal of 3, diameter from circumference"));
  r.put(make_record("HEX", "3", 0, Role::Base, Rational(3),
                    "hexagon ratio of circumference to diameter (TMS 2, Sb 13088)"));
  r.put(make_record("SIX", "6", 0, Role::Base, Rational(6),
                    "hexagon perimeter of 360 parts (TMS 2, Sb 13088)"));
  r.put(make_record("TWELVE", "12", 0, Role::Base, Rational(12),
                    "ninda of 12 cubits; radicand factor on YBC 8600"));
  r.put(make_record("XI2", "1;2;50", 0, Role::Stretch, Rational(377, 360),
                    "Ptolemy, Almagest chord tables; no finite reciprocal"));
  r.put(make_record("PI_PTOL", "3;8;30", 0, Role::Combined, Rational(377, 120),
                    "3 x 1;2;50, Ptolemy (Almagest)"));

  r.add_rule({"pi_susa_from_xi1", {"HEX", "XI1"}, RuleOp::Multiply, "PI_SUSA", "3 x 1;2;30 = 3;7;30"});
  r.add_rule({"area2_from_shrink", {"AREA1", "SHRINK"}, RuleOp::Multiply, "AREA2", "5 x 57;36 = 4;48"});
  r.add_rule({"shrink_recip_xi1", {"XI1"}, RuleOp::Reciprocal, "SHRINK", "1/1;2;30 = 57;36"});
  r.add_rule({"area2_recip", {"AREA2"}, RuleOp::Reciprocal, "AREA2_RECIP", "1/4;48 = 12;30 (YBC 8600)"});
  r.add_rule({"diam2_recip_pi_susa", {"PI_SUSA"}, RuleOp::Reciprocal, "DIAM2", "1/3;7;30 = 19;12"});
  r.add_rule({"shrink_hexagon_ratio", {"SIX", "HEX_CIRC"}, RuleOp::Divide, "SHRINK", "6 / 6;15 = 57;36 (TMS 3)"});
  r.add_rule({"shrink_ninda_ratio", {"TWELVE", "AREA2_RECIP"}, RuleOp::Divide, "SHRINK",
              "12 / 12;30 = 57;36 (rope)"});
  r.add_rule({"pi_ptol_from_xi2", {"HEX", "XI2"}, RuleOp::Multiply, "PI_PTOL", "3 x 1;2;50 = 3;8;30"});
  return r;
}

const CoefficientRecord* Registry::find(std::string_view id) const {
  const auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == id; });
  return it == records_.end() ? nullptr : &*it;
}

const CoefficientRecord& Registry::lookup(std::string_view id) const {
  if (const auto* r = find(id)) return *r;
  throw Error(ErrorCode::UnknownName, "no coefficient '" + std::string(id) + "'");
}

bool Registry::put(CoefficientRecord record) {
  const auto it = std::find_if(records_.begin(), records_.end(), [&](const auto& r) { return r.id == record.id; });
  if (it != records_.end()) {
    *it = std::move(record);
    return true;
  }
  records_.push_back(std::move(record));
  return false;
}

void Registry::add_rule(DerivationRule rule) { rules_.push_back(std::move(rule)); }

VerificationReport verify_derivations(const Registry& registry) {
  for (const auto& rule : registry.rules()) {
    const std::size_t arity = rule.operands.size();
    const bool arity_ok = rule.op == RuleOp::Reciprocal ? arity == 1
                          : rule.op == RuleOp::Divide   ? arity == 2
                                                        : arity >= 1;
    if (!arity_ok) throw Error(ErrorCode::Structure, "rule '" + rule.id + "' has the wrong operand count");
    for (const auto& id : rule.operands) {
      if (!registry.find(id)) throw Error(ErrorCode::Structure, "rule '" + rule.id + "' names unknown id '" + id + "'");
    }
    if (!registry.find(rule.result)) {
      throw Error(ErrorCode::Structure, "rule '" + rule.id + "' names unknown id '" + rule.result + "'");
    }
  }

  VerificationReport report;
  for (const auto& rule : registry.rules()) {
    const FloatingNumber& expected = registry.lookup(rule.result).digits;
    CheckEntry entry{"derive." + rule.id, rule.anchor, rule.result + " = " + expected.str(), "",
                     CheckStatus::Fail};
    const CoefficientRecord* inverted = nullptr;
    if (rule.op == RuleOp::Reciprocal) inverted = &registry.lookup(rule.operands[0]);
    if (rule.op == RuleOp::Divide) inverted = &registry.lookup(rule.operands[1]);

    if (inverted && !inverted->digits.is_regular()) {
      entry.actual = inverted->id + " = " + inverted->digits.str() + " is irregular";
      entry.status = CheckStatus::NotApplicable;
      report.add(std::move(entry));
      continue;
    }

    FloatingNumber computed = registry.lookup(rule.operands[0]).digits;
    switch (rule.op) {
      case RuleOp::Multiply:
        for (std::size_t i = 1; i < rule.operands.size(); ++i) {
          computed = multiply(computed, registry.lookup(rule.operands[i]).digits);
        }
        break;
      case RuleOp::Divide:
        computed = multiply(computed, reciprocal(inverted->digits));
        break;
      case RuleOp::Reciprocal:
        computed = reciprocal(computed);
        break;
    }
    entry.actual = computed.str();
    entry.status = computed == expected ? CheckStatus::Pass : CheckStatus::Fail;
    report.add(std::move(entry));
  }

  for (const auto& record : registry.records()) {
    if (!record.documented) continue;
    const Rational actual = record.value();
    report.add("record." + record.id, record.provenance,
               record.digits.str() + " pinned " + std::to_string(record.canonical_pin) + " = " +
                   record.documented->str(),
               actual.str(), actual == *record.documented);
  }
  return report;
}

CorpusLoad parse_corpus(std::string_view text) {
  CorpusLoad load{Registry::builtin(), {}, {}};
  std::vector<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      load.errors.push_back({number, "expected 4 TAB-separated fields, found " + std::to_string(fields.size())});
      continue;
    }
    const std::string& id = fields[0];
    if (id.empty() || has_space(id)) {
      load.errors.push_back({number, "invalid id '" + id + "'"});
      continue;
    }
    try {
      CoefficientRecord record{id, FloatingNumber::parse(fields[1]), 0, parse_role(fields[2]), fields[3],
                               std::nullopt};
      if (const auto* existing = load.registry.find(id)) record.canonical_pin = existing->canonical_pin;
      if (std::find(seen.begin(), seen.end(), id) != seen.end()) {
        load.warnings.push_back({number, "duplicate id '" + id + "' in corpus; later line wins"});
      } else if (load.registry.find(id)) {
        load.warnings.push_back({number, "id '" + id + "' overrides a built-in record"});
      }
      seen.push_back(id);
      load.registry.put(std::move(record));
    } catch (const Error& e) {
      load.errors.push_back({number, e.what()});
    }
  }
  return load;
}

CorpusLoad read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read corpus '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_corpus(buffer.str());
}

CorpusLoad load_corpus(const std::filesystem::path& path) {
  CorpusLoad load = read_corpus(path);
  if (!load.errors.empty()) {
    std::string message = "corpus '" + path.string() + "' has errors:";
    for (const auto& e : load.errors) message += "\n  line " + std::to_string(e.line) + ": " + e.message;
    throw Error(ErrorCode::Corpus, message);
  }
  return load;
}

}  // namespace xi
