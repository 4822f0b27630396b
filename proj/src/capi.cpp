// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/xi.h"

#include "xi/circle.hpp"
#include "xi/error.hpp"
#include "xi/metrology.hpp"
#include "xi/ptolemy.hpp"
#include "xi/registry.hpp"
#include "xi/sexagesimal.hpp"
#include "xi/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

struct xi_registry {
  xi::Registry registry;
};

struct xi_report {
  xi::VerificationReport report;
};

namespace {

thread_local std::string last_error;

xi_status to_status(xi::ErrorCode code) {
  switch (code) {
    case xi::ErrorCode::Parse: return XI_ERR_PARSE;
    case xi::ErrorCode::Domain: return XI_ERR_DOMAIN;
    case xi::ErrorCode::Irregular: return XI_ERR_IRREGULAR;
    case xi::ErrorCode::Argument: return XI_ERR_ARGUMENT;
    case xi::ErrorCode::Io: return XI_ERR_IO;
    case xi::ErrorCode::Corpus: return XI_ERR_CORPUS;
    case xi::ErrorCode::Structure: return XI_ERR_STRUCTURE;
    case xi::ErrorCode::UnknownName: return XI_ERR_UNKNOWN_NAME;
    case xi::ErrorCode::DivisionByZero: return XI_ERR_DIVISION_BY_ZERO;
  }
  return XI_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the thread-local
// error message.
template <typename F>
xi_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return XI_OK;
  } catch (const xi::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return XI_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void clear(char** out) {
  if (out) *out = nullptr;
}

void set(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

std::string_view require(const char* s, const char* what) {
  if (!s) throw xi::Error(xi::ErrorCode::Argument, std::string(what) + " is null");
  return s;
}

void require_out(const void* p) {
  if (!p) throw xi::Error(xi::ErrorCode::Argument, "output pointer is null");
}

// Integers, fractions, decimals, or pinned sexagesimal.
xi::Rational parse_magnitude(std::string_view text) {
  if (text.find_first_of(";,") != std::string_view::npos) return xi::PinnedNumber::parse(text).value();
  return xi::Rational::parse(text);
}

xi::Stage to_stage(xi_stage stage) {
  switch (stage) {
    case XI_STAGE_HEXAGON: return xi::Stage::Hexagon;
    case XI_STAGE_SUSA: return xi::Stage::Susa;
    case XI_STAGE_PTOLEMY: return xi::Stage::Ptolemy;
    case XI_STAGE_MODERN: return xi::Stage::Modern;
  }
  throw xi::Error(xi::ErrorCode::Argument, "invalid stage value");
}

// "25/4 = 6;15 = 6.25", dropping forms that repeat the previous one.
std::string describe(const xi::Rational& q) {
  std::vector<std::string> forms{q.str()};
  std::string sep = " = ";
  try {
    const xi::FloatingNumber digits = xi::FloatingNumber::from_rational(q);
    forms.push_back(xi::from_rational(q, static_cast<int>(digits.size()) + 64).number.str());
  } catch (const xi::Error&) {
    sep = " ~ ";
  }
  forms.push_back(xi::format_decimal(q));
  std::string out = forms[0];
  for (std::size_t i = 1; i < forms.size(); ++i) {
    if (forms[i] != forms[i - 1]) out += sep + forms[i];
  }
  return out;
}

std::string describe(const xi::Measure& m) {
  if (m.is_rational() && m.is_exact()) {
    if (m.rational().is_zero()) return "0";
    return describe(m.rational());
  }
  if (m.is_rational()) return "~ " + xi::format_real(m.real(), 12) + " (approximate)";
  return "~ " + xi::format_real(m.real(), 12);
}

std::string run_circle(std::string_view op, const std::vector<xi::Rational>& a, xi::Stage stage,
                       const xi::Formulary& f) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (a.size() < lo || a.size() > hi) {
      throw xi::Error(xi::ErrorCode::Argument, "'" + std::string(op) + "' takes " + std::to_string(lo) +
                                                   (lo == hi ? "" : "-" + std::to_string(hi)) + " argument(s)");
    }
  };
  if (op == "circumference") { arity(1, 1); return describe(xi::circumference(a[0], stage, f)); }
  if (op == "diameter") { arity(1, 1); return describe(xi::diameter_from_circumference(a[0], stage, f)); }
  if (op == "arc") { arity(2, 2); return describe(xi::arc_length(a[0], a[1], stage, f)); }
  if (op == "sectors") { arity(2, 2); return describe(xi::sector_count(a[0], a[1], stage, f)); }
  if (op == "hexagon-part") { arity(1, 1); return describe(xi::hexagon_part(a[0], f)); }
  if (op == "arc-from-hexagon") {
    arity(1, 2);
    return describe(xi::arc_from_hexagon_part(a[0], a.size() > 1 ? a[1] : xi::Rational(1), f));
  }
  if (op == "area") { arity(1, 1); return describe(xi::area_from_circumference(a[0], stage, f)); }
  if (op == "perimeter") { arity(1, 1); return describe(xi::perimeter_from_area(a[0], f)); }
  if (op == "sagitta") { arity(2, 2); return describe(xi::sagitta(a[0], a[1])); }
  if (op == "chord") { arity(2, 2); return describe(xi::chord_from_sagitta(a[0], a[1])); }
  if (op == "fraction") {
    arity(2, 2);
    const xi::CircleFraction r = xi::circle_fraction_from_chord(a[0], a[1], stage, f);
    return describe(r.sectors) + "; nearest " + r.nearest.str();
  }
  throw xi::Error(xi::ErrorCode::UnknownName, "unknown circle operation '" + std::string(op) + "'");
}

}  // namespace

extern "C" {

const char* xi_version(void) { return "0.1.0"; }

const char* xi_last_error(void) { return last_error.c_str(); }

const char* xi_status_name(xi_status status) {
  switch (status) {
    case XI_OK: return "ok";
    case XI_ERR_PARSE: return "parse error";
    case XI_ERR_DOMAIN: return "domain error";
    case XI_ERR_IRREGULAR: return "irregular number";
    case XI_ERR_ARGUMENT: return "invalid argument";
    case XI_ERR_IO: return "i/o error";
    case XI_ERR_CORPUS: return "corpus error";
    case XI_ERR_STRUCTURE: return "structure error";
    case XI_ERR_UNKNOWN_NAME: return "unknown name";
    case XI_ERR_DIVISION_BY_ZERO: return "division by zero";
    case XI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void xi_string_free(char* s) { std::free(s); }

xi_status xi_stage_parse(const char* text, xi_stage* out) {
  return guard([&] {
    require_out(out);
    switch (xi::parse_stage(require(text, "stage"))) {
      case xi::Stage::Hexagon: *out = XI_STAGE_HEXAGON; break;
      case xi::Stage::Susa: *out = XI_STAGE_SUSA; break;
      case xi::Stage::Ptolemy: *out = XI_STAGE_PTOLEMY; break;
      case xi::Stage::Modern: *out = XI_STAGE_MODERN; break;
    }
  });
}

xi_status xi_parse_floating(const char* text, char** normalized) {
  clear(normalized);
  return guard([&] {
    require_out(normalized);
    set(normalized, xi::FloatingNumber::parse(require(text, "text")).str());
  });
}

xi_status xi_parse_pinned(const char* text, char** normalized, char** value) {
  clear(normalized);
  clear(value);
  return guard([&] {
    require_out(normalized);
    const xi::PinnedNumber p = xi::PinnedNumber::parse(require(text, "text"));
    set(normalized, p.str());
    set(value, p.value().str());
  });
}

xi_status xi_pin(const char* floating, int exponent, char** pinned, char** value) {
  clear(pinned);
  clear(value);
  return guard([&] {
    require_out(pinned);
    const xi::PinnedNumber p = xi::pin(xi::FloatingNumber::parse(require(floating, "number")), exponent);
    set(pinned, p.str());
    set(value, p.value().str());
  });
}

xi_status xi_mul(const char* a, const char* b, char** product) {
  clear(product);
  return guard([&] {
    require_out(product);
    const auto x = xi::FloatingNumber::parse(require(a, "first factor"));
    const auto y = xi::FloatingNumber::parse(require(b, "second factor"));
    set(product, xi::multiply(x, y).str());
  });
}

xi_status xi_add(const char* a, const char* b, char** sum) {
  clear(sum);
  return guard([&] {
    require_out(sum);
    const auto x = xi::PinnedNumber::parse(require(a, "first term"));
    const auto y = xi::PinnedNumber::parse(require(b, "second term"));
    set(sum, xi::add(x, y).str());
  });
}

xi_status xi_reciprocal(const char* floating, char** result) {
  clear(result);
  return guard([&] {
    require_out(result);
    set(result, xi::reciprocal(xi::FloatingNumber::parse(require(floating, "number"))).str());
  });
}

xi_status xi_from_rational(const char* magnitude, int max_places, int nearest, char** pinned, int* truncated) {
  clear(pinned);
  return guard([&] {
    require_out(pinned);
    const xi::Expansion e = xi::from_rational(parse_magnitude(require(magnitude, "magnitude")), max_places,
                                              nearest ? xi::Rounding::Nearest : xi::Rounding::Truncate);
    set(pinned, e.number.str());
    if (truncated) *truncated = e.truncated ? 1 : 0;
  });
}

xi_status xi_is_regular(const char* magnitude, int* regular) {
  return guard([&] {
    require_out(regular);
    const xi::Rational q = parse_magnitude(require(magnitude, "magnitude"));
    if (!q.is_positive()) throw xi::Error(xi::ErrorCode::Domain, "regularity needs a positive value");
    *regular = xi::is_regular(q) ? 1 : 0;
  });
}

xi_status xi_circle(const char* operation, const char* const* args, size_t nargs, xi_stage stage,
                    const xi_registry* registry, char** result) {
  clear(result);
  return guard([&] {
    require_out(result);
    if (nargs > 0 && !args) throw xi::Error(xi::ErrorCode::Argument, "argument array is null");
    std::vector<xi::Rational> values;
    for (size_t i = 0; i < nargs; ++i) values.push_back(parse_magnitude(require(args[i], "argument")));
    const xi::Formulary f =
        registry ? xi::Formulary::from_registry(registry->registry) : xi::Formulary::standard();
    set(result, run_circle(require(operation, "operation"), values, to_stage(stage), f));
  });
}

xi_status xi_convert_length(const char* magnitude, const char* unit, const char* from_system, const char* to_system,
                            char** result) {
  clear(result);
  return guard([&] {
    require_out(result);
    const xi::LengthQuantity q(parse_magnitude(require(magnitude, "magnitude")),
                               xi::parse_length_unit(require(unit, "unit")),
                               xi::parse_unit_system(require(from_system, "source system")));
    const xi::LengthQuantity converted =
        xi::convert_system(q, xi::parse_unit_system(require(to_system, "target system")));
    std::string text = describe(converted.magnitude()) + " " + std::string(xi::to_string(converted.system())) + " " +
                       std::string(xi::to_string(converted.unit()));
    if (converted.unit() != xi::LengthUnit::Finger) text += " (" + xi::to_base_fingers(converted).str() + " fingers)";
    set(result, text);
  });
}

xi_status xi_chord_minutes_to_dms(const char* arcminutes, char** dms) {
  clear(dms);
  return guard([&] {
    require_out(dms);
    set(dms, xi::chord_minutes_to_dms(parse_magnitude(require(arcminutes, "arcminutes"))).str());
  });
}

xi_status xi_average_arcminutes(const char* a, const char* b, char** mean) {
  clear(mean);
  return guard([&] {
    require_out(mean);
    const xi::Rational m =
        xi::average_pair(parse_magnitude(require(a, "first value")), parse_magnitude(require(b, "second value")));
    set(mean, xi::from_rational(m, 64).number.str());
  });
}

xi_registry* xi_registry_builtin(void) {
  xi_registry* out = nullptr;
  guard([&] { out = new xi_registry{xi::Registry::builtin()}; });
  return out;
}

xi_status xi_registry_load(const char* path, xi_registry** out, char** diagnostics) {
  if (out) *out = nullptr;
  clear(diagnostics);
  return guard([&] {
    require_out(out);
    const xi::CorpusLoad load = xi::read_corpus(require(path, "path"));
    std::string notes;
    for (const auto& w : load.warnings) notes += "line " + std::to_string(w.line) + ": warning: " + w.message + "\n";
    for (const auto& e : load.errors) notes += "line " + std::to_string(e.line) + ": error: " + e.message + "\n";
    set(diagnostics, notes);
    if (!load.errors.empty()) {
      throw xi::Error(xi::ErrorCode::Corpus, "corpus has " + std::to_string(load.errors.size()) + " malformed line(s)");
    }
    *out = new xi_registry{load.registry};
  });
}

void xi_registry_free(xi_registry* registry) { delete registry; }

size_t xi_registry_size(const xi_registry* registry) { return registry ? registry->registry.records().size() : 0; }

xi_status xi_registry_lookup(const xi_registry* registry, const char* id, char** digits, char** value) {
  clear(digits);
  clear(value);
  return guard([&] {
    if (!registry) throw xi::Error(xi::ErrorCode::Argument, "registry is null");
    const xi::CoefficientRecord& r = registry->registry.lookup(require(id, "id"));
    set(digits, r.digits.str());
    set(value, r.value().str());
  });
}

xi_status xi_verify(const char* corpus_path, xi_report** out) {
  if (out) *out = nullptr;
  return guard([&] {
    require_out(out);
    std::optional<std::filesystem::path> corpus;
    if (corpus_path) corpus = corpus_path;
    *out = new xi_report{xi::verify_corpus(corpus)};
  });
}

int xi_report_ok(const xi_report* report) { return report && report->report.ok() ? 1 : 0; }

size_t xi_report_size(const xi_report* report) { return report ? report->report.entries().size() : 0; }

size_t xi_report_failed(const xi_report* report) { return report ? report->report.failed() : 0; }

xi_status xi_report_render(const xi_report* report, xi_format format, char** text) {
  clear(text);
  return guard([&] {
    require_out(text);
    if (!report) throw xi::Error(xi::ErrorCode::Argument, "report is null");
    set(text, format == XI_FORMAT_RECORDS ? report->report.render_records() : report->report.render_text());
  });
}

void xi_report_free(xi_report* report) { delete report; }

xi_status xi_table(const char* name, const xi_registry* registry, xi_format format, char** text) {
  clear(text);
  return guard([&] {
    require_out(text);
    const xi::Registry builtin = registry ? xi::Registry{} : xi::Registry::builtin();
    set(text, xi::emit_table(require(name, "table name"), registry ? registry->registry : builtin,
                             format == XI_FORMAT_RECORDS ? xi::OutputFormat::Records : xi::OutputFormat::Text));
  });
}

}  // extern "C"
