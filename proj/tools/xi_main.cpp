// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Talks to the library only through xi.h.

#include "xi/xi.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { xi_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct RegistryDeleter {
  void operator()(xi_registry* r) const { xi_registry_free(r); }
};
using OwnedRegistry = std::unique_ptr<xi_registry, RegistryDeleter>;

struct ReportDeleter {
  void operator()(xi_report* r) const { xi_report_free(r); }
};

struct Options {
  std::string stage = "2";
  std::string format = "text";
  std::string corpus;
};

int exit_code_for(xi_status status) {
  switch (status) {
    case XI_OK: return kExitOk;
    case XI_ERR_ARGUMENT:
    case XI_ERR_UNKNOWN_NAME: return kExitUsage;
    default: return kExitFailure;
  }
}

int report_error(xi_status status) {
  std::cerr << "xi: " << xi_status_name(status) << ": " << xi_last_error() << "\n";
  return exit_code_for(status);
}

// Prints and releases `text` on success. Taken by reference so the status
// call is sequenced before the read.
int emit(xi_status status, char*& text) {
  OwnedString owned(text);
  if (status != XI_OK) return report_error(status);
  std::cout << owned.get();
  if (*owned && owned.get()[std::char_traits<char>::length(owned.get()) - 1] != '\n') std::cout << '\n';
  return kExitOk;
}

xi_format format_of(const Options& o) { return o.format == "records" ? XI_FORMAT_RECORDS : XI_FORMAT_TEXT; }

// Empty corpus path means the built-in registry. Returns an exit code or -1
// when `out` was filled.
int load_registry(const Options& o, OwnedRegistry& out) {
  if (o.corpus.empty()) {
    out.reset(xi_registry_builtin());
    return out ? -1 : report_error(XI_ERR_INTERNAL);
  }
  xi_registry* reg = nullptr;
  char* diagnostics = nullptr;
  const xi_status status = xi_registry_load(o.corpus.c_str(), &reg, &diagnostics);
  OwnedString notes(diagnostics);
  if (notes && *notes) std::cerr << notes.get();
  if (status != XI_OK) return report_error(status);
  out.reset(reg);
  return -1;
}

int run_circle(const Options& o, const std::string& operation, const std::vector<std::string>& args) {
  xi_stage stage{};
  if (xi_status s = xi_stage_parse(o.stage.c_str(), &stage); s != XI_OK) return report_error(s);
  OwnedRegistry reg;
  if (int rc = load_registry(o, reg); rc >= 0) return rc;
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  char* result = nullptr;
  const xi_status s = xi_circle(operation.c_str(), argv.data(), argv.size(), stage, reg.get(), &result);
  return emit(s, result);
}

int run_table(const Options& o, const std::string& name) {
  OwnedRegistry reg;
  if (int rc = load_registry(o, reg); rc >= 0) return rc;
  char* text = nullptr;
  return emit(xi_table(name.c_str(), reg.get(), format_of(o), &text), text);
}

int run_verify(const Options& o) {
  xi_report* raw = nullptr;
  const xi_status s = xi_verify(o.corpus.empty() ? nullptr : o.corpus.c_str(), &raw);
  if (s != XI_OK) return report_error(s);
  std::unique_ptr<xi_report, ReportDeleter> report(raw);
  char* text = nullptr;
  if (int rc = emit(xi_report_render(report.get(), format_of(o), &text), text); rc != kExitOk) return rc;
  return xi_report_ok(report.get()) ? kExitOk : kExitFailure;
}

void add_globals(CLI::App* app, Options& o) {
  app->add_option("--stage", o.stage, "Refinement stage: 1, 2, ptolemy or modern")
      ->check(CLI::IsMember({"1", "2", "hexagon", "susa", "ptolemy", "modern"}));
  app->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "records"}));
  app->add_option("--corpus", o.corpus, "Coefficient corpus overriding the built-ins");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact sexagesimal arithmetic and the Babylonian circle formulary", "xi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(xi_version()));
  Options opts;
  add_globals(&app, opts);
  int rc = kExitOk;

  std::string text, other;
  bool pinned = false;
  int exponent = 0;
  std::vector<std::string> rest;

  auto* parse = app.add_subcommand("parse", "Normalize a sexagesimal number");
  parse->add_option("number", text)->required();
  parse->add_flag("--pinned", pinned, "Read as a pinned number (',' places, ';' radix)");
  parse->callback([&] {
    char* norm = nullptr;
    char* value = nullptr;
    if (!pinned) {
      rc = emit(xi_parse_floating(text.c_str(), &norm), norm);
      return;
    }
    const xi_status s = xi_parse_pinned(text.c_str(), &norm, &value);
    OwnedString v(value);
    if (s == XI_OK) std::cout << norm << " = " << v.get() << "\n";
    OwnedString n(norm);
    rc = s == XI_OK ? kExitOk : report_error(s);
  });

  auto* pin = app.add_subcommand("pin", "Fix the absolute place of a floating number");
  pin->add_option("number", text)->required();
  pin->add_option("exponent", exponent, "Power of 60 of the leading digit")->required();
  pin->callback([&] {
    char* p = nullptr;
    char* value = nullptr;
    const xi_status s = xi_pin(text.c_str(), exponent, &p, &value);
    OwnedString owned_p(p), owned_v(value);
    if (s == XI_OK) std::cout << p << " = " << value << "\n";
    rc = s == XI_OK ? kExitOk : report_error(s);
  });

  auto* mul = app.add_subcommand("mul", "Multiply two floating numbers");
  mul->add_option("a", text)->required();
  mul->add_option("b", other)->required();
  mul->callback([&] {
    char* out = nullptr;
    rc = emit(xi_mul(text.c_str(), other.c_str(), &out), out);
  });

  auto* add = app.add_subcommand("add", "Add two pinned numbers");
  add->add_option("a", text)->required();
  add->add_option("b", other)->required();
  add->callback([&] {
    char* out = nullptr;
    rc = emit(xi_add(text.c_str(), other.c_str(), &out), out);
  });

  auto* recip = app.add_subcommand("recip", "Reciprocal of a regular floating number");
  recip->add_option("number", text)->required();
  recip->callback([&] {
    char* out = nullptr;
    rc = emit(xi_reciprocal(text.c_str(), &out), out);
  });

  auto* circle = app.add_subcommand("circle", "Circle formulary computations");
  circle->add_option("operation", text,
                     "circumference d | diameter c | arc N r | sectors b r | hexagon-part b | "
                     "arc-from-hexagon h [r] | area c | perimeter A | sagitta r chord | chord r s | fraction chord r")
      ->required();
  circle->add_option("args", rest)->required();
  circle->callback([&] { rc = run_circle(opts, text, rest); });

  std::string unit, from, to;
  auto* convert = app.add_subcommand("convert", "Convert a length between Nippur and Gudea units");
  convert->add_option("magnitude", text)->required();
  convert->add_option("unit", unit, "finger, cubit or ninda")->required();
  convert->add_option("from", from, "nippur or gudea")->required();
  convert->add_option("to", to, "nippur or gudea")->required();
  convert->callback([&] {
    char* out = nullptr;
    rc = emit(xi_convert_length(text.c_str(), unit.c_str(), from.c_str(), to.c_str(), &out), out);
  });

  auto* ptolemy = app.add_subcommand("ptolemy", "Lunar chord conversion");
  ptolemy->require_subcommand(1);
  auto* dms = ptolemy->add_subcommand("dms", "Convert an arcminute chord reading to degrees");
  dms->add_option("arcminutes", text)->required();
  dms->callback([&] {
    char* out = nullptr;
    rc = emit(xi_chord_minutes_to_dms(text.c_str(), &out), out);
  });
  auto* average = ptolemy->add_subcommand("average", "Average two arcminute readings");
  average->add_option("a", text)->required();
  average->add_option("b", other)->required();
  average->callback([&] {
    char* out = nullptr;
    rc = emit(xi_average_arcminutes(text.c_str(), other.c_str(), &out), out);
  });

  auto* table = app.add_subcommand("table", "Print a reconstructed table");
  table->add_option("name", text, "formulary, lunar, ladder or equivalents")->required();
  table->callback([&] { rc = run_table(opts, text); });

  auto* verify = app.add_subcommand("verify", "Replay every identity and report");
  verify->callback([&] { rc = run_verify(opts); });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  ptolemy->get_subcommand("dms")->fallthrough();
  average->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::RequiredError) ||
        e.get_exit_code() == static_cast<int>(CLI::ExitCodes::ExtrasError)) {
      std::cerr << app.help();
    }
    return kExitUsage;
  }
  return rc;
}
