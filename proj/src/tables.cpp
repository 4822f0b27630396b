// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/circle.hpp"
#include "xi/error.hpp"
#include "xi/ptolemy.hpp"
#include "xi/verify.hpp"

namespace xi {

namespace {

using Rows = std::vector<std::vector<std::string>>;

std::string decimal(const Rational& q) { return format_decimal(q); }

// Irregular values are cut at six places and marked.
std::string floating(const Rational& q) {
  if (!irregular_factor(Rational(q.denominator(), 1))) return FloatingNumber::from_rational(q).str();
  return from_rational(q, 6).number.floating().str() + "...";
}

Rows formulary_rows(const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  auto d = [&](std::string_view id) { return registry.lookup(id).digits.str(); };
  struct Row {
    std::string target, source, path;
    Rational coefficient;
  };
  const Row rows[] = {
      {"Diameter (d)", "", "d = (c x " + d("THIRD") + ") x " + d("SHRINK"), f.third * f.shrink},
      {"Circumference (c)", "", "c = (d x " + d("HEX") + ") x " + d("XI1"), f.hexagon * f.stretch},
      {"Vertices/sector (UB)", "TMS 3", "N = (" + d("SIX") + " x r) / (b x " + d("SHRINK") + ")", f.six / f.shrink},
      {"Arc length (UB)", "TMS 3", "b = (" + d("SIX") + "/N x r) x " + d("XI1"), f.six * f.stretch},
      {"Hexagon part (rope)", "YBC 5022", "h = b x " + d("SHRINK"), f.shrink},
      {"Arc length (rope)", "YBC 5022", "b = h x " + d("XI1"), f.stretch},
      {"Area (log)", "YBC 7243", "A = c^2 x (" + d("AREA1") + " x " + d("SHRINK") + ")", f.area1 * f.shrink},
      {"Diameter/perimeter (log)", "YBC 8600",
       "3d = " + d("SHRINK") + " x sqrt(A x " + d("TWELVE") + " x " + d("XI1") + ")", f.twelve * f.stretch},
      {"Precision circle", "", "pi = " + d("HEX") + " x " + d("XI1"), f.stretch},
      {"Stretch factor", "", "A_susa = A x " + d("XI1"), f.stretch},
      {"Shrink factor", "", "V = V_susa x " + d("SHRINK"), f.shrink},
  };
  Rows out{{"target", "source", "operational path", "adapted coefficient", "decimal"}};
  for (const auto& r : rows) out.push_back({r.target, r.source, r.path, floating(r.coefficient), decimal(r.coefficient)});
  return out;
}

Rows lunar_rows(const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  const Rational factor = ptolemy_working_reciprocal(f).value();
  const Rational low = PinnedNumber::parse("31;20").value();
  const Rational high = PinnedNumber::parse("35;20").value();
  const Rational mean = average_pair(low, high);
  Rows out{{"lunar diameter", "min", "max", "averaged"}};
  std::vector<std::string> chords{"chord (arcminutes)"};
  std::vector<std::string> degrees{"degrees"};
  for (const Rational& v : {low, high, mean}) {
    chords.push_back(from_rational(v, 8).number.str());
    degrees.push_back(chord_minutes_to_dms(v, factor, Rounding::Nearest).str());
  }
  out.push_back(std::move(chords));
  out.push_back(std::move(degrees));
  out.push_back({"factor", ptolemy_working_reciprocal(f).str(), "", ""});
  return out;
}

Rows ladder_rows(const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  Rows out{{"stage", "xi", "decimal", "circle constant", "error vs pi/3", "|error|", "xi/60", "error vs pi/180"}};
  for (const auto& step : refinement_ladder(f)) {
    const Rational xi = step.xi.rational();
    out.push_back({std::string(to_string(step.stage)), floating(xi), decimal(xi), decimal(f.hexagon * xi),
                   format_real(step.relative_error * 100, 6) + "%", format_real(abs(step.relative_error) * 100, 4) + "%",
                   format_real(step.per_degree, 10),
                   format_real(step.per_degree_relative_error * 100, 6) + "%"});
  }
  const RealApprox pi3 = modern_constant("pi_over_3");
  out.push_back({"modern", "-", format_real(pi3.value, 10), format_real(modern_constant("pi").value, 10), "0%", "0%",
                 format_real(modern_constant("pi_over_180").value, 10), "0%"});
  return out;
}

Rows equivalents_rows(const Registry& registry) {
  Rows out{{"quantity", "sexagesimal", "decimal", "modern", "modern value", "difference", "relative"}};
  for (const auto& row : radian_equivalents(Formulary::from_registry(registry))) {
    out.push_back({row.label, row.babylonian.str(), decimal(row.babylonian.value()), row.modern.source,
                   format_real(row.modern.value, 10), format_real(row.absolute_difference, 10),
                   format_real(row.relative_difference * 100, 6) + "%"});
  }
  return out;
}

}  // namespace

std::string emit_table(std::string_view name, const Registry& registry, OutputFormat format) {
  if (name == "formulary") return render_rows(formulary_rows(registry), format);
  if (name == "lunar") return render_rows(lunar_rows(registry), format);
  if (name == "ladder") return render_rows(ladder_rows(registry), format);
  if (name == "equivalents") return render_rows(equivalents_rows(registry), format);
  throw Error(ErrorCode::UnknownName,
              "unknown table '" + std::string(name) + "' (expected formulary, lunar, ladder or equivalents)");
}

}  // namespace xi
