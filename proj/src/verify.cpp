// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "xi/verify.hpp"

#include "xi/circle.hpp"
#include "xi/error.hpp"
#include "xi/metrology.hpp"
#include "xi/ptolemy.hpp"

#include <cstdio>

namespace xi {

namespace {

// Runs `check`, turning a library error into a failing entry so one broken
// coefficient cannot abort the rest of the run.
template <typename F>
void guarded(VerificationReport& report, const std::string& id, const std::string& anchor, F&& check) {
  try {
    check();
  } catch (const Error& e) {
    report.add(id, anchor, "no error", e.what(), false);
  }
}

void add_closures(VerificationReport& report, const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  for (int d : {1, 2, 4}) {
    const std::string prefix = "closure.d" + std::to_string(d) + ".";
    const Rational diameter(d);
    const Rational radius = diameter / 2;

    for (Stage stage : {Stage::Hexagon, Stage::Susa, Stage::Ptolemy}) {
      const std::string id = prefix + "diameter." + std::string(to_string(stage));
      guarded(report, id, "diameter from circumference", [&] {
        const Measure back = diameter_from_circumference(circumference(diameter, stage, f).rational(), stage, f);
        report.add(id, "diameter from circumference", diameter.str(), back.str(), back == diameter);
      });
    }

    guarded(report, prefix + "sectors", "sector count inverts arc length", [&] {
      const Rational n(25);
      const Measure b = arc_length(n, radius, Stage::Susa, f);
      const Measure back = sector_count(b.rational(), radius, Stage::Susa, f);
      report.add(prefix + "sectors", "N = 6;15 r / b inverts b = 6/N r 1;2;30", n.str(), back.str(), back == n);
    });

    guarded(report, prefix + "hexagon_part", "arc to hexagon part and back", [&] {
      const Rational b = arc_length(Rational(6), radius, Stage::Susa, f).rational();
      const Rational back = arc_from_hexagon_part(hexagon_part(b, f), Rational(1), f);
      report.add(prefix + "hexagon_part", "b x 57;36 x 1;2;30 = b (rope)", b.str(), back.str(), back == b);
    });

    guarded(report, prefix + "area", "area coefficient 4;48 against 12;30", [&] {
      const Rational c = circumference(diameter, Stage::Susa, f).rational();
      const Rational scaled = area_from_circumference(c, Stage::Susa, f).rational() * registry.value("AREA2_RECIP");
      report.add(prefix + "area", "A x 12;30 = c^2 (YBC 7243, YBC 8600)", (c * c).str(), scaled.str(),
                 scaled == c * c);
    });

    guarded(report, prefix + "perimeter", "perimeter from area (YBC 8600)", [&] {
      const Rational c = circumference(diameter, Stage::Susa, f).rational();
      const Measure p = perimeter_from_area(area_from_circumference(c, Stage::Susa, f).rational(), f);
      const Rational expected = f.hexagon * diameter;
      report.add(prefix + "perimeter", "3d = 57;36 sqrt(A x 12 x 1;2;30) (YBC 8600)", expected.str(), p.str(),
                 p == expected);
    });
  }
}

void add_lunar(VerificationReport& report, const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  const Rational factor = ptolemy_working_reciprocal(f).value();
  struct Row {
    const char* id;
    const char* chord;
    const char* expected;
  };
  const Row rows[] = {
      {"lunar.min", "31;20", "0°29'55\""},
      {"lunar.max", "35;20", "0°33'45\""},
      {"lunar.averaged", "33;20", "0°31'50\""},
  };
  for (const auto& row : rows) {
    const DmsAngle dms = chord_minutes_to_dms(PinnedNumber::parse(row.chord).value(), factor, Rounding::Nearest);
    report.add(row.id, std::string("lunar diameter chord ") + row.chord + " to degrees", row.expected, dms.str(),
               dms.str() == row.expected);
  }
  const Rational mean = average_pair(PinnedNumber::parse("31;20").value(), PinnedNumber::parse("35;20").value());
  const std::string mean_text = from_rational(mean, 8).number.str();
  report.add("lunar.mean_chord", "average of 31;20 and 35;20", "33;20", mean_text, mean_text == "33;20");
}

void add_circle25(VerificationReport& report, const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  guarded(report, "circle25.arc", "1/25 of a circle at radius 1", [&] {
    const Rational b = arc_length(Rational(25), Rational(1), Stage::Susa, f).rational();
    const std::string digits = FloatingNumber::from_rational(b).str();
    report.add("circle25.arc", "1/25 of a circle at radius 1", "1/4 (floating 15)",
               b.str() + " (floating " + digits + ")", b == Rational(1, 4) && digits == "15");
    const std::string hex = FloatingNumber::from_rational(hexagon_part(b, f)).str();
    report.add("circle25.hexagon_part", "14;24 x 1;2;30 x r(1) = 15", "14;24", hex, hex == "14;24");
  });
  const Real modern = arc_length(Rational(25), Rational(1), Stage::Modern, f).real();
  const Real diff = abs(modern - Real("0.251327"));
  report.add("circle25.modern", "modern arc length of 1/25 circle", "0.251327 +- 5e-7", format_real(modern, 9),
             diff <= Real("5e-7"));
}

void add_eratosthenes(VerificationReport& report, const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  const Rational chord = Rational::parse("15.16");
  const CircleFraction susa = circle_fraction_from_chord(chord, Rational(120), Stage::Susa, f);
  const bool susa_ok = susa.sectors == Rational(18750, 379) && susa.nearest >= 49 && susa.nearest <= 50;
  report.add("eratosthenes.susa", "shadow ratio 15.16/120 as a circle fraction", "18750/379, nearest in {49, 50}",
             susa.sectors.str() + ", nearest " + susa.nearest.str(), susa_ok);
  const CircleFraction modern = circle_fraction_from_chord(chord, Rational(120), Stage::Modern, f);
  report.add("eratosthenes.modern", "shadow ratio 15.16/120, modern pi", "nearest 50",
             format_real(modern.sectors.real(), 6) + ", nearest " + modern.nearest.str(), modern.nearest == 50);
}

void add_ladder(VerificationReport& report, const Registry& registry) {
  const Formulary f = Formulary::from_registry(registry);
  const auto ladder = refinement_ladder(f);
  const Real susa = abs(ladder[0].relative_error) * 100;
  const Real ptolemy = abs(ladder[1].relative_error) * 100;
  report.add("ladder.susa", "relative error of 1;2;30 against pi/3", "0.528% +- 0.005%", format_real(susa, 6) + "%",
             abs(susa - Real("0.528")) <= Real("0.005"));
  report.add("ladder.ptolemy", "relative error of 1;2;50 against pi/3", "0.0024% +- 0.0002%",
             format_real(ptolemy, 7) + "%", abs(ptolemy - Real("0.0024")) <= Real("0.0002"));
  report.add("ladder.monotonic", "refinement reduces the error", "|susa| > |ptolemy|",
             format_real(susa, 6) + "% > " + format_real(ptolemy, 7) + "%", susa > ptolemy);
  bool same = true;
  for (const auto& step : ladder) {
    same = same && abs(step.relative_error - step.per_degree_relative_error) < Real("1e-40");
  }
  report.add("ladder.per_degree", "xi/60 against pi/180 has the same relative error", "equal", same ? "equal" : "differ",
             same);

  // Quoted modern values agree with the constants to the last quoted digit.
  struct Quote {
    const char* id;
    const char* constant;
    const char* quoted;
    const char* unit;
  };
  const Quote quotes[] = {
      {"constants.pi_over_3", "pi_over_3", "1.047197", "1e-6"},
      {"constants.pi_over_180", "pi_over_180", "0.0174533", "1e-7"},
      {"constants.deg_per_radian", "deg_per_radian", "57.29578", "1e-5"},
  };
  for (const auto& q : quotes) {
    const Real value = modern_constant(q.constant).value;
    report.add(q.id, std::string(q.constant) + " to the quoted digits", q.quoted, format_real(value, 12),
               abs(value - Real(q.quoted)) < Real(q.unit));
  }

  const auto rows = radian_equivalents(f);
  const char* ids[] = {"equivalents.whole_circle", "equivalents.one_part", "equivalents.per_radian"};
  const char* expected[] = {"1;2,30", "0;1,2,30", "57;36"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    report.add(ids[i], rows[i].label + " against " + rows[i].modern.source, expected[i], rows[i].babylonian.str(),
               rows[i].babylonian.str() == expected[i]);
  }
}

}  // namespace

VerificationReport run_verification(const Registry& registry) {
  VerificationReport report;
  try {
    report.merge(verify_derivations(registry));
  } catch (const Error& e) {
    report.add("derive.structure", "registry rules", "well formed", e.what(), false);
  }
  add_closures(report, registry);
  report.merge(gudea_circle_cross_check(Stage::Susa, unit_ratio_to_nippur(UnitSystem::Gudea),
                                        Formulary::from_registry(registry)));
  guarded(report, "lunar", "lunar diameters", [&] { add_lunar(report, registry); });
  add_circle25(report, registry);
  guarded(report, "eratosthenes", "circle fraction", [&] { add_eratosthenes(report, registry); });
  guarded(report, "ladder", "refinement ladder", [&] { add_ladder(report, registry); });
  return report;
}

VerificationReport verify_corpus(const std::optional<std::filesystem::path>& corpus) {
  if (!corpus) return run_verification(Registry::builtin());
  const CorpusLoad load = read_corpus(*corpus);
  if (load.errors.empty()) return run_verification(load.registry);

  VerificationReport report = run_verification(Registry::builtin());
  for (const auto& e : load.errors) {
    char id[32];
    std::snprintf(id, sizeof id, "corpus.line.%05d", e.line);
    report.add(id, corpus->string(), "well-formed record", e.message, false);
  }
  return report;
}

}  // namespace xi
