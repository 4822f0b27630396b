// Copyright 2026 The xi Authors.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"
#include "xi/registry.hpp"
#include "xi/report.hpp"
#include "xi/verify.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace xi {
namespace {

using testing::code_of;

TEST(Report, SortsByIdAndCounts) {
  VerificationReport r;
  r.add("b", "", "1", "1", true);
  r.add("a", "", "1", "2", false);
  r.add({"c", "", "", "", CheckStatus::NotApplicable});
  ASSERT_EQ(r.entries().size(), 3u);
  EXPECT_EQ(r.entries()[0].id, "a");
  EXPECT_EQ(r.passed(), 1u);
  EXPECT_EQ(r.failed(), 1u);
  EXPECT_EQ(r.not_applicable(), 1u);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.find("z"), nullptr);
  VerificationReport other;
  other.add("aa", "", "x", "x", true);
  r.merge(other);
  EXPECT_EQ(r.entries()[1].id, "aa");
}

TEST(Report, RendersTextAndRecords) {
  VerificationReport r;
  r.add("x.one", "anchor", "15", "15", true);
  r.add("x.two", "anchor", "57;36", "57;35", false);
  EXPECT_EQ(r.render_records(), "x.one\tPASS\t15\t15\tanchor\nx.two\tFAIL\t57;36\t57;35\tanchor\n");
  const std::string text = r.render_text();
  EXPECT_NE(text.find("2 checks: 1 passed, 1 failed, 0 not applicable"), std::string::npos) << text;
}

TEST(Report, RowsAlignByCodePoint) {
  const std::string text = render_rows({{"a", "b"}, {"0°1'", "x"}}, OutputFormat::Text);
  EXPECT_EQ(text, "a     b\n0°1'  x\n");
  EXPECT_EQ(render_rows({{"a", "b"}}, OutputFormat::Records), "a\tb\n");
}

TEST(Verify, PristineBuildPasses) {
  const VerificationReport r = run_verification(Registry::builtin());
  EXPECT_TRUE(r.ok()) << r.render_text();
  for (const char* id : {"circle25.arc", "lunar.min", "lunar.max", "lunar.averaged", "metrology.nippur_circumference",
                         "closure.d4.perimeter", "ladder.susa", "ladder.ptolemy", "eratosthenes.susa",
                         "equivalents.per_radian"}) {
    EXPECT_NE(r.find(id), nullptr) << id;
  }
}

TEST(Verify, DeterministicOutput) {
  const Registry reg = Registry::builtin();
  EXPECT_EQ(run_verification(reg).render_records(), run_verification(reg).render_records());
}

TEST(Verify, StretchFaultPropagatesBeyondDerivations) {
  Registry reg = Registry::builtin();
  CoefficientRecord rec = reg.lookup("XI1");
  rec.digits = FloatingNumber::parse("1;2;31");
  reg.put(rec);
  const VerificationReport r = run_verification(reg);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.find("derive.pi_susa_from_xi1")->status, CheckStatus::Fail);
  EXPECT_EQ(r.find("circle25.arc")->status, CheckStatus::Fail);
  EXPECT_EQ(r.find("metrology.gudea_circumference")->status, CheckStatus::Fail);
}

TEST(Verify, AreaFaultChangesTheFormularyTable) {
  Registry reg = Registry::builtin();
  const std::string before = emit_table("formulary", reg, OutputFormat::Records);
  CoefficientRecord rec = reg.lookup("AREA1");
  rec.digits = FloatingNumber::parse("6");
  reg.put(rec);
  const std::string after = emit_table("formulary", reg, OutputFormat::Records);
  EXPECT_NE(before, after);
  EXPECT_NE(after.find("5;45;36"), std::string::npos) << after;
}

TEST(Tables, ContentComesFromTheRegistry) {
  const Registry reg = Registry::builtin();
  const std::string formulary = emit_table("formulary", reg, OutputFormat::Text);
  for (const char* coefficient : {"3;7;30", "19;12", "6;15", "4;48", "12;30"}) {
    EXPECT_NE(formulary.find(coefficient), std::string::npos) << coefficient;
  }
  const std::string ladder = emit_table("ladder", reg, OutputFormat::Text);
  EXPECT_NE(ladder.find("0.528"), std::string::npos);
  EXPECT_NE(ladder.find("0.0024%"), std::string::npos);
  const std::string lunar = emit_table("lunar", reg, OutputFormat::Records);
  EXPECT_NE(lunar.find("degrees\t0°29'55\"\t0°33'45\"\t0°31'50\""), std::string::npos) << lunar;
  EXPECT_EQ(code_of([&] { emit_table("bogus", reg, OutputFormat::Text); }), ErrorCode::UnknownName);
}

TEST(Tables, ShrinkFaultChangesTheLunarFactor) {
  Registry reg = Registry::builtin();
  CoefficientRecord rec = reg.lookup("XI2");
  rec.digits = FloatingNumber::parse("1;3");
  reg.put(rec);
  const std::string lunar = emit_table("lunar", reg, OutputFormat::Records);
  EXPECT_EQ(lunar.find("0;57,18"), std::string::npos) << lunar;
}

TEST(Verify, CorpusLineErrorsBecomeFailingEntries) {
  const auto path = std::filesystem::temp_directory_path() / "xi_verify_bad_corpus.tsv";
  std::ofstream(path) << "# x\nBROKEN\t1;2\n";
  const VerificationReport r = verify_corpus(path);
  std::filesystem::remove(path);
  EXPECT_FALSE(r.ok());
  const CheckEntry* line = r.find("corpus.line.00002");
  ASSERT_NE(line, nullptr) << r.render_text();
  EXPECT_EQ(line->status, CheckStatus::Fail);
  EXPECT_EQ(r.find("derive.pi_susa_from_xi1")->status, CheckStatus::Pass);
}

TEST(Verify, NoCorpusMatchesBuiltins) {
  EXPECT_EQ(verify_corpus(std::nullopt).render_records(), run_verification(Registry::builtin()).render_records());
}

}  // namespace
}  // namespace xi
