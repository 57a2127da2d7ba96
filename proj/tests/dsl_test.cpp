// Copyright 2026 The stpa-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <tuple>

#include "corpus_fixture.hpp"
#include "model_gen.hpp"
#include "stpa/corpus.hpp"
#include "stpa/dsl.hpp"

namespace stpa {
namespace {

using testing::corpus;
using testing::generate_model;

const ParseDiagnostic& only_diagnostic(const ParseResult& r) {
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics.size(), 1u);
  return r.diagnostics.front();
}

TEST(Parse, SingleAccident) {
  auto r = parse("model \"m\"\naccident A1 \"Collision with vehicle\"");
  ASSERT_TRUE(r.ok()) << format_diagnostic(r.diagnostics.at(0));
  ASSERT_EQ(r.model->accidents.size(), 1u);
  EXPECT_EQ(r.model->accidents[0].id, "A1");
  EXPECT_EQ(r.model->accidents[0].description, "Collision with vehicle");
  EXPECT_EQ(r.model->accidents[0].span.line, 2u);
  EXPECT_EQ(r.model->accidents[0].span.column, 10u);
}

TEST(Parse, CorpusWithoutDiagnostics) {
  auto r = parse_file(testing::corpus_dir() / "gcdc.stpa");
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.model->accidents.size(), 3u);
  EXPECT_EQ(r.model->hazards.size(), 7u);
}

TEST(Parse, DanglingArrowReportedAtArrow) {
  auto r = parse("model \"m\"\naccident A1 \"a\"\nhazard H1 \"x\" ->");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.line, 3u);
  EXPECT_EQ(d.span.column, 15u);
  EXPECT_EQ(d.span.length, 2u);
  EXPECT_NE(std::find(d.expected.begin(), d.expected.end(), "identifier"), d.expected.end());
}

TEST(Parse, DanglingArrowBeforeNextDeclaration) {
  auto r = parse("model \"m\"\nhazard H1 \"x\" ->\naccident A1 \"a\"\n");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.line, 2u);
  EXPECT_EQ(d.span.column, 15u);
}

TEST(Parse, DuplicateIdReportedOnceAtLaterSpan) {
  auto r = parse("model \"m\"\naccident A1 \"a\"\naccident A2 \"b\"\naccident A1 \"c\"\n");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.line, 4u);
  EXPECT_EQ(d.span.column, 10u);
  EXPECT_NE(d.message.find("duplicate"), std::string::npos);
}

TEST(Parse, DuplicateAcrossKindsIsStillDuplicate) {
  auto r = parse("model \"m\"\ncomponent X kind sensor \"s\"\ncomponent X kind actuator \"t\"\n");
  EXPECT_EQ(only_diagnostic(r).span.line, 3u);
}

TEST(Parse, EveryDuplicateOfTheCorpusYieldsOneDiagnostic) {
  std::string text = print(corpus());
  for (const auto& a : corpus().accidents) {
    std::string doubled = text + "accident " + a.id + " \"again\"\n";
    auto r = parse(doubled);
    ASSERT_EQ(r.diagnostics.size(), 1u) << a.id;
    EXPECT_EQ(r.diagnostics[0].span.line,
              static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n') + 1));
  }
}

TEST(Parse, DiagnosticsSortedByPosition) {
  auto r = parse("model \"m\"\nhazard h1 \"x\" -> A1\naccident A1 \"\"\n@ accident B2 \"y\"\n");
  ASSERT_GE(r.diagnostics.size(), 3u);
  EXPECT_TRUE(std::is_sorted(r.diagnostics.begin(), r.diagnostics.end(),
                             [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                               return std::tie(a.span.line, a.span.column) <
                                      std::tie(b.span.line, b.span.column);
                             }));
}

TEST(Parse, UnknownCharacterIsLexicalError) {
  auto r = parse("model \"m\" accident A1 \"a\" \xC3\xA9");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.column, 27u);
  EXPECT_NE(d.message.find("unknown character"), std::string::npos);
}

TEST(Parse, ColumnsCountCodePoints) {
  auto r = parse("model \"\xC3\xA9\xC3\xA9\" accident a1 \"x\"");
  EXPECT_EQ(only_diagnostic(r).span.column, 21u);
}

TEST(Parse, UnterminatedString) {
  auto r = parse("model \"m\"\naccident A1 \"open\n");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.line, 2u);
  EXPECT_EQ(d.span.column, 13u);
  EXPECT_NE(d.message.find("unterminated"), std::string::npos);
}

TEST(Parse, EscapesAndCrlf) {
  auto r = parse("model \"m\"\r\naccident A1 \"say \\\"hi\\\" \\\\ done\"\r\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.model->accidents[0].description, "say \"hi\" \\ done");
}

TEST(Parse, InvalidEscape) {
  auto r = parse("model \"m\" accident A1 \"a\\nb\"");
  EXPECT_NE(only_diagnostic(r).message.find("escape"), std::string::npos);
}

TEST(Parse, IdPatternEnforced) {
  auto r = parse("model \"m\" accident H1 \"a\"");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.column, 20u);
  EXPECT_NE(d.message.find("A<digits>"), std::string::npos);
}

TEST(Parse, QualifierMustFitCategory) {
  auto r = parse(
      "model \"m\"\n"
      "uca UCA1 on CA1 category wrong_timing qualifier too_long\n"
      "  context \"c\"\n  hazards H1\n");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.span.line, 2u);
  EXPECT_EQ(d.span.column, 49u);
}

TEST(Parse, UnknownCategoryListsChoices) {
  auto r = parse("model \"m\" safe CA1 category sometimes justification \"j\"");
  const auto& d = only_diagnostic(r);
  EXPECT_EQ(d.expected.size(), 4u);
  EXPECT_EQ(d.expected.front(), "'provided'");
}

TEST(Parse, UnexpectedTokenRecovery) {
  auto r = parse("model \"m\"\naccident \"a\"\naccident A2 \"b\" extra\nhazard H1 \"x\" -> A2\n");
  ASSERT_EQ(r.diagnostics.size(), 2u);
  EXPECT_EQ(r.diagnostics[0].span.line, 2u);
  EXPECT_EQ(r.diagnostics[1].span.line, 3u);
}

TEST(Parse, MissingModelHeader) {
  auto r = parse("accident A1 \"a\"");
  EXPECT_EQ(only_diagnostic(r).span.column, 1u);
}

TEST(Parse, RatingDigits) {
  auto r = parse(
      "model \"m\" uca UCA1 on CA1 category provided context \"c\" hazards H1 rating S3 E9 C0");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.model->ucas[0].rating, (Rating{3, 9, 0}));
  EXPECT_FALSE(parse("model \"m\" uca UCA1 on CA1 category provided context \"c\" hazards H1 "
                     "rating S3 C4 E3")
                   .ok());
}

TEST(Parse, FileNameInSpans) {
  auto r = parse("model \"m\" accident A1", "x.stpa");
  EXPECT_EQ(format_diagnostic(only_diagnostic(r)).rfind("x.stpa:1:", 0), 0u);
}

TEST(Print, EmptyModel) {
  SafetyModel m;
  m.name = "m";
  EXPECT_EQ(print(m), "model \"m\"\n");
}

TEST(Print, CorpusRoundTrip) {
  auto r = parse(print(corpus()));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(*r.model, corpus());
}

TEST(Print, Idempotent) {
  std::string once = print(corpus());
  EXPECT_EQ(print(*parse(once).model), once);
}

TEST(Print, UcaBlockLayout) {
  SafetyModel m;
  m.name = "m";
  m.ucas.push_back({"UCA1", "CA1", {UcaClass::kWrongDuration, UcaQualifier::kTooLong}, "ctx",
                    {"H1", "H2"}, Rating{1, 2, 3}, {}});
  EXPECT_EQ(print(m),
            "model \"m\"\n\nuca UCA1 on CA1 category wrong_duration qualifier too_long\n"
            "  context \"ctx\"\n  hazards H1, H2\n  rating S1 E2 C3\n");
}

TEST(Print, QuoteEscapes) { EXPECT_EQ(quote("a\"b\\c"), "\"a\\\"b\\\\c\""); }

TEST(RoundTrip, GeneratedModels) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SafetyModel m = generate_model(seed);
    std::string text = print(m);
    auto r = parse(text);
    ASSERT_TRUE(r.ok()) << "seed " << seed << ": " << format_diagnostic(r.diagnostics.at(0));
    EXPECT_EQ(*r.model, m) << "seed " << seed;
    EXPECT_EQ(print(*r.model), text) << "seed " << seed;
  }
}

TEST(RoundTrip, DeclarationOrderPreserved) {
  auto r = parse("model \"m\" accident A2 \"b\" accident A1 \"a\"");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.model->accidents[0].id, "A2");
}

}  // namespace
}  // namespace stpa
