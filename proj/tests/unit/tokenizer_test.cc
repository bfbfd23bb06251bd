// Copyright 2026 The Bioling Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "bioling/error.h"
#include "bioling/rng.h"
#include "bioling/tokenizer.h"
#include "bioling/unicode.h"
#include "test_support.h"

namespace bioling {
namespace {

std::vector<std::string> surfaces(const Document &doc) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < doc.tokens().size(); ++i) {
    out.push_back(utf8_encode(doc.surface(i)));
  }
  return out;
}

std::vector<std::string> tok(std::string_view text) {
  return surfaces(tokenize(text, default_biomedical_rules()));
}

using Strings = std::vector<std::string>;

TEST(Tokenizer, ParenthesizedDefinition) {
  EXPECT_EQ(tok("IL-2 (interleukin-2)."),
            (Strings{"IL-2", "(", "interleukin-2", ")", "."}));
}

TEST(Tokenizer, ComparisonOperatorKeepsDecimal) {
  EXPECT_EQ(tok("p<0.05"), (Strings{"p", "<", "0.05"}));
}

TEST(Tokenizer, EmptyInput) { EXPECT_TRUE(tok("").empty()); }

TEST(Tokenizer, DefaultRulesProtectFigAndSplitBrackets) {
  const TokenizerRules &rules = default_biomedical_rules();
  const TokenizerRule *fig = rules.exception(U"Fig.");
  ASSERT_NE(fig, nullptr);
  EXPECT_EQ(fig->kind, RuleKind::kProtect);
  const auto prefixes = rules.prefixes();
  EXPECT_NE(std::find(prefixes.begin(), prefixes.end(), U"("),
            prefixes.end());
  EXPECT_EQ(tok("NF-kappa"), (Strings{"NF-kappa"}));
  EXPECT_EQ(tok("mg/kg"), (Strings{"mg", "/", "kg"}));
}

TEST(Tokenizer, FixtureCases) {
  const auto cases =
      testing_support::read_jsonl(testing_support::test_data(
          "tokenizer_cases.jsonl"));
  ASSERT_EQ(cases.size(), 28u);
  for (const auto &c : cases) {
    const std::string text = c.at("text").get<std::string>();
    EXPECT_EQ(tok(text), c.at("tokens").get<Strings>()) << "input: " << text;
  }
}

TEST(Tokenizer, FuzzInvariants) {
  Rng rng(99);
  for (int i = 0; i < 2000; ++i) {
    const std::string s = testing_support::fuzz_text(rng);
    const Document a = tokenize(s, default_biomedical_rules());
    const Document b = tokenize(s, default_biomedical_rules());
    ASSERT_EQ(utf8_encode(detokenize(a)), s);
    ASSERT_TRUE(std::equal(a.tokens().begin(), a.tokens().end(),
                           b.tokens().begin(), b.tokens().end()));
    for (const Token &t : a.tokens()) ASSERT_GT(t.end, t.start);
  }
}

double seconds_for(const std::string &text, int reps) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t n = 0;
  for (int r = 0; r < reps; ++r) {
    n += tokenize(text, default_biomedical_rules()).tokens().size();
  }
  const auto end = std::chrono::steady_clock::now();
  EXPECT_GT(n, 0u);
  return std::chrono::duration<double>(end - start).count();
}

TEST(Tokenizer, RuntimeScalesLinearly) {
  Rng rng(5);
  std::string text;
  while (text.size() < 200000) text += testing_support::fuzz_text(rng) + " ";
  const std::string doubled = text + text;
  // Best of several runs to damp scheduler noise.
  double single = 1e9;
  double twice = 1e9;
  for (int attempt = 0; attempt < 7; ++attempt) {
    single = std::min(single, seconds_for(text, 8));
    twice = std::min(twice, seconds_for(doubled, 8));
  }
  EXPECT_LE(twice, 2.5 * single) << "n: " << single << " s, 2n: " << twice;
}

TEST(TokenizerRules, ParseAndSerialize) {
  const TokenizerRules rules = TokenizerRules::parse(
      "# comment\nPREFIX (\nSUFFIX )\nINFIX /\nPROTECT e.g.\n"
      "SPECIAL cannot => can|not\n");
  EXPECT_EQ(rules.rules().size(), 5u);
  const TokenizerRules again = TokenizerRules::parse(rules.to_source());
  ASSERT_EQ(again.rules().size(), rules.rules().size());
  for (std::size_t i = 0; i < rules.rules().size(); ++i) {
    EXPECT_EQ(again.rules()[i].kind, rules.rules()[i].kind);
    EXPECT_EQ(again.rules()[i].literal, rules.rules()[i].literal);
    EXPECT_EQ(again.rules()[i].pieces, rules.rules()[i].pieces);
  }
  EXPECT_EQ(surfaces(tokenize("(x/y) cannot", rules)),
            (Strings{"(", "x", "/", "y", ")", "can", "not"}));
}

TEST(TokenizerRules, ParseErrorsCarryLineNumbers) {
  try {
    TokenizerRules::parse("PREFIX (\nBOGUS x\n");
    FAIL() << "expected DataError";
  } catch (const DataError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(TokenizerRules::parse("PREFIX\n"), DataError);
  EXPECT_THROW(TokenizerRules::parse("SPECIAL abc => ab|d\n"), DataError);
  EXPECT_THROW(TokenizerRules::load("/nonexistent/rules"), DataError);
}

TEST(TokenizerRules, ShippedFileMatchesEmbeddedDefaults) {
  const TokenizerRules from_file =
      TokenizerRules::load(testing_support::repo_data("default_tokenizer.rules"));
  EXPECT_EQ(from_file.to_source(), default_biomedical_rules().to_source());
}

}  // namespace
}  // namespace bioling
