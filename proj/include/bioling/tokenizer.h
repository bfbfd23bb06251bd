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

#ifndef BIOLING_TOKENIZER_H_
#define BIOLING_TOKENIZER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bioling/document.h"

namespace bioling {

enum class RuleKind { kPrefix, kSuffix, kInfix, kProtect, kSpecial };

struct TokenizerRule {
  RuleKind kind;
  std::u32string literal;
  // Only for kSpecial: nonempty pieces whose concatenation is the literal.
  std::vector<std::u32string> pieces;
};

// Ordered, immutable rule table. Within each class the earliest rule wins;
// protected tokens and special cases take precedence over every split rule.
class TokenizerRules {
 public:
  TokenizerRules() = default;
  explicit TokenizerRules(std::vector<TokenizerRule> rules);

  // Parses the line-oriented rules format. Throws DataError with the line
  // number on unknown directives, empty literals, literals containing
  // whitespace, or SPECIAL pieces that do not spell the literal.
  static TokenizerRules parse(std::string_view source);
  static TokenizerRules load(const std::string &path);

  std::span<const TokenizerRule> rules() const { return rules_; }
  std::span<const std::u32string> prefixes() const { return prefixes_; }
  std::span<const std::u32string> suffixes() const { return suffixes_; }
  std::span<const std::u32string> infixes() const { return infixes_; }

  // Returns the exception rule (kProtect or kSpecial) for a token, if any.
  const TokenizerRule *exception(std::u32string_view token) const;
  std::size_t max_exception_length() const { return max_exception_length_; }

  // First code points of all infix literals, for a quick pre-check.
  const std::u32string &infix_first_chars() const {
    return infix_first_chars_;
  }

  // Serializes back to the rules file format.
  std::string to_source() const;

 private:
  std::vector<TokenizerRule> rules_;
  std::vector<std::u32string> prefixes_;
  std::vector<std::u32string> suffixes_;
  std::vector<std::u32string> infixes_;
  std::unordered_map<std::u32string, std::size_t> exceptions_;
  std::size_t max_exception_length_ = 0;
  std::u32string infix_first_chars_;
};

// Source text of the shipped default rule table.
std::string_view default_tokenizer_rules_source();

// The shipped default rule table, parsed once.
const TokenizerRules &default_biomedical_rules();

// Splits text into tokens. Whitespace separates candidate tokens; each is
// then peeled by prefix and suffix rules and finally split at infixes. The
// resulting Document always satisfies the core invariants, and runtime is
// linear in the input length times the number of rules.
Document tokenize(std::u32string text, const TokenizerRules &rules);
Document tokenize(std::string_view utf8, const TokenizerRules &rules);

}  // namespace bioling

#endif  // BIOLING_TOKENIZER_H_
