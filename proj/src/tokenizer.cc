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

#include "bioling/tokenizer.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "bioling/error.h"
#include "bioling/text_util.h"
#include "bioling/unicode.h"

namespace bioling {

TokenizerRules::TokenizerRules(std::vector<TokenizerRule> rules)
    : rules_(std::move(rules)) {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const TokenizerRule &rule = rules_[i];
    if (rule.literal.empty()) throw DataError("empty rule literal");
    for (char32_t ch : rule.literal) {
      if (is_space(ch)) throw DataError("rule literal contains whitespace");
    }
    switch (rule.kind) {
      case RuleKind::kPrefix:
        prefixes_.push_back(rule.literal);
        break;
      case RuleKind::kSuffix:
        suffixes_.push_back(rule.literal);
        break;
      case RuleKind::kInfix:
        infixes_.push_back(rule.literal);
        if (infix_first_chars_.find(rule.literal[0]) == std::u32string::npos) {
          infix_first_chars_.push_back(rule.literal[0]);
        }
        break;
      case RuleKind::kSpecial: {
        std::u32string joined;
        for (const auto &piece : rule.pieces) {
          if (piece.empty()) throw DataError("empty SPECIAL piece");
          joined += piece;
        }
        if (joined != rule.literal) {
          throw DataError("SPECIAL pieces do not spell the literal");
        }
        [[fallthrough]];
      }
      case RuleKind::kProtect:
        // First definition of a literal wins.
        exceptions_.emplace(rule.literal, i);
        max_exception_length_ =
            std::max(max_exception_length_, rule.literal.size());
        break;
    }
  }
}

TokenizerRules TokenizerRules::parse(std::string_view source) {
  std::vector<TokenizerRule> rules;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(source)) {
    ++line_no;
    line = trim_ascii(line);
    if (line.empty() || line[0] == '#') continue;
    const std::size_t space = line.find(' ');
    const std::string_view directive = line.substr(0, space);
    const std::string_view arg =
        space == std::string_view::npos ? std::string_view()
                                        : trim_ascii(line.substr(space + 1));
    try {
      TokenizerRule rule;
      if (directive == "PREFIX") {
        rule.kind = RuleKind::kPrefix;
      } else if (directive == "SUFFIX") {
        rule.kind = RuleKind::kSuffix;
      } else if (directive == "INFIX") {
        rule.kind = RuleKind::kInfix;
      } else if (directive == "PROTECT") {
        rule.kind = RuleKind::kProtect;
      } else if (directive == "SPECIAL") {
        rule.kind = RuleKind::kSpecial;
      } else {
        throw DataError("unknown directive '" + std::string(directive) + "'");
      }
      std::string_view literal = arg;
      if (rule.kind == RuleKind::kSpecial) {
        const std::size_t arrow = arg.find(" => ");
        if (arrow == std::string_view::npos) {
          throw DataError("SPECIAL requires '<literal> => <piece>|<piece>'");
        }
        literal = trim_ascii(arg.substr(0, arrow));
        std::string_view pieces = trim_ascii(arg.substr(arrow + 4));
        while (true) {
          const std::size_t bar = pieces.find('|');
          rule.pieces.push_back(utf8_decode(pieces.substr(0, bar)));
          if (bar == std::string_view::npos) break;
          pieces.remove_prefix(bar + 1);
        }
      }
      if (literal.empty()) throw DataError("missing literal");
      rule.literal = utf8_decode(literal);
      // Validate this rule on its own so errors carry the line number.
      TokenizerRules({rule});
      rules.push_back(std::move(rule));
    } catch (const DataError &e) {
      throw DataError(e.what(), line_no);
    }
  }
  return TokenizerRules(std::move(rules));
}

TokenizerRules TokenizerRules::load(const std::string &path) {
  return parse(read_file(path));
}

const TokenizerRule *TokenizerRules::exception(
    std::u32string_view token) const {
  if (token.size() > max_exception_length_) return nullptr;
  auto it = exceptions_.find(std::u32string(token));
  return it == exceptions_.end() ? nullptr : &rules_[it->second];
}

std::string TokenizerRules::to_source() const {
  std::ostringstream out;
  for (const TokenizerRule &rule : rules_) {
    switch (rule.kind) {
      case RuleKind::kPrefix: out << "PREFIX "; break;
      case RuleKind::kSuffix: out << "SUFFIX "; break;
      case RuleKind::kInfix: out << "INFIX "; break;
      case RuleKind::kProtect: out << "PROTECT "; break;
      case RuleKind::kSpecial: out << "SPECIAL "; break;
    }
    out << utf8_encode(rule.literal);
    if (rule.kind == RuleKind::kSpecial) {
      out << " =>";
      for (std::size_t i = 0; i < rule.pieces.size(); ++i) {
        out << (i == 0 ? " " : "|") << utf8_encode(rule.pieces[i]);
      }
    }
    out << '\n';
  }
  return out.str();
}

const TokenizerRules &default_biomedical_rules() {
  static const TokenizerRules rules =
      TokenizerRules::parse(default_tokenizer_rules_source());
  return rules;
}

namespace {

class Splitter {
 public:
  Splitter(const std::u32string &text, const TokenizerRules &rules,
           std::vector<Token> *out)
      : text_(text), rules_(rules), out_(out) {}

  // Splits the whitespace-free chunk [lo, hi).
  void split_chunk(std::size_t lo, std::size_t hi) {
    const std::size_t suffix_mark = suffixes_.size();
    if (peel(&lo, &hi)) {
      split_infixes(lo, hi);
    }
    flush_suffixes(suffix_mark);
  }

 private:
  bool matches_at(std::size_t pos, std::size_t hi,
                  const std::u32string &literal) const {
    return pos + literal.size() <= hi &&
           std::equal(literal.begin(), literal.end(), text_.begin() + pos);
  }

  void emit(std::size_t start, std::size_t end) {
    out_->push_back(Token{start, end});
  }

  // Emits exceptions and strips prefixes and suffixes from [lo, hi). Peeled
  // suffixes are stacked and emitted later in text order. Returns true if a
  // nonempty core remains that still needs infix splitting.
  bool peel(std::size_t *lo, std::size_t *hi) {
    while (*lo < *hi) {
      const std::u32string_view rest(text_.data() + *lo, *hi - *lo);
      if (const TokenizerRule *rule = rules_.exception(rest)) {
        if (rule->kind == RuleKind::kSpecial) {
          std::size_t pos = *lo;
          for (const auto &piece : rule->pieces) {
            emit(pos, pos + piece.size());
            pos += piece.size();
          }
        } else {
          emit(*lo, *hi);
        }
        return false;
      }
      bool peeled = false;
      for (const auto &prefix : rules_.prefixes()) {
        if (matches_at(*lo, *hi, prefix)) {
          emit(*lo, *lo + prefix.size());
          *lo += prefix.size();
          peeled = true;
          break;
        }
      }
      if (peeled) continue;
      for (const auto &suffix : rules_.suffixes()) {
        if (suffix.size() <= *hi - *lo &&
            matches_at(*hi - suffix.size(), *hi, suffix)) {
          suffixes_.push_back(Token{*hi - suffix.size(), *hi});
          *hi -= suffix.size();
          peeled = true;
          break;
        }
      }
      if (!peeled) return true;
    }
    return false;
  }

  // Splits [lo, hi) at every infix occurrence, scanning left to right. The
  // pieces between infixes contain no infix by construction, so they are
  // only peeled.
  void split_infixes(std::size_t lo, std::size_t hi) {
    const std::u32string &firsts = rules_.infix_first_chars();
    std::size_t piece_start = lo;
    std::size_t pos = lo;
    while (pos < hi) {
      const std::u32string *found = nullptr;
      if (firsts.find(text_[pos]) != std::u32string::npos) {
        for (const auto &infix : rules_.infixes()) {
          if (matches_at(pos, hi, infix)) {
            found = &infix;
            break;
          }
        }
      }
      if (found == nullptr) {
        ++pos;
        continue;
      }
      split_piece(piece_start, pos);
      emit(pos, pos + found->size());
      pos += found->size();
      piece_start = pos;
    }
    split_piece(piece_start, hi);
  }

  void split_piece(std::size_t lo, std::size_t hi) {
    if (lo == hi) return;
    const std::size_t suffix_mark = suffixes_.size();
    if (peel(&lo, &hi)) emit(lo, hi);
    flush_suffixes(suffix_mark);
  }

  void flush_suffixes(std::size_t mark) {
    while (suffixes_.size() > mark) {
      out_->push_back(suffixes_.back());
      suffixes_.pop_back();
    }
  }

  const std::u32string &text_;
  const TokenizerRules &rules_;
  std::vector<Token> *out_;
  std::vector<Token> suffixes_;
};

}  // namespace

Document tokenize(std::u32string text, const TokenizerRules &rules) {
  std::vector<Token> tokens;
  Splitter splitter(text, rules, &tokens);
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < n && !is_space(text[j])) ++j;
    splitter.split_chunk(i, j);
    i = j;
  }
  return Document(std::move(text), std::move(tokens));
}

Document tokenize(std::string_view utf8, const TokenizerRules &rules) {
  return tokenize(utf8_decode(utf8), rules);
}

}  // namespace bioling
