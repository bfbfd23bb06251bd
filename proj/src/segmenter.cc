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

#include "bioling/segmenter.h"

#include <vector>

#include "bioling/error.h"
#include "bioling/text_util.h"
#include "bioling/unicode.h"

namespace bioling {

namespace {

constexpr std::size_t kMaxBracketCitationTokens = 24;
constexpr std::size_t kMaxAuthorYearTokens = 48;

bool is_open_bracket(std::u32string_view s) {
  return s == U"(" || s == U"[" || s == U"{";
}

bool is_close_bracket(std::u32string_view s) {
  return s == U")" || s == U"]" || s == U"}";
}

bool is_terminal(std::u32string_view s) {
  if (s.empty()) return false;
  const char32_t last = s.back();
  return last == U'.' || last == U'!' || last == U'?' || last == U'…';
}

bool is_closing_quote(std::u32string_view s) {
  return s == U"\"" || s == U"'" || s == U"”" || s == U"’" || s == U"»";
}

// Digits, optionally joined by commas and dashes: "12", "3,4", "5-7".
bool is_citation_number(std::u32string_view s) {
  bool digit = false;
  for (char32_t ch : s) {
    if (is_digit(ch)) {
      digit = true;
    } else if (ch != U',' && ch != U'-' && ch != U'–') {
      return false;
    }
  }
  return digit;
}

// Four-digit year with an optional lowercase disambiguation letter.
bool is_year(std::u32string_view s) {
  if (s.size() == 5 && s[4] >= U'a' && s[4] <= U'z') s.remove_suffix(1);
  if (s.size() != 4) return false;
  for (char32_t ch : s) {
    if (!is_digit(ch)) return false;
  }
  return (s[0] == U'1' && s[1] >= U'5') || (s[0] == U'2' && s[1] == U'0');
}

bool is_name_word(std::u32string_view s) {
  if (s.empty() || !is_letter(s[0])) return false;
  for (char32_t ch : s) {
    if (!is_letter(ch) && ch != U'-' && ch != U'\'' && ch != U'’' &&
        ch != U'.') {
      return false;
    }
  }
  return true;
}

bool is_citation_filler(std::u32string_view s) {
  return s == U"," || s == U";" || s == U"&" || s == U":" || s == U"." ||
         is_citation_number(s) || is_year(s) || is_name_word(s);
}

bool confirms_boundary(std::u32string_view next) {
  const char32_t ch = next[0];
  return is_upper(ch) || is_digit(ch) || ch == U'(' || ch == U'[' ||
         ch == U'"' || ch == U'“';
}

bool stoplisted(const Document &doc, std::size_t i,
                const SegmenterConfig &cfg) {
  const std::u32string_view s = doc.surface(i);
  if (cfg.no_split.count(std::u32string(s))) return true;
  if (s == U"." && i > 0 && doc.trailing_ws(i - 1).empty()) {
    std::u32string prev(doc.surface(i - 1));
    if (cfg.no_split.count(prev)) return true;
    prev += U'.';
    if (cfg.no_split.count(prev)) return true;
  }
  return false;
}

}  // namespace

SegmenterConfig SegmenterConfig::parse(std::string_view source) {
  SegmenterConfig cfg;
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
      if (directive == "NOSPLIT") {
        if (arg.empty()) throw DataError("NOSPLIT requires a token");
        cfg.no_split.insert(utf8_decode(arg));
        continue;
      }
      if (!arg.empty()) {
        throw DataError("directive '" + std::string(directive) +
                        "' takes no argument");
      }
      if (directive == "CITE_BRACKET") {
        cfg.cite_bracket = true;
      } else if (directive == "CITE_AUTHOR_YEAR") {
        cfg.cite_author_year = true;
      } else if (directive == "NO_CONFIRM") {
        cfg.confirm_next = false;
      } else {
        throw DataError("unknown directive '" + std::string(directive) + "'");
      }
    } catch (const DataError &e) {
      throw DataError(e.what(), line_no);
    }
  }
  return cfg;
}

SegmenterConfig SegmenterConfig::load(const std::string &path) {
  return parse(read_file(path));
}

const SegmenterConfig &default_segmenter_config() {
  static const SegmenterConfig cfg =
      SegmenterConfig::parse(default_segmenter_config_source());
  return cfg;
}

std::size_t match_bracket_citation(const Document &doc, std::size_t i) {
  const std::size_t n = doc.tokens().size();
  if (i >= n || doc.surface(i) != U"[") return 0;
  bool number = false;
  for (std::size_t j = i + 1; j < n && j - i <= kMaxBracketCitationTokens;
       ++j) {
    const std::u32string_view s = doc.surface(j);
    if (s == U"]") return number ? j - i + 1 : 0;
    if (is_citation_number(s)) {
      number = true;
    } else if (s != U"," && s != U"-" && s != U"–") {
      return 0;
    }
  }
  return 0;
}

std::size_t match_author_year_citation(const Document &doc, std::size_t i) {
  const std::size_t n = doc.tokens().size();
  if (i + 1 >= n || doc.surface(i) != U"(") return 0;
  const std::u32string_view first = doc.surface(i + 1);
  if (!is_name_word(first) || !is_upper(first[0])) return 0;
  bool year = false;
  for (std::size_t j = i + 1; j < n && j - i <= kMaxAuthorYearTokens; ++j) {
    const std::u32string_view s = doc.surface(j);
    if (s == U")") {
      const std::u32string_view last = doc.surface(j - 1);
      return year && (is_year(last) || is_citation_number(last)) ? j - i + 1
                                                                 : 0;
    }
    if (is_year(s)) {
      year = true;
    } else if (!is_citation_filler(s)) {
      return 0;
    }
  }
  return 0;
}

std::size_t match_citation(const Document &doc, std::size_t i,
                           const SegmenterConfig &cfg) {
  if (cfg.cite_bracket) {
    if (std::size_t len = match_bracket_citation(doc, i)) return len;
  }
  if (cfg.cite_author_year) {
    if (std::size_t len = match_author_year_citation(doc, i)) return len;
  }
  return 0;
}

Document segment(const Document &doc, const SegmenterConfig &cfg) {
  const std::size_t n = doc.tokens().size();
  std::vector<SentenceSpan> sentences;
  std::size_t start = 0;
  std::size_t depth = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::u32string_view s = doc.surface(i);
    if (is_open_bracket(s)) {
      ++depth;
    } else if (is_close_bracket(s)) {
      if (depth > 0) --depth;
    } else if (depth == 0 && is_terminal(s) && !stoplisted(doc, i, cfg)) {
      // Closing quotes attached to the punctuation and citations directly
      // after it belong to this sentence.
      std::size_t last = i;
      for (;;) {
        if (last + 1 < n && doc.trailing_ws(last).empty() &&
            is_closing_quote(doc.surface(last + 1))) {
          ++last;
        } else if (std::size_t len = match_citation(doc, last + 1, cfg)) {
          last += len;
        } else {
          break;
        }
      }
      if (last + 1 < n &&
          (!cfg.confirm_next || confirms_boundary(doc.surface(last + 1)))) {
        sentences.push_back(SentenceSpan{start, last});
        start = last + 1;
      }
      i = last + 1;
      continue;
    }
    ++i;
  }
  if (start < n) sentences.push_back(SentenceSpan{start, n - 1});
  return doc.with_sentences(std::move(sentences));
}

double citation_split_rate(std::span<const std::string> sentences,
                           const SegmenterConfig &cfg,
                           const TokenizerRules &rules) {
  if (sentences.empty()) throw InvalidArgument("empty evaluation set");
  std::size_t intact = 0;
  for (const std::string &sentence : sentences) {
    const Document doc = segment(tokenize(sentence, rules), cfg);
    if (doc.sentences().size() == 1) ++intact;
  }
  return static_cast<double>(intact) / static_cast<double>(sentences.size());
}

}  // namespace bioling
