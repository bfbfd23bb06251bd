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

#include "bioling/abbrev.h"

#include <algorithm>
#include <utility>

#include "bioling/unicode.h"

namespace bioling {

namespace {

struct Range {
  std::size_t start;
  std::size_t end;
};

Range trim(const std::u32string &text, Range r) {
  while (r.start < r.end && is_space(text[r.start])) ++r.start;
  while (r.end > r.start && is_space(text[r.end - 1])) --r.end;
  return r;
}

std::size_t count_words(std::u32string_view s) {
  std::size_t words = 0;
  bool in_word = false;
  for (char32_t ch : s) {
    if (is_space(ch)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++words;
    }
  }
  return words;
}

bool has_upper(std::u32string_view s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return is_upper(c); });
}

// Keeps only the last `limit` words of the range.
Range last_words(const std::u32string &text, Range r, std::size_t limit) {
  r = trim(text, r);
  std::size_t words = 0;
  std::size_t pos = r.end;
  while (pos > r.start) {
    while (pos > r.start && is_space(text[pos - 1])) --pos;
    if (pos == r.start) break;
    if (words == limit) return trim(text, Range{pos, r.end});
    while (pos > r.start && !is_space(text[pos - 1])) --pos;
    ++words;
  }
  return trim(text, Range{pos, r.end});
}

// Innermost parentheticals of [start, end), each paired with the position
// right after the closest preceding parenthesis character (or start).
struct Parenthetical {
  std::size_t open;
  std::size_t close;
  std::size_t context_start;
};

std::vector<Parenthetical> innermost_parentheticals(const std::u32string &text,
                                                    std::size_t start,
                                                    std::size_t end) {
  std::vector<Parenthetical> out;
  std::vector<std::pair<std::size_t, bool>> stack;  // open, has_child
  std::size_t last_paren_end = start;
  std::vector<std::size_t> contexts;
  for (std::size_t i = start; i < end; ++i) {
    if (text[i] == U'(') {
      if (!stack.empty()) stack.back().second = true;
      stack.emplace_back(i, false);
      contexts.push_back(last_paren_end);
      last_paren_end = i + 1;
    } else if (text[i] == U')') {
      if (!stack.empty()) {
        const auto [open, has_child] = stack.back();
        const std::size_t context = contexts.back();
        stack.pop_back();
        contexts.pop_back();
        if (!has_child) out.push_back(Parenthetical{open, i, context});
      }
      last_paren_end = i + 1;
    }
  }
  return out;
}

}  // namespace

bool is_valid_short_form(std::u32string_view sf) {
  if (sf.size() < 2 || sf.size() > 10) return false;
  if (count_words(sf) > 2) return false;
  if (!std::any_of(sf.begin(), sf.end(),
                   [](char32_t c) { return is_letter(c); })) {
    return false;
  }
  return is_alnum(sf[0]);
}

std::size_t long_form_word_limit(std::u32string_view sf) {
  const std::size_t n = static_cast<std::size_t>(
      std::count_if(sf.begin(), sf.end(), [](char32_t c) { return is_alnum(c); }));
  return std::min(n + 5, 2 * n);
}

std::size_t find_long_form_start(std::u32string_view sf,
                                 std::u32string_view window) {
  std::ptrdiff_t l = static_cast<std::ptrdiff_t>(window.size()) - 1;
  for (std::ptrdiff_t s = static_cast<std::ptrdiff_t>(sf.size()) - 1; s >= 0;
       --s) {
    const char32_t c = to_lower(sf[s]);
    if (!is_alnum(c)) continue;
    while (l >= 0 && (to_lower(window[l]) != c ||
                      (s == 0 && l > 0 && is_alnum(window[l - 1])))) {
      --l;
    }
    if (l < 0) return std::u32string_view::npos;
    --l;
  }
  // Extend to the start of the whitespace-delimited word.
  while (l >= 0 && !is_space(window[l])) --l;
  return static_cast<std::size_t>(l + 1);
}

std::vector<AbbrevCandidate> abbreviation_candidates(const Document &doc) {
  std::vector<AbbrevCandidate> out;
  const std::u32string &text = doc.text();
  std::vector<Range> sentences;
  if (!doc.sentences().empty()) {
    for (const SentenceSpan &s : doc.sentences()) {
      sentences.push_back(Range{doc.sentence_start(s), doc.sentence_end(s)});
    }
  } else if (!doc.tokens().empty()) {
    sentences.push_back(
        Range{doc.tokens().front().start, doc.tokens().back().end});
  }
  for (const Range &sentence : sentences) {
    for (const Parenthetical &p :
         innermost_parentheticals(text, sentence.start, sentence.end)) {
      Range inner{p.open + 1, p.close};
      for (std::size_t i = inner.start; i < inner.end; ++i) {
        if (text[i] == U',' || text[i] == U';') {
          inner.end = i;
          break;
        }
      }
      inner = trim(text, inner);
      if (inner.start == inner.end) continue;
      const std::u32string_view inner_text(text.data() + inner.start,
                                           inner.end - inner.start);
      if (is_valid_short_form(inner_text)) {
        const Range window = last_words(text, Range{p.context_start, p.open},
                                        long_form_word_limit(inner_text));
        if (window.start == window.end) continue;
        out.push_back(AbbrevCandidate{doc.mention(inner.start, inner.end),
                                      window.start, window.end, false});
        continue;
      }
      // Mirrored: "SF (long form)".
      const Range before = trim(text, Range{p.context_start, p.open});
      std::size_t word_start = before.end;
      while (word_start > before.start && !is_space(text[word_start - 1])) {
        --word_start;
      }
      if (word_start == before.end) continue;
      const std::u32string_view sf(text.data() + word_start,
                                   before.end - word_start);
      if (!is_valid_short_form(sf) || !has_upper(sf)) continue;
      const Range window =
          last_words(text, inner, long_form_word_limit(sf));
      out.push_back(AbbrevCandidate{doc.mention(word_start, before.end),
                                    window.start, window.end, true});
    }
  }
  return out;
}

std::vector<AbbreviationPair> find_abbreviations(const Document &doc) {
  std::vector<AbbreviationPair> pairs;
  const std::u32string &text = doc.text();
  for (const AbbrevCandidate &c : abbreviation_candidates(doc)) {
    const std::u32string_view window(text.data() + c.window_start,
                                     c.window_end - c.window_start);
    const std::u32string &sf = c.short_form.surface;
    const std::size_t offset = find_long_form_start(sf, window);
    if (offset == std::u32string_view::npos) continue;
    const std::u32string_view lf = window.substr(offset);
    if (lf.size() < sf.size()) continue;
    std::u32string sf_space = sf;
    sf_space += U' ';
    if (lf.find(sf_space) != std::u32string_view::npos) continue;
    if (lf.size() >= sf.size() && lf.substr(lf.size() - sf.size()) == sf) {
      continue;
    }
    const std::size_t lf_start = c.window_start + offset;
    pairs.push_back(AbbreviationPair{
        c.short_form, doc.mention(lf_start, c.window_end)});
  }
  return pairs;
}

ExpansionMap expansion_map(std::span<const AbbreviationPair> pairs) {
  ExpansionMap map;
  for (const AbbreviationPair &p : pairs) {
    map.emplace(p.short_form.surface, p.long_form.surface);
  }
  return map;
}

}  // namespace bioling
