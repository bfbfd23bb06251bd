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

// Unsupervised abbreviation detection (Schwartz & Hearst, 2003).
//
// Each innermost parenthetical of a sentence is a short-form site. The
// short form is the parenthesized text up to the first ',' or ';'. It must
// be 2 to 10 characters, at most two words, contain a letter and start with
// a letter or digit. The long form is searched in the text before the
// parenthesis, limited to the last min(|SF| + 5, 2 |SF|) words where |SF|
// counts the short form's letters and digits. Matching walks the short form
// right to left and finds each character case-insensitively in the window,
// also moving leftwards; the first character must begin a word. The long
// form is the shortest window suffix (extended to a whole word) that
// matches.
//
// When the parenthesized text is not a valid short form, the roles are
// swapped: the word right before the parenthesis is the short form (it must
// contain an uppercase letter) and the long form is searched inside the
// parentheses.

#ifndef BIOLING_ABBREV_H_
#define BIOLING_ABBREV_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bioling/document.h"

namespace bioling {

struct AbbrevCandidate {
  MentionSpan short_form;
  // Code point range searched for the long form.
  std::size_t window_start = 0;
  std::size_t window_end = 0;
  // True when the short form precedes the parenthesis.
  bool mirrored = false;
};

// Short-form validity: 2..10 characters, at most two words, at least one
// letter, first character a letter or digit.
bool is_valid_short_form(std::u32string_view sf);

// Maximum number of whitespace-separated words a long form may span.
std::size_t long_form_word_limit(std::u32string_view sf);

// Returns the offset (relative to window) where the shortest matching long
// form begins, or npos if the short form cannot be matched.
std::size_t find_long_form_start(std::u32string_view sf,
                                 std::u32string_view window);

// Candidates for every innermost parenthetical of every sentence. If the
// document has tokens but no sentences it is treated as one sentence.
std::vector<AbbrevCandidate> abbreviation_candidates(const Document &doc);

std::vector<AbbreviationPair> find_abbreviations(const Document &doc);

// Short form surface to long form surface. The first definition of a short
// form wins.
using ExpansionMap = std::map<std::u32string, std::u32string>;
ExpansionMap expansion_map(std::span<const AbbreviationPair> pairs);

}  // namespace bioling

#endif  // BIOLING_ABBREV_H_
