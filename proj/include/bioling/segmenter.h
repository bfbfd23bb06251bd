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

// Rule-based sentence segmentation over token sequences.
//
// A boundary is placed after a terminal punctuation token (one ending in
// '.', '!', '?' or an ellipsis) when all of the following hold:
//   - the token is not on the NOSPLIT stoplist,
//   - no bracket is open at that point,
//   - closing quotes attached to it and citations directly after it are
//     taken into the current sentence, and the remaining tests apply to
//     the last token taken,
//   - the next token starts with an uppercase letter, a digit or an opening
//     bracket (unless confirmation is disabled).

#ifndef BIOLING_SEGMENTER_H_
#define BIOLING_SEGMENTER_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>

#include "bioling/document.h"
#include "bioling/tokenizer.h"

namespace bioling {

struct SegmenterConfig {
  std::unordered_set<std::u32string> no_split;
  bool cite_bracket = false;
  bool cite_author_year = false;
  bool confirm_next = true;

  static SegmenterConfig parse(std::string_view source);
  static SegmenterConfig load(const std::string &path);
};

std::string_view default_segmenter_config_source();
const SegmenterConfig &default_segmenter_config();

// Number of tokens forming a bracketed numeric citation ("[", numbers, "]")
// starting at token i, or 0.
std::size_t match_bracket_citation(const Document &doc, std::size_t i);

// Number of tokens forming a parenthesized author-year citation starting at
// token i, or 0. Accepts "(Name, 2002)", "(Name et al., 2002)",
// "(Name and Other 2002a)", multiple references separated by ";" and a
// trailing page reference.
std::size_t match_author_year_citation(const Document &doc, std::size_t i);

// Citation recognized at token i under the enabled patterns, or 0.
std::size_t match_citation(const Document &doc, std::size_t i,
                           const SegmenterConfig &cfg);

// Returns a copy of doc with sentences partitioning its tokens. Existing
// sentences are ignored. Unbalanced closing brackets are tolerated; the
// depth counter never drops below zero.
Document segment(const Document &doc, const SegmenterConfig &cfg);

// Fraction of known-single sentences kept as exactly one sentence after
// tokenization and segmentation. Throws InvalidArgument on an empty set.
double citation_split_rate(std::span<const std::string> sentences,
                           const SegmenterConfig &cfg,
                           const TokenizerRules &rules =
                               default_biomedical_rules());

}  // namespace bioling

#endif  // BIOLING_SEGMENTER_H_
