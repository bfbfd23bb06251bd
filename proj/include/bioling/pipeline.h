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


// Document-level pipeline steps shared by the CLI and the benchmark.
//
// Each ensure_* step fills in what a record lacks and leaves existing
// annotations alone, so records can enter the pipeline at any stage.

#ifndef BIOLING_PIPELINE_H_
#define BIOLING_PIPELINE_H_

#include <string>
#include <vector>

#include "bioling/alias_index.h"
#include "bioling/docio.h"
#include "bioling/linker.h"
#include "bioling/segmenter.h"
#include "bioling/tokenizer.h"

namespace bioling {

void ensure_tokens(DocRecord &record, const TokenizerRules &rules);
void ensure_sentences(DocRecord &record, const TokenizerRules &rules,
                      const SegmenterConfig &cfg);
void ensure_abbreviations(DocRecord &record, const TokenizerRules &rules,
                          const SegmenterConfig &cfg);

// Fallback mention proposer for documents without upstream mentions: every
// token of three or more characters that contains a letter and is not a
// common function word.
std::vector<MentionSpan> propose_mentions(const Document &doc);

struct LinkOptions {
  KParam k{30};
  bool use_abbreviations = true;
};

// Links the record's mentions, or proposed ones when it has none. Tokens,
// sentences and (when enabled) abbreviations are computed if missing.
std::vector<CandidateSet> link_record(DocRecord &record,
                                      const AliasIndex &index,
                                      const LinkOptions &options,
                                      const TokenizerRules &rules,
                                      const SegmenterConfig &cfg);

// One output line: {"doc", "mention", "start", "end", "query_text",
// "candidates": [{"concept_id", "alias", "score"}]}, plus "empty_reason"
// when retrieval was impossible.
std::string format_candidate_set(const CandidateSet &set, std::size_t doc);

}  // namespace bioling

#endif  // BIOLING_PIPELINE_H_
