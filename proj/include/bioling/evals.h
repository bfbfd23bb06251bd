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


// Evaluation: candidate recall at K, segmentation accuracy, and synthetic
// citation sentences for stress-testing the segmenter.

#ifndef BIOLING_EVALS_H_
#define BIOLING_EVALS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bioling/alias_index.h"
#include "bioling/document.h"
#include "bioling/linker.h"

namespace bioling {

struct GoldMention {
  std::string mention;
  std::string concept_id;

  bool operator==(const GoldMention &) const = default;
};

// Reads {"mention": str, "concept_id": str} lines; blank lines are skipped.
std::vector<GoldMention> parse_gold_mentions(std::string_view jsonl);
std::vector<GoldMention> load_gold_mentions(const std::string &path);

struct RecallPoint {
  std::size_t k = 0;
  double recall = 0.0;
  double mean_candidates = 0.0;
  std::size_t max_candidates = 0;

  bool operator==(const RecallPoint &) const = default;
};

struct RecallCurve {
  std::vector<RecallPoint> points;  // k strictly increasing
};

// Fraction of gold mentions whose concept is among generate_candidates at
// each k. Retrieval runs once at the largest k; smaller k use its prefix,
// which is exactly what a separate query at that k returns.
// Throws InvalidArgument on an empty gold set or a k list that is empty or
// not strictly increasing.
RecallCurve recall_at_k(const AliasIndex &index, const AliasTable &alias_table,
                        std::span<const GoldMention> gold,
                        std::span<const KParam> ks,
                        const Expansions *expansion = nullptr);

// "k,recall,mean_candidates,max_candidates" with one row per point.
std::string recall_curve_csv(const RecallCurve &curve);

// Parses "1,5,10" into k values.
std::vector<KParam> parse_k_list(std::string_view list);

struct SegmentationAccuracy {
  double sentence_acc = 0.0;
  double abstract_acc = 0.0;
  std::size_t n_docs = 0;
  std::size_t n_gold_sentences = 0;
};

// Sentences are compared as character spans, so prediction and gold may be
// tokenized differently. Throws DataError naming the document when texts
// differ and InvalidArgument when the sets are empty or differ in size.
SegmentationAccuracy segmentation_accuracy(std::span<const Document> pred,
                                           std::span<const Document> gold);

enum class CitationFamily { kBracketSingle, kBracketMulti, kAuthorYear,
                            kSuperscript };
enum class CitationPosition { kMid, kBeforeFinalPeriod, kAfterFinalPeriod };

std::string_view citation_family_name(CitationFamily family);
std::string_view citation_position_name(CitationPosition position);

struct CitationSample {
  std::string text;
  CitationFamily family;
  CitationPosition position;
  std::size_t base;  // index into the distinct base sentences
};

// Number of distinct sentences make_citation_samples can produce.
std::uint64_t citation_corpus_capacity(
    std::span<const std::string> base_sentences);

// Injects one citation into each of n distinct sentences built from the
// base sentences. Family, position, base and citation are drawn uniformly;
// the result depends only on (base_sentences, seed, n). Throws
// InvalidArgument when n exceeds the capacity.
std::vector<CitationSample> make_citation_samples(
    std::span<const std::string> base_sentences, std::uint64_t seed,
    std::size_t n);

std::vector<std::string> make_citation_corpus(
    std::span<const std::string> base_sentences, std::uint64_t seed,
    std::size_t n);

// Sentences where a period directly precedes a bracketed or author-year
// citation: the cases a segmenter without citation rules splits.
bool is_adversarial(const CitationSample &sample);

}  // namespace bioling

#endif  // BIOLING_EVALS_H_
