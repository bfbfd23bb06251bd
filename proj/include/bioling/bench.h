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


// Wall-clock throughput harness.
//
// Each repetition runs the chosen stages over the whole corpus from raw
// text. Warmup repetitions are untimed. Loading rules and the index happens
// before run_bench and is not part of any timing here.

#ifndef BIOLING_BENCH_H_
#define BIOLING_BENCH_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bioling/alias_index.h"
#include "bioling/segmenter.h"
#include "bioling/tokenizer.h"

namespace bioling {

enum class Stage { kTokenize, kSegment, kAbbrev, kLink };

std::string_view stage_name(Stage stage);

// Parses "tokenize,segment,..." and closes the set under prerequisites:
// segment needs tokens, abbrev needs sentences, and link needs
// abbreviations to expand short forms. Returned in pipeline order.
std::vector<Stage> parse_stages(std::string_view list);

struct BenchOptions {
  std::vector<Stage> stages{Stage::kTokenize};
  std::size_t reps = 3;
  std::size_t warmup = 1;
  std::size_t workers = 1;  // 1 is the single-threaded path
  std::size_t k = 30;
  bool use_abbreviations = true;
  const AliasIndex *index = nullptr;  // required by the link stage
  const TokenizerRules *rules = nullptr;  // defaults when null
  const SegmenterConfig *segmenter = nullptr;
};

struct BenchReport {
  std::vector<std::string> stages;
  std::size_t n_docs = 0;
  std::size_t n_sentences = 0;
  std::size_t n_bytes = 0;
  std::size_t reps = 0;
  std::size_t warmup = 0;
  std::size_t workers = 1;
  std::vector<double> rep_wall_ms;  // one total per timed repetition
  std::vector<double> rep_cpu_ms;   // process CPU time per repetition
  double total_wall_ms = 0.0;       // sum over timed repetitions
  double ms_per_abstract_median = 0.0;
  double ms_per_abstract_mean = 0.0;
  double ms_per_sentence = 0.0;     // from the median repetition total
  double cpu_ms_median = 0.0;
  double load_ms = 0.0;             // filled in by the caller, if measured
  std::string hardware;
};

// Throws InvalidArgument on an empty corpus, reps == 0, workers == 0, or a
// link stage without an index.
BenchReport run_bench(std::span<const std::string> corpus,
                      const BenchOptions &options);

std::string hardware_note();
std::string format_report_table(const BenchReport &report);
std::string format_report_json(const BenchReport &report);

}  // namespace bioling

#endif  // BIOLING_BENCH_H_
