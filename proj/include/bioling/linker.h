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

// Candidate generation for entity linking.
//
// A mention (after optional abbreviation expansion) is encoded and its k
// nearest alias strings are retrieved. Every concept behind each alias
// becomes a candidate; a concept reached through several aliases keeps its
// best similarity. Since aliases can name many concepts, a candidate set can
// be larger than k as well as smaller.

#ifndef BIOLING_LINKER_H_
#define BIOLING_LINKER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bioling/abbrev.h"
#include "bioling/alias_index.h"

namespace bioling {

struct Candidate {
  std::string concept_id;
  std::string alias;  // best-matching alias surface
  double similarity;

  bool operator==(const Candidate &) const = default;
};

struct CandidateSet {
  std::string mention;     // original surface, never rewritten
  std::size_t start = 0;   // code point offsets, when linked in a document
  std::size_t end = 0;
  std::string query_text;  // string actually encoded
  // Sorted by similarity, descending; concept ids unique.
  std::vector<Candidate> candidates;
  // Set when retrieval was impossible, e.g. "out_of_vocabulary".
  std::optional<std::string> empty_reason;

  bool operator==(const CandidateSet &) const = default;
};

// UTF-8 short form to long form.
using Expansions = std::map<std::string, std::string>;
Expansions utf8_expansions(const ExpansionMap &map);

// Throws InvalidArgument on an empty mention.
CandidateSet generate_candidates(const AliasIndex &index,
                                 const AliasTable &alias_table,
                                 std::string_view mention, KParam k,
                                 const Expansions *expansion = nullptr);

// Candidates from an already retrieved neighbor list; used to derive the
// sets for several k from a single retrieval at the largest k.
std::vector<Candidate> candidates_from_neighbors(
    const AliasIndex &index, const AliasTable &alias_table,
    std::span<const Neighbor> neighbors);

}  // namespace bioling

#endif  // BIOLING_LINKER_H_
