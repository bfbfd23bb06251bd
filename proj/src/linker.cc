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

#include "bioling/linker.h"

#include <unordered_set>

#include "bioling/error.h"
#include "bioling/unicode.h"

namespace bioling {

Expansions utf8_expansions(const ExpansionMap &map) {
  Expansions out;
  for (const auto &[short_form, long_form] : map) {
    out.emplace(utf8_encode(short_form), utf8_encode(long_form));
  }
  return out;
}

std::vector<Candidate> candidates_from_neighbors(
    const AliasIndex &index, const AliasTable &alias_table,
    std::span<const Neighbor> neighbors) {
  std::vector<Candidate> out;
  std::unordered_set<std::string_view> seen;
  // Neighbors arrive best first, so the first sighting of a concept carries
  // its highest similarity.
  for (const Neighbor &n : neighbors) {
    const std::string &surface = index.alias(n.alias);
    for (const std::string &id : alias_table.concepts(index.alias_key(n.alias))) {
      if (seen.insert(id).second) {
        out.push_back(Candidate{id, surface, n.similarity});
      }
    }
  }
  return out;
}

CandidateSet generate_candidates(const AliasIndex &index,
                                 const AliasTable &alias_table,
                                 std::string_view mention, KParam k,
                                 const Expansions *expansion) {
  if (mention.empty()) throw InvalidArgument("empty mention");
  CandidateSet set;
  set.mention = std::string(mention);
  set.query_text = set.mention;
  if (expansion != nullptr) {
    auto it = expansion->find(set.mention);
    if (it != expansion->end()) set.query_text = it->second;
  }
  const SparseVector query = index.vectorizer().encode(set.query_text);
  if (query.empty()) {
    set.empty_reason = "out_of_vocabulary";
    return set;
  }
  const std::vector<Neighbor> neighbors = index.nearest(query, k);
  set.candidates = candidates_from_neighbors(index, alias_table, neighbors);
  return set;
}

}  // namespace bioling
