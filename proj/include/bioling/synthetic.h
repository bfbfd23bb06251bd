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


// Seeded synthetic data at desk scale: a knowledge base with shared
// aliases, perturbed gold mentions against it, and abstract-like documents
// that mention its concepts. Everything is a pure function of the options.

#ifndef BIOLING_SYNTHETIC_H_
#define BIOLING_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bioling/evals.h"
#include "bioling/kb.h"

namespace bioling {

struct SyntheticKbOptions {
  std::size_t n_concepts = 4000;
  // Distinct normalized aliases, canonical names included.
  std::size_t n_aliases = 10000;
  // Generic terms ("tumor", "fever", ...) each attached to several concepts.
  std::size_t n_generic = 60;
  std::uint64_t seed = 1;
};

// Throws InvalidArgument when n_aliases < n_concepts or the alias target
// cannot be reached.
KnowledgeBase make_synthetic_kb(const SyntheticKbOptions &options);

// Mentions of random concepts: an alias used verbatim, with a typo, with a
// word dropped, or with case and hyphenation changed.
std::vector<GoldMention> make_synthetic_gold(const KnowledgeBase &kb,
                                             std::size_t n,
                                             std::uint64_t seed);

// Abstract-like paragraphs of at least target_bytes UTF-8 bytes with
// abbreviation definitions, citations, decimals and biomedical
// abbreviations such as "e.g." and "Fig.".
std::vector<std::string> make_synthetic_abstracts(
    const KnowledgeBase &kb, std::size_t n, std::uint64_t seed,
    std::size_t target_bytes = 1500);

}  // namespace bioling

#endif  // BIOLING_SYNTHETIC_H_
