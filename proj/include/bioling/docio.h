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

// JSON Lines document records.
//
// One document per line:
//   {"text": "...", "tokens": [{"start": 0, "end": 4}, ...],
//    "sentences": [{"first_token": 0, "last_token": 5}, ...]}
// Offsets count Unicode scalar values, not bytes. Optional fields written
// by later stages are "abbreviations" ([{"short": {start, end},
// "long": {start, end}}]) and "mentions" ([{start, end}]). Unknown fields are
// carried through unchanged.

#ifndef BIOLING_DOCIO_H_
#define BIOLING_DOCIO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bioling/document.h"
#include "json.hpp"

namespace bioling {

struct DocRecord {
  Document doc;
  bool has_tokens = false;
  bool has_sentences = false;
  std::optional<std::vector<AbbreviationPair>> abbreviations;
  std::optional<std::vector<MentionSpan>> mentions;
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();
};

// Parses one JSONL line. Throws DataError for malformed JSON, a missing
// "text", invalid UTF-8, or spans that violate the document invariants.
DocRecord parse_doc_record(std::string_view line);

// A record holding raw text only, as read from a plain-text line.
DocRecord text_record(std::string_view utf8);

std::string format_doc_record(const DocRecord &record);

nlohmann::ordered_json span_json(std::size_t start, std::size_t end);

}  // namespace bioling

#endif  // BIOLING_DOCIO_H_
