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

// Concept knowledge base: concepts with aliases and the many-to-many table
// from normalized alias strings to concept ids.
//
// On disk a KB is JSON Lines, one concept per line:
//   {"concept_id": "C0001", "canonical_name": "Lung Cancer",
//    "aliases": ["cancer"], "types": ["T191"], "definition": null}

#ifndef BIOLING_KB_H_
#define BIOLING_KB_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bioling {

struct Concept {
  std::string concept_id;
  std::string canonical_name;
  // Original alias strings, in file order, without exact duplicates. Always
  // contains an alias that normalizes to the canonical name.
  std::vector<std::string> aliases;
  std::vector<std::string> types;
  std::optional<std::string> definition;

  bool has_definition() const { return definition.has_value(); }
  bool operator==(const Concept &) const = default;
};

// Lowercases, collapses whitespace runs to one space and strips leading and
// trailing whitespace. Idempotent.
std::string normalize_alias(std::string_view alias);

class AliasTable {
 public:
  struct Entry {
    std::string key;      // normalized alias
    std::string surface;  // first original spelling seen
    std::vector<std::string> concept_ids;  // sorted, unique
  };

  // Records that `surface` (normalized to a key) names `concept_id`.
  void add(std::string_view surface, const std::string &concept_id);

  // Concept ids for a normalized key; empty if unknown.
  std::span<const std::string> concepts(std::string_view key) const;

  // Entries in order of first insertion.
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> by_key_;
};

class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Validates and indexes concepts. Throws DataError on duplicate ids, empty
  // ids or names, or aliases that normalize to the empty string. Adds the
  // canonical name to the aliases when no alias normalizes to it.
  explicit KnowledgeBase(std::vector<Concept> concepts,
                         std::uint64_t bytes_on_disk = 0);

  std::span<const Concept> concepts() const { return concepts_; }
  const AliasTable &alias_table() const { return alias_table_; }
  const Concept *find(std::string_view concept_id) const;
  std::uint64_t bytes_on_disk() const { return bytes_on_disk_; }

 private:
  std::vector<Concept> concepts_;
  AliasTable alias_table_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::uint64_t bytes_on_disk_ = 0;
};

// Parses KB JSON Lines. Blank lines are skipped. Errors carry the line
// number; duplicate ids are reported by name.
KnowledgeBase parse_kb(std::istream &in, std::uint64_t bytes_on_disk = 0);
KnowledgeBase load_kb(const std::string &path);

void write_kb(const KnowledgeBase &kb, std::ostream &out);
void save_kb(const KnowledgeBase &kb, const std::string &path);

struct KbStats {
  std::uint64_t n_concepts = 0;
  std::uint64_t n_aliases = 0;         // distinct normalized aliases
  std::uint64_t n_shared_aliases = 0;  // aliases naming 2+ concepts
  std::uint64_t bytes_on_disk = 0;

  bool operator==(const KbStats &) const = default;
};

KbStats kb_stats(const KnowledgeBase &kb);

}  // namespace bioling

#endif  // BIOLING_KB_H_
