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

#include "bioling/kb.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <utility>

#include "bioling/error.h"
#include "bioling/unicode.h"
#include "json.hpp"

namespace bioling {

using nlohmann::json;

std::string normalize_alias(std::string_view alias) {
  std::string out;
  out.reserve(alias.size());
  bool pending_space = false;
  for (char32_t ch : utf8_decode(alias)) {
    if (is_space(ch)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    utf8_append(to_lower(ch), &out);
  }
  return out;
}

void AliasTable::add(std::string_view surface, const std::string &concept_id) {
  std::string key = normalize_alias(surface);
  auto [it, inserted] = by_key_.try_emplace(key, entries_.size());
  if (inserted) {
    entries_.push_back(Entry{std::move(key), std::string(surface), {}});
  }
  std::vector<std::string> &ids = entries_[it->second].concept_ids;
  auto pos = std::lower_bound(ids.begin(), ids.end(), concept_id);
  if (pos == ids.end() || *pos != concept_id) ids.insert(pos, concept_id);
}

std::span<const std::string> AliasTable::concepts(std::string_view key) const {
  auto it = by_key_.find(std::string(key));
  if (it == by_key_.end()) return {};
  return entries_[it->second].concept_ids;
}

KnowledgeBase::KnowledgeBase(std::vector<Concept> concepts,
                             std::uint64_t bytes_on_disk)
    : concepts_(std::move(concepts)), bytes_on_disk_(bytes_on_disk) {
  for (std::size_t i = 0; i < concepts_.size(); ++i) {
    Concept &c = concepts_[i];
    if (c.concept_id.empty()) throw DataError("empty concept_id");
    if (!by_id_.emplace(c.concept_id, i).second) {
      throw DataError("duplicate concept_id '" + c.concept_id + "'");
    }
    const std::string canonical_key = normalize_alias(c.canonical_name);
    if (canonical_key.empty()) {
      throw DataError("empty canonical_name for '" + c.concept_id + "'");
    }
    std::vector<std::string> aliases;
    bool has_canonical = false;
    for (std::string &alias : c.aliases) {
      const std::string key = normalize_alias(alias);
      if (key.empty()) {
        throw DataError("empty alias for '" + c.concept_id + "'");
      }
      if (std::find(aliases.begin(), aliases.end(), alias) != aliases.end()) {
        continue;
      }
      has_canonical = has_canonical || key == canonical_key;
      aliases.push_back(std::move(alias));
    }
    if (!has_canonical) aliases.insert(aliases.begin(), c.canonical_name);
    c.aliases = std::move(aliases);
    for (const std::string &alias : c.aliases) {
      alias_table_.add(alias, c.concept_id);
    }
  }
}

const Concept *KnowledgeBase::find(std::string_view concept_id) const {
  auto it = by_id_.find(std::string(concept_id));
  return it == by_id_.end() ? nullptr : &concepts_[it->second];
}

namespace {

std::vector<std::string> string_array(const json &obj, const char *field) {
  std::vector<std::string> out;
  auto it = obj.find(field);
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw DataError(std::string("'") + field + "' must be an array");
  }
  for (const json &v : *it) {
    if (!v.is_string()) {
      throw DataError(std::string("'") + field + "' must contain strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

Concept parse_concept(const std::string &line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error &e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) throw DataError("expected a JSON object");
  Concept c;
  auto id = obj.find("concept_id");
  if (id == obj.end() || !id->is_string()) {
    throw DataError("missing string field 'concept_id'");
  }
  c.concept_id = id->get<std::string>();
  auto name = obj.find("canonical_name");
  if (name == obj.end() || !name->is_string()) {
    throw DataError("missing string field 'canonical_name'");
  }
  c.canonical_name = name->get<std::string>();
  c.aliases = string_array(obj, "aliases");
  c.types = string_array(obj, "types");
  auto def = obj.find("definition");
  if (def != obj.end() && !def->is_null()) {
    if (!def->is_string()) throw DataError("'definition' must be a string");
    c.definition = def->get<std::string>();
  }
  // Validate UTF-8 early so later stages can assume it.
  normalize_alias(c.concept_id);
  normalize_alias(c.canonical_name);
  return c;
}

}  // namespace

KnowledgeBase parse_kb(std::istream &in, std::uint64_t bytes_on_disk) {
  std::vector<Concept> concepts;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      Concept c = parse_concept(line);
      auto [it, inserted] = first_line.emplace(c.concept_id, line_no);
      if (!inserted) {
        throw DataError("duplicate concept_id '" + c.concept_id +
                        "' (first defined on line " +
                        std::to_string(it->second) + ")");
      }
      // Per-line validation so errors carry the line number.
      KnowledgeBase({c});
      concepts.push_back(std::move(c));
    } catch (const DataError &e) {
      throw DataError(e.what(), line_no);
    }
  }
  return KnowledgeBase(std::move(concepts), bytes_on_disk);
}

KnowledgeBase load_kb(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  return parse_kb(in, ec ? 0 : size);
}

void write_kb(const KnowledgeBase &kb, std::ostream &out) {
  for (const Concept &c : kb.concepts()) {
    nlohmann::ordered_json obj;
    obj["concept_id"] = c.concept_id;
    obj["canonical_name"] = c.canonical_name;
    obj["aliases"] = c.aliases;
    obj["types"] = c.types;
    obj["definition"] =
        c.definition ? nlohmann::ordered_json(*c.definition) : nullptr;
    out << obj.dump() << '\n';
  }
}

void save_kb(const KnowledgeBase &kb, const std::string &path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  write_kb(kb, out);
  if (!out) throw DataError("error writing '" + path + "'");
}

KbStats kb_stats(const KnowledgeBase &kb) {
  KbStats stats;
  stats.n_concepts = kb.concepts().size();
  stats.n_aliases = kb.alias_table().size();
  for (const auto &entry : kb.alias_table().entries()) {
    if (entry.concept_ids.size() > 1) ++stats.n_shared_aliases;
  }
  stats.bytes_on_disk = kb.bytes_on_disk();
  return stats;
}

}  // namespace bioling
