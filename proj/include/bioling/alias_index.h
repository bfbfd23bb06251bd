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

// Searchable store of encoded alias vectors.
//
// The exact backend scores a query against an inverted index over gram
// postings and returns the true top k by cosine similarity, ties broken by
// alias string in ascending byte order. When fewer than k aliases share a
// gram with the query, zero-similarity aliases fill the remainder in the
// same order, so k >= size() returns every alias. The zero vector (a query
// with no in-vocabulary gram) has no neighbours.
//
// The LSH backend hashes vectors with random hyperplanes into several
// tables, probes the query's buckets and their neighbours within a Hamming
// radius, and ranks the colliding aliases exactly. It may miss true
// neighbours; its recall is measured against the exact backend.

#ifndef BIOLING_ALIAS_INDEX_H_
#define BIOLING_ALIAS_INDEX_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bioling/kb.h"
#include "bioling/ngram.h"

namespace bioling {

// Number of nearest alias strings to retrieve; always at least 1.
class KParam {
 public:
  explicit KParam(std::size_t k);
  std::size_t value() const { return k_; }

 private:
  std::size_t k_;
};

enum class Backend : std::uint8_t { kExact = 0, kLsh = 1 };

std::string_view backend_name(Backend backend);
// Accepts "exact" and "lsh"; throws InvalidArgument otherwise.
Backend parse_backend(std::string_view name);

struct LshParams {
  std::uint32_t tables = 16;
  std::uint32_t bits = 10;
  std::uint32_t probe_radius = 1;
  std::uint64_t seed = 0x9E3779B97F4A7C15ull;

  bool operator==(const LshParams &) const = default;
};

struct Neighbor {
  std::uint32_t alias;
  double similarity;

  bool operator==(const Neighbor &) const = default;
};

class AliasIndex {
 public:
  static constexpr std::uint16_t kFormatVersion = 1;

  AliasIndex() = default;

  // One entry per alias table entry (distinct normalized alias), encoded
  // from its original surface. Throws InvalidArgument for invalid LSH
  // parameters.
  static AliasIndex build(const AliasTable &aliases,
                          NgramVectorizer vectorizer, Backend backend,
                          const LshParams &lsh = {});

  void write(std::ostream &out) const;
  void save(const std::string &path) const;
  // Throws DataError on bad magic, unsupported version, truncation or
  // inconsistent contents.
  static AliasIndex read(std::istream &in);
  static AliasIndex load(const std::string &path);

  // Top k under the configured backend.
  std::vector<Neighbor> nearest(const SparseVector &query,
                                KParam k) const;
  std::vector<Neighbor> nearest_exact(const SparseVector &query,
                                      KParam k) const;
  std::vector<Neighbor> nearest_lsh(const SparseVector &query,
                                    KParam k) const;

  std::size_t size() const { return vectors_.size(); }
  const std::string &alias(std::uint32_t i) const {
    return aliases_.entries()[i].surface;
  }
  // Normalized alias key, as used by AliasTable lookups.
  const std::string &alias_key(std::uint32_t i) const {
    return aliases_.entries()[i].key;
  }
  const SparseVector &vector(std::uint32_t i) const { return vectors_[i]; }
  const AliasTable &alias_table() const { return aliases_; }
  const NgramVectorizer &vectorizer() const { return vectorizer_; }
  Backend backend() const { return backend_; }
  const LshParams &lsh_params() const { return lsh_; }

  // Total order used for ranking: higher similarity first, then alias
  // string ascending.
  bool ranks_before(const Neighbor &a, const Neighbor &b) const {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return lex_rank_[a.alias] < lex_rank_[b.alias];
  }

 private:
  void build_postings();
  void build_lsh();
  std::uint32_t signature(const SparseVector &v, std::uint32_t table) const;

  AliasTable aliases_;
  NgramVectorizer vectorizer_;
  std::vector<SparseVector> vectors_;
  Backend backend_ = Backend::kExact;
  LshParams lsh_;

  // Position of each alias in byte-lexicographic order, and the inverse.
  std::vector<std::uint32_t> lex_rank_;
  std::vector<std::uint32_t> lex_order_;

  // Gram postings in CSR layout, alias ids ascending within each gram.
  std::vector<std::uint64_t> posting_offsets_;
  std::vector<std::uint32_t> posting_alias_;
  std::vector<double> posting_weight_;

  // LSH hyperplanes, [table * bits + bit][gram index], and bucket tables.
  std::vector<float> planes_;
  std::vector<std::unordered_map<std::uint32_t, std::vector<std::uint32_t>>>
      buckets_;
};

// Distinct alias surfaces of a KB, one per normalized alias, in insertion
// order. This is the corpus the vectorizer is fitted on.
std::vector<std::string> alias_corpus(const KnowledgeBase &kb);

// Fits nothing; encodes the KB's aliases with an already fitted vectorizer.
AliasIndex build_index(const KnowledgeBase &kb, NgramVectorizer vectorizer,
                       Backend backend, const LshParams &lsh = {});

// Alias strings with similarities, best first, at most k.
std::vector<std::pair<std::string, double>> nearest_aliases(
    const AliasIndex &index, const SparseVector &query, KParam k);

}  // namespace bioling

#endif  // BIOLING_ALIAS_INDEX_H_
