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

// Character 3-gram TF-IDF encoding.
//
// A string is lowercased and split at whitespace; each word w is padded as
// " w " and every window of three code points is a gram. Grams never span
// two words, and a one-letter word still yields two grams.
//
// Weights are raw gram counts times a smoothed idf,
//   idf(g) = ln((1 + N) / (1 + df(g))) + 1,
// where N is the number of training strings and df(g) the number of those
// strings containing g. Only grams with df >= min_df are in the vocabulary.
// Encoded vectors are L2-normalized.

#ifndef BIOLING_NGRAM_H_
#define BIOLING_NGRAM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bioling {

// Three code points packed 21 bits apiece.
using Gram = std::uint64_t;

inline Gram pack_gram(char32_t a, char32_t b, char32_t c) {
  return (static_cast<Gram>(a) << 42) | (static_cast<Gram>(b) << 21) |
         static_cast<Gram>(c);
}
std::u32string unpack_gram(Gram g);

// All grams of s, with repetition, in order of occurrence.
std::vector<std::u32string> extract_3grams(std::u32string_view s);
std::vector<std::u32string> extract_3grams(std::string_view utf8);

// Distinct grams of s with their counts, sorted by packed value.
std::vector<std::pair<Gram, std::uint32_t>> count_3grams(
    std::u32string_view s);

struct SparseEntry {
  std::uint32_t index;
  double weight;

  bool operator==(const SparseEntry &) const = default;
};

// Entries sorted by strictly increasing index.
struct SparseVector {
  std::vector<SparseEntry> entries;

  bool empty() const { return entries.empty(); }
  bool operator==(const SparseVector &) const = default;
};

// Sums products over shared indices in increasing index order.
double dot(const SparseVector &a, const SparseVector &b);
double l2_norm(const SparseVector &v);
// Divides by the L2 norm; the zero vector is returned unchanged.
SparseVector l2_normalized(SparseVector v);

class NgramVectorizer {
 public:
  struct VocabEntry {
    Gram gram;
    std::uint32_t df;
    double idf;
  };

  NgramVectorizer() = default;

  // Throws InvalidArgument for an empty corpus, min_df == 0, or when no gram
  // reaches min_df ("no grams survive min_df").
  static NgramVectorizer fit(std::span<const std::string> corpus,
                             std::uint32_t min_df = 10);

  // Rebuilds a fitted vectorizer from stored document frequencies. Throws
  // DataError if any entry violates the vocabulary invariants.
  static NgramVectorizer from_counts(
      std::vector<std::pair<Gram, std::uint32_t>> grams,
      std::uint64_t n_training_docs, std::uint32_t min_df);

  // Vocabulary sorted by gram; a gram's position is its vector index.
  std::span<const VocabEntry> vocabulary() const { return vocab_; }
  std::optional<std::uint32_t> index_of(Gram g) const;
  std::uint64_t n_training_docs() const { return n_training_docs_; }
  std::uint32_t min_df() const { return min_df_; }
  std::size_t size() const { return vocab_.size(); }

  // Unnormalized tf * idf over in-vocabulary grams.
  SparseVector raw_tfidf(std::u32string_view s) const;
  SparseVector raw_tfidf(std::string_view utf8) const;

  // raw_tfidf, L2-normalized. Strings with no in-vocabulary gram encode to
  // the zero vector.
  SparseVector encode(std::u32string_view s) const;
  SparseVector encode(std::string_view utf8) const;

 private:
  void build_lookup();

  std::vector<VocabEntry> vocab_;
  std::unordered_map<Gram, std::uint32_t> lookup_;
  std::uint64_t n_training_docs_ = 0;
  std::uint32_t min_df_ = 0;
};

}  // namespace bioling

#endif  // BIOLING_NGRAM_H_
