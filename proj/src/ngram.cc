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

#include "bioling/ngram.h"

#include <algorithm>
#include <cmath>

#include "bioling/error.h"
#include "bioling/unicode.h"

namespace bioling {

namespace {

constexpr Gram kMask21 = (Gram{1} << 21) - 1;

// Calls fn(gram) for every padded word window of the lowercased string.
template <typename Fn>
void for_each_gram(std::u32string_view s, Fn &&fn) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !is_space(s[j])) ++j;
    // Padded word is " " + s[i, j) + " ".
    auto at = [&](std::size_t k) -> char32_t {
      if (k == 0 || k == j - i + 1) return U' ';
      return to_lower(s[i + k - 1]);
    };
    const std::size_t padded = j - i + 2;
    for (std::size_t k = 0; k + 3 <= padded; ++k) {
      fn(pack_gram(at(k), at(k + 1), at(k + 2)));
    }
    i = j;
  }
}

double idf_weight(std::uint64_t n_docs, std::uint32_t df) {
  return std::log((1.0 + static_cast<double>(n_docs)) /
                  (1.0 + static_cast<double>(df))) +
         1.0;
}

}  // namespace

std::u32string unpack_gram(Gram g) {
  return std::u32string{static_cast<char32_t>((g >> 42) & kMask21),
                        static_cast<char32_t>((g >> 21) & kMask21),
                        static_cast<char32_t>(g & kMask21)};
}

std::vector<std::u32string> extract_3grams(std::u32string_view s) {
  std::vector<std::u32string> grams;
  for_each_gram(s, [&](Gram g) { grams.push_back(unpack_gram(g)); });
  return grams;
}

std::vector<std::u32string> extract_3grams(std::string_view utf8) {
  return extract_3grams(std::u32string_view(utf8_decode(utf8)));
}

std::vector<std::pair<Gram, std::uint32_t>> count_3grams(
    std::u32string_view s) {
  std::vector<Gram> grams;
  for_each_gram(s, [&](Gram g) { grams.push_back(g); });
  std::sort(grams.begin(), grams.end());
  std::vector<std::pair<Gram, std::uint32_t>> counts;
  for (Gram g : grams) {
    if (!counts.empty() && counts.back().first == g) {
      ++counts.back().second;
    } else {
      counts.emplace_back(g, 1);
    }
  }
  return counts;
}

double dot(const SparseVector &a, const SparseVector &b) {
  double sum = 0.0;
  auto i = a.entries.begin();
  auto j = b.entries.begin();
  while (i != a.entries.end() && j != b.entries.end()) {
    if (i->index < j->index) {
      ++i;
    } else if (j->index < i->index) {
      ++j;
    } else {
      sum += i->weight * j->weight;
      ++i;
      ++j;
    }
  }
  return sum;
}

double l2_norm(const SparseVector &v) {
  double sum = 0.0;
  for (const SparseEntry &e : v.entries) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

SparseVector l2_normalized(SparseVector v) {
  const double norm = l2_norm(v);
  if (norm > 0.0) {
    for (SparseEntry &e : v.entries) e.weight /= norm;
  }
  return v;
}

NgramVectorizer NgramVectorizer::fit(std::span<const std::string> corpus,
                                     std::uint32_t min_df) {
  if (corpus.empty()) throw InvalidArgument("empty alias corpus");
  if (min_df == 0) throw InvalidArgument("min_df must be at least 1");
  std::unordered_map<Gram, std::uint32_t> df;
  for (const std::string &alias : corpus) {
    for (const auto &[gram, count] : count_3grams(utf8_decode(alias))) {
      ++df[gram];
    }
  }
  std::vector<std::pair<Gram, std::uint32_t>> kept;
  for (const auto &[gram, count] : df) {
    if (count >= min_df) kept.emplace_back(gram, count);
  }
  if (kept.empty()) throw InvalidArgument("no grams survive min_df");
  return from_counts(std::move(kept), corpus.size(), min_df);
}

NgramVectorizer NgramVectorizer::from_counts(
    std::vector<std::pair<Gram, std::uint32_t>> grams,
    std::uint64_t n_training_docs, std::uint32_t min_df) {
  std::sort(grams.begin(), grams.end());
  NgramVectorizer v;
  v.n_training_docs_ = n_training_docs;
  v.min_df_ = min_df;
  v.vocab_.reserve(grams.size());
  for (std::size_t i = 0; i < grams.size(); ++i) {
    const auto [gram, df] = grams[i];
    if (i > 0 && grams[i - 1].first == gram) {
      throw DataError("duplicate vocabulary gram");
    }
    if (df < min_df || df > n_training_docs) {
      throw DataError("vocabulary document frequency out of range");
    }
    v.vocab_.push_back(VocabEntry{gram, df, idf_weight(n_training_docs, df)});
  }
  v.build_lookup();
  return v;
}

void NgramVectorizer::build_lookup() {
  lookup_.clear();
  lookup_.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    lookup_.emplace(vocab_[i].gram, static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> NgramVectorizer::index_of(Gram g) const {
  auto it = lookup_.find(g);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

SparseVector NgramVectorizer::raw_tfidf(std::u32string_view s) const {
  SparseVector v;
  for (const auto &[gram, count] : count_3grams(s)) {
    auto it = lookup_.find(gram);
    if (it == lookup_.end()) continue;
    v.entries.push_back(
        SparseEntry{it->second, static_cast<double>(count) * vocab_[it->second].idf});
  }
  std::sort(v.entries.begin(), v.entries.end(),
            [](const SparseEntry &a, const SparseEntry &b) {
              return a.index < b.index;
            });
  return v;
}

SparseVector NgramVectorizer::raw_tfidf(std::string_view utf8) const {
  return raw_tfidf(std::u32string_view(utf8_decode(utf8)));
}

SparseVector NgramVectorizer::encode(std::u32string_view s) const {
  return l2_normalized(raw_tfidf(s));
}

SparseVector NgramVectorizer::encode(std::string_view utf8) const {
  return l2_normalized(raw_tfidf(utf8));
}

}  // namespace bioling
