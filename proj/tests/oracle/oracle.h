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


// Reference implementations used only by tests. They follow the written
// definitions directly, with ordered maps keyed by strings, and share no
// code with the library beyond UTF-8 decoding and case folding.

#ifndef BIOLING_TESTS_ORACLE_ORACLE_H_
#define BIOLING_TESTS_ORACLE_ORACLE_H_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using GramCounts = std::map<std::u32string, std::size_t>;
using WeightMap = std::map<std::u32string, double>;

// Lowercase, split at whitespace, pad each word with one space on each
// side and slide a window of three characters.
GramCounts gram_counts(const std::string &utf8);

class Tfidf {
 public:
  Tfidf(const std::vector<std::string> &corpus, std::size_t min_df);

  const std::map<std::u32string, std::size_t> &df() const { return df_; }
  double idf(const std::u32string &gram) const;

  // count * idf over in-vocabulary grams, before normalization.
  WeightMap raw(const std::string &s) const;
  // raw(s) with every count multiplied by `scale`, then unit-normalized.
  WeightMap encode(const std::string &s, double scale = 1.0) const;

 private:
  std::size_t n_;
  std::map<std::u32string, std::size_t> df_;
};

double cosine(const WeightMap &a, const WeightMap &b);

struct Hit {
  std::string alias;
  double similarity;
};

// Scores every alias against the query and sorts by similarity (capped at
// 1), then by alias bytes.
std::vector<Hit> top_k(const Tfidf &model,
                       const std::vector<std::string> &aliases,
                       const std::string &query, std::size_t k);

// Precomputed alias vectors for repeated scans.
class Scanner {
 public:
  Scanner(const Tfidf &model, std::vector<std::string> aliases);
  std::vector<Hit> top_k(const std::string &query, std::size_t k) const;

 private:
  using Dense = std::vector<std::pair<std::size_t, double>>;
  Dense densify(const WeightMap &v) const;

  const Tfidf &model_;
  std::map<std::u32string, std::size_t> ids_;  // vocabulary rank
  std::vector<std::string> aliases_;
  std::vector<Dense> vectors_;
};

// Right-to-left subsequence check: every alphanumeric character of the
// short form occurs in the long form in order (case-insensitively), and
// the first one starts a word of the long form.
bool short_form_matches(const std::u32string &short_form,
                        const std::u32string &long_form);

}  // namespace oracle

#endif  // BIOLING_TESTS_ORACLE_ORACLE_H_
