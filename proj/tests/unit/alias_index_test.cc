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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "bioling/alias_index.h"
#include "bioling/error.h"
#include "bioling/kb.h"
#include "bioling/rng.h"
#include "oracle/oracle.h"
#include "test_support.h"

namespace bioling {
namespace {

using testing_support::desk_set;
using testing_support::test_data;

AliasIndex fixture_index(const std::string &file, Backend backend,
                         std::uint32_t min_df = 1) {
  const KnowledgeBase kb = load_kb(test_data(file));
  return build_index(kb, NgramVectorizer::fit(alias_corpus(kb), min_df),
                     backend);
}

void expect_same_as_oracle(const AliasIndex &index,
                           const oracle::Scanner &scanner,
                           const std::string &query, std::size_t k) {
  const auto mine = index.nearest_exact(index.vectorizer().encode(query),
                                        KParam(k));
  const auto ref = scanner.top_k(query, k);
  ASSERT_EQ(mine.size(), ref.size()) << query;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    ASSERT_EQ(index.alias(mine[i].alias), ref[i].alias)
        << "query '" << query << "' k " << k << " rank " << i;
    ASSERT_NEAR(mine[i].similarity, ref[i].similarity, 1e-9);
  }
}

TEST(KParam, RejectsZero) {
  EXPECT_THROW(KParam(0), InvalidArgument);
  EXPECT_EQ(KParam(3).value(), 3u);
}

TEST(Backend, Names) {
  EXPECT_EQ(parse_backend("exact"), Backend::kExact);
  EXPECT_EQ(parse_backend("lsh"), Backend::kLsh);
  EXPECT_EQ(backend_name(Backend::kLsh), "lsh");
  EXPECT_THROW(parse_backend("annoy"), InvalidArgument);
}

TEST(AliasIndex, HoldsExactlyTheDistinctAliases) {
  const KnowledgeBase kb = load_kb(test_data("three_concept_kb.jsonl"));
  const AliasIndex index = fixture_index("three_concept_kb.jsonl",
                                         Backend::kExact);
  ASSERT_EQ(index.size(), 10u);
  std::set<std::string> keys;
  for (std::uint32_t i = 0; i < index.size(); ++i) {
    keys.insert(index.alias_key(i));
  }
  std::set<std::string> expected;
  for (const auto &e : kb.alias_table().entries()) expected.insert(e.key);
  EXPECT_EQ(keys, expected);
}

TEST(AliasIndex, SelfSimilarityRanksFirst) {
  const AliasIndex index = fixture_index("toy_kb.jsonl", Backend::kExact);
  for (std::uint32_t i = 0; i < index.size(); ++i) {
    const auto hits = index.nearest(index.vector(i), KParam(1));
    ASSERT_EQ(hits.size(), 1u);
    EXPECT_EQ(hits[0].alias, i) << index.alias(i);
    EXPECT_NEAR(hits[0].similarity, 1.0, 1e-12);
    EXPECT_LE(hits[0].similarity, 1.0);
  }
}

TEST(AliasIndex, LargeKReturnsEverythingSorted) {
  const AliasIndex index = fixture_index("toy_kb.jsonl", Backend::kExact);
  const auto hits =
      index.nearest(index.vectorizer().encode("lung cancer"), KParam(500));
  ASSERT_EQ(hits.size(), index.size());
  for (std::size_t i = 1; i < hits.size(); ++i) {
    EXPECT_TRUE(index.ranks_before(hits[i - 1], hits[i]));
  }
  std::set<std::uint32_t> ids;
  for (const Neighbor &n : hits) {
    ids.insert(n.alias);
    EXPECT_GE(n.similarity, 0.0);
    EXPECT_LE(n.similarity, 1.0);
  }
  EXPECT_EQ(ids.size(), index.size());
  // Aliases sharing no gram with the query fill up in byte order.
  const auto few = index.nearest(index.vectorizer().encode("lung"),
                                 KParam(5));
  ASSERT_EQ(few.size(), 5u);
  EXPECT_GT(few[1].similarity, 0.0);
  EXPECT_EQ(index.alias(few[2].alias), "breast cancer");
  EXPECT_EQ(index.alias(few[3].alias), "breast carcinoma");
  EXPECT_EQ(index.alias(few[4].alias), "cancer");
  EXPECT_EQ(few[4].similarity, 0.0);
  // A query with no known gram has no neighbours at all.
  EXPECT_TRUE(index.nearest(SparseVector{}, KParam(3)).empty());
}

TEST(AliasIndex, NearestAliasesIsPrefixOfLargerK) {
  const AliasIndex index = fixture_index("toy_kb.jsonl", Backend::kExact);
  const SparseVector q = index.vectorizer().encode("necrosis factor");
  const auto all = nearest_aliases(index, q, KParam(10));
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto some = nearest_aliases(index, q, KParam(k));
    ASSERT_EQ(some.size(), k);
    EXPECT_TRUE(std::equal(some.begin(), some.end(), all.begin()));
  }
}

TEST(AliasIndex, ExactMatchesBruteForceOnDeskSet) {
  const auto &desk = desk_set();
  const oracle::Tfidf model(desk.aliases, 10);
  const oracle::Scanner scanner(model, desk.aliases);
  Rng rng(404);
  for (int i = 0; i < 150; ++i) {
    const std::string q = testing_support::fuzz_query(rng, desk.aliases);
    for (std::size_t k : {1, 5, 25, 100}) {
      expect_same_as_oracle(desk.exact, scanner, q, k);
    }
  }
}

TEST(AliasIndex, ExactMatchesBruteForceWithManyTies) {
  // The shared-alias fixture at min_df 1 has many equal scores.
  const KnowledgeBase kb = load_kb(test_data("shared_alias_kb.jsonl"));
  const auto aliases = alias_corpus(kb);
  const AliasIndex index = fixture_index("shared_alias_kb.jsonl",
                                         Backend::kExact);
  const oracle::Tfidf model(aliases, 1);
  const oracle::Scanner scanner(model, aliases);
  for (const std::string q : {"cancer", "carcinoma", "colon", "xyz", "c"}) {
    for (std::size_t k = 1; k <= 8; ++k) {
      expect_same_as_oracle(index, scanner, q, k);
    }
  }
}

TEST(AliasIndex, LshReranksExactlyAndIsPrefixConsistent) {
  const auto &desk = desk_set();
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const SparseVector q = desk.lsh.vectorizer().encode(
        testing_support::fuzz_query(rng, desk.aliases));
    const auto top = desk.lsh.nearest(q, KParam(25));
    for (std::size_t j = 0; j < top.size(); ++j) {
      EXPECT_NEAR(top[j].similarity,
                  std::min(1.0, dot(q, desk.lsh.vector(top[j].alias))),
                  1e-12);
      if (j > 0) {
        EXPECT_TRUE(desk.lsh.ranks_before(top[j - 1], top[j]));
      }
    }
    const auto five = desk.lsh.nearest(q, KParam(5));
    ASSERT_LE(five.size(), top.size());
    EXPECT_TRUE(std::equal(five.begin(), five.end(), top.begin()));
  }
}

TEST(AliasIndex, LshParameterValidation) {
  const KnowledgeBase kb = load_kb(test_data("toy_kb.jsonl"));
  const auto vec = NgramVectorizer::fit(alias_corpus(kb), 1);
  LshParams p;
  p.tables = 0;
  EXPECT_THROW(build_index(kb, vec, Backend::kLsh, p), InvalidArgument);
  p = {};
  p.bits = 0;
  EXPECT_THROW(build_index(kb, vec, Backend::kLsh, p), InvalidArgument);
  p = {};
  p.probe_radius = 3;
  EXPECT_THROW(build_index(kb, vec, Backend::kLsh, p), InvalidArgument);
  p = {};
  p.bits = 1;
  p.probe_radius = 2;
  EXPECT_THROW(build_index(kb, vec, Backend::kLsh, p), InvalidArgument);
}

std::string serialize(const AliasIndex &index) {
  std::ostringstream out;
  index.write(out);
  return out.str();
}

AliasIndex deserialize(const std::string &bytes) {
  std::istringstream in(bytes);
  return AliasIndex::read(in);
}

TEST(AliasIndex, SaveLoadFixedPoint) {
  const auto &desk = desk_set();
  for (const AliasIndex *index : {&desk.exact, &desk.lsh}) {
    const std::string path = testing_support::temp_dir() + "/index.blix";
    index->save(path);
    const AliasIndex loaded = AliasIndex::load(path);
    EXPECT_EQ(loaded.backend(), index->backend());
    EXPECT_EQ(loaded.lsh_params(), index->lsh_params());
    EXPECT_EQ(loaded.size(), index->size());
    EXPECT_EQ(serialize(loaded), serialize(*index));
    Rng rng(100);
    for (int i = 0; i < 100; ++i) {
      const std::string q = testing_support::fuzz_query(rng, desk.aliases);
      for (std::size_t k : {1, 25, 100}) {
        EXPECT_EQ(loaded.nearest(loaded.vectorizer().encode(q), KParam(k)),
                  index->nearest(index->vectorizer().encode(q), KParam(k)));
      }
    }
  }
}

TEST(AliasIndex, RejectsBadFiles) {
  const AliasIndex index = fixture_index("toy_kb.jsonl", Backend::kExact);
  const std::string bytes = serialize(index);
  std::string wrong_version = bytes;
  wrong_version[4] = static_cast<char>(AliasIndex::kFormatVersion + 1);
  try {
    deserialize(wrong_version);
    FAIL() << "expected DataError";
  } catch (const DataError &e) {
    EXPECT_NE(std::string(e.what()).find("version"), std::string::npos);
  }
  std::string bad_magic = bytes;
  bad_magic[0] = 'X';
  EXPECT_THROW(deserialize(bad_magic), DataError);
  EXPECT_THROW(deserialize(bytes.substr(0, bytes.size() - 1)), DataError);
  EXPECT_THROW(deserialize(bytes.substr(0, 3)), DataError);
  EXPECT_THROW(deserialize(bytes + "x"), DataError);
  EXPECT_NO_THROW(deserialize(bytes));
  try {
    AliasIndex::load("/nonexistent/missing.blix");
    FAIL() << "expected DataError";
  } catch (const DataError &e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/missing.blix"),
              std::string::npos);
  }
}

}  // namespace
}  // namespace bioling
