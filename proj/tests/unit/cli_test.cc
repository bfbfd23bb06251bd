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
#include <fstream>
#include <set>
#include <sstream>

#include "bioling/kb.h"
#include "bioling/synthetic.h"
#include "bioling/text_util.h"
#include "json.hpp"
#include "oracle/oracle.h"
#include "test_support.h"

namespace bioling {
namespace {

using testing_support::CliResult;
using testing_support::run_cli;
using testing_support::test_data;

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

std::string toy_index() {
  static const std::string path = [] {
    const std::string p = testing_support::temp_dir() + "/toy.blix";
    const CliResult r = run_cli({"index", "build", "--kb",
                                 test_data("toy_kb.jsonl"), "--min-df", "1",
                                 "--output", p});
    EXPECT_EQ(r.exit_code, 0) << r.err;
    return p;
  }();
  return path;
}

std::vector<nlohmann::json> parse_lines(const std::string &text) {
  std::vector<nlohmann::json> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    if (end > start) out.push_back(nlohmann::json::parse(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

TEST(Cli, EmptyStdinGivesEmptyOutput) {
  for (const char *cmd : {"tokenize", "segment", "abbrev"}) {
    const CliResult r = run_cli({cmd});
    EXPECT_EQ(r.exit_code, 0) << cmd << ": " << r.err;
    EXPECT_EQ(r.out, "") << cmd;
  }
}

TEST(Cli, UsageErrorsExitWithOne) {
  CliResult r = run_cli({"tokenize", "--no-such-flag"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.err, "--no-such-flag")) << r.err;
  r = run_cli({});
  EXPECT_EQ(r.exit_code, 1);
  r = run_cli({"link"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.err, "--index")) << r.err;
  r = run_cli({"--workers", "0", "tokenize"});
  EXPECT_EQ(r.exit_code, 1) << r.err;
  r = run_cli({"eval", "recall", "--index", toy_index(), "--gold",
               test_data("toy_kb.jsonl"), "--k-list", "0,x"});
  EXPECT_EQ(r.exit_code, 1) << r.err;
  r = run_cli({"--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(contains(r.out, "tokenize"));
}

TEST(Cli, MissingIndexNamesThePath) {
  const CliResult r = run_cli({"link", "--index", "missing.blix"},
                              "{\"text\": \"lung cancer\"}\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.err, "missing.blix")) << r.err;
  EXPECT_EQ(r.out, "");
}

TEST(Cli, DataErrorsCarryLineContext) {
  const CliResult r = run_cli(
      {"tokenize"}, "{\"text\": \"ok\"}\n{\"text\": 5}\n{\"text\": \"x\"}\n");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.err, "<stdin>:2")) << r.err;
  // The line before the bad one was written.
  EXPECT_EQ(parse_lines(r.out).size(), 1u);
  const CliResult missing = run_cli({"tokenize", "-i", "/nonexistent/in.jsonl"});
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_TRUE(contains(missing.err, "/nonexistent/in.jsonl"));
  const CliResult bad_rules =
      run_cli({"tokenize", "--rules", "/nonexistent/x.rules"}, "");
  EXPECT_EQ(bad_rules.exit_code, 2);
}

TEST(Cli, PlainInputAndFiles) {
  const std::string dir = testing_support::temp_dir();
  {
    std::ofstream in(dir + "/in.txt");
    in << "Mice were treated. Results improved.\n\nIL-2 rose.\n";
  }
  const CliResult r = run_cli({"segment", "--plain", "-i", dir + "/in.txt",
                               "-o", dir + "/out.jsonl"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::ifstream out(dir + "/out.jsonl");
  std::stringstream ss;
  ss << out.rdbuf();
  const auto docs = parse_lines(ss.str());
  // Blank lines are skipped.
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0]["sentences"].size(), 2u);
  EXPECT_EQ(docs[1]["text"], "IL-2 rose.");
}

TEST(Cli, EnvironmentDefaultsForRules) {
  const std::string dir = testing_support::temp_dir();
  {
    std::ofstream rules(dir + "/split.rules");
    rules << "INFIX -\n";
  }
  setenv("BIOLING_RULES", (dir + "/split.rules").c_str(), 1);
  const CliResult env = run_cli({"tokenize", "--plain"}, "IL-2\n");
  unsetenv("BIOLING_RULES");
  ASSERT_EQ(env.exit_code, 0) << env.err;
  EXPECT_EQ(parse_lines(env.out)[0]["tokens"].size(), 3u);
  const CliResult plain = run_cli({"tokenize", "--plain"}, "IL-2\n");
  EXPECT_EQ(parse_lines(plain.out)[0]["tokens"].size(), 1u);
}

TEST(Cli, OutputOrderIndependentOfWorkers) {
  SyntheticKbOptions options;
  options.n_concepts = 100;
  options.n_aliases = 250;
  const auto abstracts =
      make_synthetic_abstracts(make_synthetic_kb(options), 300, 9, 300);
  std::string input;
  for (const std::string &a : abstracts) input += a + "\n";
  const CliResult one =
      run_cli({"--workers", "1", "link", "--plain", "--index", toy_index(),
               "--k", "2"},
              input);
  ASSERT_EQ(one.exit_code, 0) << one.err;
  for (const char *workers : {"2", "4"}) {
    const CliResult many =
        run_cli({"--workers", workers, "link", "--plain", "--index",
                 toy_index(), "--k", "2"},
                input);
    ASSERT_EQ(many.exit_code, 0) << many.err;
    EXPECT_EQ(many.out, one.out) << workers << " workers";
  }
  const auto lines = parse_lines(one.out);
  ASSERT_FALSE(lines.empty());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_LE(lines[i - 1]["doc"].get<int>(), lines[i]["doc"].get<int>());
  }
}

// tokenize | segment | abbrev | link over the fixture abstract.
std::string run_pipeline() {
  const std::string input = bioling::read_file(
      test_data("pipeline_input.jsonl"));
  CliResult r = run_cli({"tokenize"}, input);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  r = run_cli({"segment"}, r.out);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  r = run_cli({"abbrev"}, r.out);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  r = run_cli({"link", "--index", toy_index(), "--k", "3"}, r.out);
  EXPECT_EQ(r.exit_code, 0) << r.err;
  return r.out;
}

TEST(Cli, PipelineMatchesGoldenFile) {
  const auto actual = parse_lines(run_pipeline());
  const auto golden =
      testing_support::read_jsonl(test_data("pipeline_golden.jsonl"));
  ASSERT_EQ(actual.size(), golden.size());
  for (std::size_t i = 0; i < golden.size(); ++i) {
    nlohmann::json a = actual[i];
    nlohmann::json g = golden[i];
    ASSERT_EQ(a["candidates"].size(), g["candidates"].size()) << i;
    for (std::size_t j = 0; j < g["candidates"].size(); ++j) {
      EXPECT_NEAR(a["candidates"][j]["score"].get<double>(),
                  g["candidates"][j]["score"].get<double>(), 1e-12);
      a["candidates"][j].erase("score");
      g["candidates"][j].erase("score");
    }
    EXPECT_EQ(a, g) << "line " << i + 1;
  }
}

TEST(Cli, GoldenFileAgreesWithBruteForce) {
  const KnowledgeBase kb = load_kb(test_data("toy_kb.jsonl"));
  const std::vector<std::string> aliases = alias_corpus(kb);
  const oracle::Tfidf model(aliases, 1);
  const auto golden =
      testing_support::read_jsonl(test_data("pipeline_golden.jsonl"));
  ASSERT_EQ(golden.size(), 7u);
  // The HSP mentions are queried through the definition in the text.
  EXPECT_EQ(golden[2]["mention"], "HSP");
  EXPECT_EQ(golden[2]["query_text"], "Heat shock protein");
  EXPECT_EQ(golden[4]["query_text"], "Heat shock protein");
  for (const auto &line : golden) {
    const auto hits = oracle::top_k(model, aliases,
                                    line["query_text"].get<std::string>(), 3);
    std::vector<std::pair<std::string, double>> expected;
    std::set<std::string> seen;
    for (const oracle::Hit &h : hits) {
      for (const std::string &id :
           kb.alias_table().concepts(normalize_alias(h.alias))) {
        if (seen.insert(id).second) expected.emplace_back(id, h.similarity);
      }
    }
    const auto &cands = line["candidates"];
    ASSERT_EQ(cands.size(), expected.size()) << line["mention"];
    for (std::size_t j = 0; j < expected.size(); ++j) {
      EXPECT_EQ(cands[j]["concept_id"], expected[j].first);
      EXPECT_NEAR(cands[j]["score"].get<double>(), expected[j].second, 1e-9);
    }
  }
}

TEST(Cli, StreamingMemoryIsBoundedByDocumentNotCorpus) {
  // Input and output go through files written and read line by line, so
  // this process stays small and equal for both runs: a spawned child's
  // peak RSS includes its parent's at the time of exec.
  const std::string dir = testing_support::temp_dir();
  auto stream = [&](std::size_t lines) {
    const std::string in = dir + "/in" + std::to_string(lines) + ".jsonl";
    const std::string out = dir + "/out" + std::to_string(lines) + ".jsonl";
    {
      std::ofstream f(in);
      for (std::size_t i = 0; i < lines; ++i) {
        f << "{\"text\": \"Cells (n = " << i
          << ") were treated with IL-2 [3]. Results improved in mice.\"}\n";
      }
    }
    CliResult r = run_cli({"segment", "-i", in, "-o", out});
    std::ifstream f(out);
    std::size_t n = 0;
    for (std::string line; std::getline(f, line);) ++n;
    EXPECT_EQ(n, lines);
    return r;
  };
  const CliResult small = stream(1000);
  const CliResult large = stream(100000);
  ASSERT_EQ(small.exit_code, 0) << small.err;
  ASSERT_EQ(large.exit_code, 0) << large.err;
  // 100k lines are about 8 MB in and 40 MB out; the process must not grow
  // with them.
  EXPECT_LT(large.max_rss_kb, small.max_rss_kb + 4 * 1024)
      << "1k lines: " << small.max_rss_kb << " KB, 100k lines: "
      << large.max_rss_kb << " KB";
}

TEST(Cli, KbAndIndexCommands) {
  CliResult r = run_cli({"kb", "stats", "--json", "--input",
                         test_data("three_concept_kb.jsonl")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto stats = nlohmann::json::parse(r.out);
  EXPECT_EQ(stats["n_concepts"], 3);
  EXPECT_EQ(stats["n_aliases"], 10);
  EXPECT_EQ(stats["n_shared_aliases"], 1);
  r = run_cli({"kb", "validate", "--input", test_data("toy_kb.jsonl")});
  EXPECT_EQ(r.exit_code, 0) << r.err;
  const std::string dir = testing_support::temp_dir();
  {
    std::ofstream bad(dir + "/dup.jsonl");
    bad << R"({"concept_id": "C1", "canonical_name": "a", "aliases": []})"
        << "\n"
        << R"({"concept_id": "C1", "canonical_name": "b", "aliases": []})"
        << "\n";
  }
  r = run_cli({"kb", "validate", "--input", dir + "/dup.jsonl"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(contains(r.err, "line 2")) << r.err;
  r = run_cli({"index", "build", "--kb", test_data("toy_kb.jsonl"),
               "--output", dir + "/x.blix", "--backend", "faiss"});
  EXPECT_EQ(r.exit_code, 1) << r.err;
  r = run_cli({"index", "build", "--kb", test_data("toy_kb.jsonl"),
               "--output", dir + "/x.blix", "--min-df", "50"});
  EXPECT_EQ(r.exit_code, 1) << r.err;
  r = run_cli({"index", "build", "--kb", test_data("toy_kb.jsonl"),
               "--output", dir + "/l.blix", "--min-df", "1", "--backend",
               "lsh"});
  EXPECT_EQ(r.exit_code, 0) << r.err;
}

TEST(Cli, EvalCommands) {
  const std::string dir = testing_support::temp_dir();
  {
    std::ofstream gold(dir + "/gold.jsonl");
    gold << R"({"mention": "lung carcinoma", "concept_id": "C0242379"})"
         << "\n"
         << R"({"mention": "tumour necrosis", "concept_id": "C0041368"})"
         << "\n";
  }
  CliResult r = run_cli({"eval", "recall", "--index", toy_index(), "--gold",
                         dir + "/gold.jsonl", "--k-list", "1,5"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "k,recall,mean_candidates,max_candidates");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);

  r = run_cli({"eval", "citations", "--n", "200", "--seed", "13", "--base",
               test_data("citation_base_sentences.txt")});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto cite = nlohmann::json::parse(r.out);
  EXPECT_EQ(cite["n"], 200);
  EXPECT_GE(cite["rate"].get<double>(), 0.95);
  EXPECT_LT(cite["adversarial_rate_without_citation_rules"].get<double>(),
            cite["adversarial_rate"].get<double>());

  // Segmentation accuracy of the segmenter's own output is perfect.
  CliResult seg = run_cli({"segment", "--plain"},
                          "It rose. It fell.\nOne sentence only.\n");
  ASSERT_EQ(seg.exit_code, 0);
  {
    std::ofstream f(dir + "/seg.jsonl");
    f << seg.out;
  }
  r = run_cli({"eval", "segmentation", "--pred", dir + "/seg.jsonl", "--gold",
               dir + "/seg.jsonl"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto acc = nlohmann::json::parse(r.out);
  EXPECT_EQ(acc["sentence_acc"], 1.0);
  EXPECT_EQ(acc["abstract_acc"], 1.0);
  EXPECT_EQ(acc["n_gold_sentences"], 3);
}

TEST(Cli, BenchReportsJson) {
  const std::string dir = testing_support::temp_dir();
  {
    std::ofstream f(dir + "/abs.txt");
    f << "Mice were treated. Results improved.\nIL-2 (interleukin-2) rose.\n";
  }
  CliResult r = run_cli({"bench", "--input", dir + "/abs.txt", "--stages",
                         "link", "--index", toy_index(), "--reps", "2",
                         "--warmup", "0", "--json"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto report = nlohmann::json::parse(r.out);
  EXPECT_EQ(report["n_docs"], 2);
  EXPECT_EQ(report["stages"],
            (nlohmann::json{"tokenize", "segment", "abbrev", "link"}));
  EXPECT_EQ(report["rep_wall_ms"].size(), 2u);
  r = run_cli({"bench", "--input", dir + "/abs.txt", "--stages", "link"});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(contains(r.err, "--index")) << r.err;
}

}  // namespace
}  // namespace bioling
