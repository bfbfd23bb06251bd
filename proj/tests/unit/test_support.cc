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

#include "test_support.h"

#include <fcntl.h>
#include <spawn.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bioling/ngram.h"
#include "bioling/synthetic.h"
#include "bioling/text_util.h"
#include "bioling/unicode.h"

extern char **environ;

namespace testing_support {
namespace {

namespace fs = std::filesystem;

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempRoot {
  fs::path path;
  TempRoot() {
    std::string pattern =
        (fs::temp_directory_path() / "bioling-test-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      throw std::runtime_error("mkdtemp failed");
    }
    path = pattern;
  }
  ~TempRoot() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

TempRoot &temp_root() {
  static TempRoot root;
  return root;
}

const std::vector<std::string> kLatin = {
    "protein", "IL-2", "NF-kappa", "cells", "p53", "mRNA", "Fig.", "e.g.",
    "et", "al.", "vs.", "0.05", "3.5", "mg/kg", "TNF-alpha", "Smith",
    "naïve", "café", "Größe", "10-20", "CD4+", "x", "A"};
const std::vector<std::string> kOther = {
    "α", "β-catenin", "γδ", "κB", "белок", "клетки", "蛋白质", "細胞",
    "μM", "°C", "Δ", "→", "±", "≤", "≥", "…", "–", "—", "😀", "ﬁ"};
const std::vector<std::string> kPunct = {
    ".", ",", ";", ":", "!", "?", "(", ")", "[", "]", "{", "}", "\"", "'",
    "“", "”", "‘", "’", "«", "»", "/", "=", "<", ">", "%", "...", "-", "+",
    "*", "&", "#", "@", "\\", "|", "~", "^", "`", "$"};
const std::vector<std::string> kCitations = {
    "[1]", "[3,4]", "[5-7]", "[12, 15]", "(Smith et al., 2002)",
    "(Jones and Lee 1999a)", "(Chen, 2010; Wu, 2011)", "¹", "²³"};
const std::vector<std::string> kSpaces = {
    " ", " ", " ", "  ", "\t", "\n", "\r\n", "\u00a0", "\u2009", "\u3000",
    ""};

const std::string &pick(bioling::Rng &rng,
                        const std::vector<std::string> &items) {
  return items[rng.below(items.size())];
}

}  // namespace

std::string test_data(const std::string &name) {
  return std::string(BIOLING_TEST_DATA_DIR) + "/" + name;
}

std::string repo_data(const std::string &name) {
  return std::string(BIOLING_DATA_DIR) + "/" + name;
}

std::vector<nlohmann::json> read_jsonl(const std::string &path) {
  std::vector<nlohmann::json> out;
  const std::string text = bioling::read_file(path);
  for (std::string_view line : bioling::split_lines(text)) {
    if (bioling::trim_ascii(line).empty()) continue;
    out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

std::vector<std::string> read_lines(const std::string &path) {
  std::vector<std::string> out;
  const std::string text = bioling::read_file(path);
  for (std::string_view line : bioling::split_lines(text)) {
    if (!bioling::trim_ascii(line).empty()) out.emplace_back(line);
  }
  return out;
}

std::string temp_dir() {
  static int counter = 0;
  fs::path dir = temp_root().path / std::to_string(counter++);
  fs::create_directories(dir);
  return dir.string();
}

std::string fuzz_text(bioling::Rng &rng, std::size_t max_pieces) {
  std::string out;
  if (rng.chance(0.2)) out += pick(rng, kSpaces);
  const std::size_t n = rng.below(max_pieces + 1);
  for (std::size_t i = 0; i < n; ++i) {
    switch (rng.below(6)) {
      case 0:
      case 1:
        out += pick(rng, kLatin);
        break;
      case 2:
        out += pick(rng, kOther);
        break;
      case 3:
        out += pick(rng, kPunct);
        break;
      case 4:
        out += pick(rng, kCitations);
        break;
      default:
        // A raw code point from a few blocks, skipping surrogates.
        {
          static const char32_t kBases[] = {0x21, 0xA1, 0x370, 0x400,
                                            0x2000, 0x4E00};
          char32_t ch = kBases[rng.below(6)] + rng.below(0x5E);
          bioling::utf8_append(ch, &out);
        }
        break;
    }
    out += pick(rng, kSpaces);
  }
  return out;
}

std::string fuzz_query(bioling::Rng &rng,
                       const std::vector<std::string> &aliases) {
  std::string base = aliases[rng.below(aliases.size())];
  switch (rng.below(4)) {
    case 0:
      return base;
    case 1:
      if (base.size() > 3) {
        const std::size_t at = 1 + rng.below(base.size() - 2);
        if (static_cast<unsigned char>(base[at]) < 0x80) {
          base[at] = static_cast<char>('a' + rng.below(26));
        }
      }
      return base;
    case 2:
      return base.substr(0, 1 + rng.below(base.size()));
    default: {
      std::string word;
      const std::size_t len = 1 + rng.below(10);
      for (std::size_t i = 0; i < len; ++i) {
        word += static_cast<char>('a' + rng.below(26));
      }
      return word;
    }
  }
}

CliResult run_cli(const std::vector<std::string> &args,
                  const std::string &input) {
  const std::string dir = temp_dir();
  const std::string in_path = dir + "/stdin";
  const std::string out_path = dir + "/stdout";
  const std::string err_path = dir + "/stderr";
  {
    std::ofstream in(in_path, std::ios::binary);
    in << input;
  }
  posix_spawn_file_actions_t actions;
  posix_spawn_file_actions_init(&actions);
  posix_spawn_file_actions_addopen(&actions, 0, in_path.c_str(), O_RDONLY, 0);
  posix_spawn_file_actions_addopen(&actions, 1, out_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  posix_spawn_file_actions_addopen(&actions, 2, err_path.c_str(),
                                   O_WRONLY | O_CREAT | O_TRUNC, 0644);
  std::vector<std::string> argv_store{BIOLING_CLI_PATH};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (std::string &a : argv_store) argv.push_back(a.data());
  argv.push_back(nullptr);
  pid_t pid = 0;
  const int rc = posix_spawn(&pid, BIOLING_CLI_PATH, &actions, nullptr,
                             argv.data(), environ);
  posix_spawn_file_actions_destroy(&actions);
  if (rc != 0) throw std::runtime_error("cannot start " BIOLING_CLI_PATH);
  int status = 0;
  struct rusage usage {};
  wait4(pid, &status, 0, &usage);
  CliResult result;
  result.max_rss_kb = usage.ru_maxrss;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

const DeskSet &desk_set() {
  static const DeskSet set = [] {
    DeskSet s;
    s.kb = bioling::make_synthetic_kb({});
    s.aliases = bioling::alias_corpus(s.kb);
    bioling::NgramVectorizer vec = bioling::NgramVectorizer::fit(s.aliases, 10);
    s.exact = bioling::build_index(s.kb, vec, bioling::Backend::kExact);
    s.lsh = bioling::build_index(s.kb, vec, bioling::Backend::kLsh);
    s.gold = bioling::make_synthetic_gold(s.kb, 1000, 7);
    return s;
  }();
  return set;
}

}  // namespace testing_support
