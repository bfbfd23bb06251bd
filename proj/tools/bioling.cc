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


// bioling: command-line entry point.
//
// Document subcommands read and write JSON Lines, one document per line, so
// they compose through pipes:
//
//   bioling tokenize --plain < abstracts.txt | bioling segment |
//       bioling abbrev | bioling link --index index.blix
//
// Exit status: 0 on success, 1 on usage errors, 2 on data errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bioling/alias_index.h"
#include "bioling/bench.h"
#include "bioling/docio.h"
#include "bioling/error.h"
#include "bioling/evals.h"
#include "bioling/kb.h"
#include "bioling/ngram.h"
#include "bioling/parallel.h"
#include "bioling/pipeline.h"
#include "bioling/segmenter.h"
#include "bioling/synthetic.h"
#include "bioling/text_util.h"
#include "bioling/tokenizer.h"
#include "json.hpp"
#include "spdlog/sinks/stdout_sinks.h"
#include "spdlog/spdlog.h"
#include "spdlog/stopwatch.h"

namespace {

using namespace bioling;

class InputFile {
 public:
  explicit InputFile(const std::string &path) : name_(path) {
    if (path == "-") {
      in_ = &std::cin;
      name_ = "<stdin>";
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw DataError("cannot open input '" + path + "'");
    in_ = &file_;
  }
  std::istream &stream() { return *in_; }
  const std::string &name() const { return name_; }

 private:
  std::string name_;
  std::ifstream file_;
  std::istream *in_ = nullptr;
};

class OutputFile {
 public:
  explicit OutputFile(const std::string &path) : name_(path) {
    if (path == "-") {
      out_ = &std::cout;
      name_ = "<stdout>";
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw DataError("cannot open output '" + path + "'");
    out_ = &file_;
  }
  ~OutputFile() { out_->flush(); }
  std::ostream &stream() { return *out_; }
  void finish() {
    out_->flush();
    if (!*out_) throw Error("error writing " + name_);
  }

 private:
  std::string name_;
  std::ofstream file_;
  std::ostream *out_ = nullptr;
};

std::string from_env(const std::string &flag, const char *variable) {
  if (!flag.empty()) return flag;
  const char *value = std::getenv(variable);
  return value ? value : "";
}

TokenizerRules load_rules(const std::string &flag) {
  const std::string path = from_env(flag, "BIOLING_RULES");
  if (path.empty()) return default_biomedical_rules();
  spdlog::debug("tokenizer rules from {}", path);
  try {
    return TokenizerRules::load(path);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

SegmenterConfig load_segmenter_config(const std::string &flag) {
  const std::string path = from_env(flag, "BIOLING_SEG_CONFIG");
  if (path.empty()) return default_segmenter_config();
  spdlog::debug("segmenter config from {}", path);
  try {
    return SegmenterConfig::load(path);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

KnowledgeBase load_kb_file(const std::string &path) {
  try {
    return load_kb(path);
  } catch (const DataError &e) {
    const std::string what = e.what();
    if (what.rfind("cannot open", 0) == 0) throw;
    throw DataError(path + ": " + what);
  }
}

std::vector<std::string> read_lines(const std::string &path) {
  InputFile in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in.stream(), line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim_ascii(line).empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<Document> read_documents(const std::string &path) {
  InputFile in(path);
  std::vector<Document> docs;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in.stream(), line);) {
    ++line_no;
    if (trim_ascii(line).empty()) continue;
    try {
      DocRecord record = parse_doc_record(line);
      if (!record.has_sentences) throw DataError("document has no sentences");
      docs.push_back(std::move(record.doc));
    } catch (const DataError &e) {
      throw DataError(in.name() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
  }
  return docs;
}

struct DocIo {
  std::string input = "-";
  std::string output = "-";
  bool plain = false;
};

// Reads documents in batches, maps them over the worker pool and writes the
// results in input order. Memory is bounded by one batch.
template <typename Fn>
void stream_documents(const DocIo &io, std::size_t workers, Fn fn) {
  InputFile in(io.input);
  OutputFile out(io.output);
  const std::size_t batch = 64 * workers;
  struct Result {
    std::string text;
    std::optional<std::string> error;
  };
  std::vector<std::string> lines;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  std::size_t doc_index = 0;
  bool eof = false;
  while (!eof) {
    lines.clear();
    line_numbers.clear();
    std::string line;
    while (lines.size() < batch) {
      if (!std::getline(in.stream(), line)) {
        eof = true;
        break;
      }
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim_ascii(line).empty()) continue;
      lines.push_back(std::move(line));
      line_numbers.push_back(line_no);
    }
    const std::vector<Result> results = parallel_map<Result>(
        lines.size(), workers, [&](std::size_t i) {
          Result r;
          try {
            DocRecord record =
                io.plain ? text_record(lines[i]) : parse_doc_record(lines[i]);
            r.text = fn(record, doc_index + i);
          } catch (const Error &e) {
            r.error = e.what();
          }
          return r;
        });
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].error) {
        out.finish();
        throw DataError(in.name() + ":" + std::to_string(line_numbers[i]) +
                        ": " + *results[i].error);
      }
      out.stream() << results[i].text;
    }
    doc_index += lines.size();
  }
  out.finish();
}

void add_doc_io(CLI::App *sub, DocIo &io) {
  sub->add_option("--input,-i", io.input, "Input file, '-' for stdin")
      ->capture_default_str();
  sub->add_option("--output,-o", io.output, "Output file, '-' for stdout")
      ->capture_default_str();
  sub->add_flag("--plain", io.plain,
                "Input is raw text, one document per line");
}

std::string record_line(const DocRecord &record) {
  return format_doc_record(record) + "\n";
}

void print_kb_stats(const KbStats &s, bool json) {
  if (json) {
    nlohmann::ordered_json obj;
    obj["n_concepts"] = s.n_concepts;
    obj["n_aliases"] = s.n_aliases;
    obj["n_shared_aliases"] = s.n_shared_aliases;
    obj["bytes_on_disk"] = s.bytes_on_disk;
    std::cout << obj.dump() << "\n";
    return;
  }
  std::cout << "concepts        " << s.n_concepts << "\n"
            << "aliases         " << s.n_aliases << "\n"
            << "shared aliases  " << s.n_shared_aliases << "\n"
            << "bytes on disk   " << s.bytes_on_disk << "\n";
}

AliasIndex load_index(const std::string &path) {
  spdlog::stopwatch sw;
  AliasIndex index = AliasIndex::load(path);
  spdlog::info("loaded {} ({} aliases, {} grams, {} backend) in {:.1f} ms",
               path, index.size(), index.vectorizer().size(),
               backend_name(index.backend()), sw.elapsed().count() * 1e3);
  return index;
}

}  // namespace

int main(int argc, char **argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Biomedical text processing: tokenization, sentence "
               "segmentation, abbreviations and entity-linking candidates",
               "bioling"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  std::string log_level = "warn";
  std::size_t workers = 1;
  app.add_option("--log-level", log_level, "Log level for stderr")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}))
      ->capture_default_str();
  app.add_option("--workers", workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string rules_path;
  std::string seg_path;
  auto add_rules = [&](CLI::App *sub) {
    sub->add_option("--rules", rules_path,
                    "Tokenizer rules file (default: $BIOLING_RULES or built-in)");
  };
  auto add_seg = [&](CLI::App *sub) {
    sub->add_option("--seg-config", seg_path,
                    "Segmenter config (default: $BIOLING_SEG_CONFIG or "
                    "built-in)");
  };

  DocIo io;

  CLI::App *tok = app.add_subcommand("tokenize", "Tokenize documents");
  add_doc_io(tok, io);
  add_rules(tok);

  CLI::App *seg = app.add_subcommand("segment", "Split documents into sentences");
  add_doc_io(seg, io);
  add_rules(seg);
  add_seg(seg);

  CLI::App *abbrev = app.add_subcommand("abbrev", "Detect abbreviation definitions");
  add_doc_io(abbrev, io);
  add_rules(abbrev);
  add_seg(abbrev);

  CLI::App *kb = app.add_subcommand("kb", "Knowledge base utilities");
  kb->require_subcommand(1);
  std::string kb_input;
  bool kb_json = false;
  CLI::App *kb_validate = kb->add_subcommand("validate", "Check a concepts file");
  kb_validate->add_option("--input,-i", kb_input, "Concepts JSONL")->required();
  CLI::App *kb_stats_cmd = kb->add_subcommand("stats", "Print KB statistics");
  kb_stats_cmd->add_option("--input,-i", kb_input, "Concepts JSONL")->required();
  kb_stats_cmd->add_flag("--json", kb_json, "Machine-readable output");

  CLI::App *index = app.add_subcommand("index", "Alias index utilities");
  index->require_subcommand(1);
  CLI::App *index_build = index->add_subcommand("build", "Build an alias index");
  std::string index_kb;
  std::string index_out;
  std::uint32_t min_df = 10;
  std::string backend = "exact";
  LshParams lsh;
  index_build->add_option("--kb", index_kb, "Concepts JSONL")->required();
  index_build->add_option("--output,-o", index_out, "Index file")->required();
  index_build->add_option("--min-df", min_df, "Minimum gram document frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  index_build->add_option("--backend", backend, "exact or lsh")
      ->check(CLI::IsMember({"exact", "lsh"}))
      ->capture_default_str();
  index_build->add_option("--lsh-tables", lsh.tables, "LSH hash tables")
      ->capture_default_str();
  index_build->add_option("--lsh-bits", lsh.bits, "LSH bits per signature")
      ->capture_default_str();
  index_build->add_option("--lsh-probe-radius", lsh.probe_radius,
                          "Hamming radius probed per table (0-2)")
      ->capture_default_str();
  index_build->add_option("--lsh-seed", lsh.seed, "LSH hyperplane seed");

  CLI::App *link = app.add_subcommand("link", "Generate linking candidates");
  std::string link_index;
  std::size_t k = 30;
  bool no_abbrev = false;
  add_doc_io(link, io);
  add_rules(link);
  add_seg(link);
  link->add_option("--index", link_index, "Alias index file")->required();
  link->add_option("--k", k, "Nearest aliases per mention")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  link->add_flag("--no-abbrev", no_abbrev, "Do not expand abbreviations");

  CLI::App *eval = app.add_subcommand("eval", "Evaluations");
  eval->require_subcommand(1);
  CLI::App *eval_recall = eval->add_subcommand("recall", "Candidate recall at K");
  std::string eval_index;
  std::string gold_path;
  std::string k_list = "1,5,10,25,50,100";
  std::string eval_out = "-";
  eval_recall->add_option("--index", eval_index, "Alias index file")->required();
  eval_recall->add_option("--gold", gold_path, "Gold mentions JSONL")->required();
  eval_recall->add_option("--k-list", k_list, "Comma-separated k values")
      ->capture_default_str();
  eval_recall->add_option("--output,-o", eval_out, "CSV output")
      ->capture_default_str();

  CLI::App *eval_seg =
      eval->add_subcommand("segmentation", "Sentence and abstract accuracy");
  std::string pred_path;
  eval_seg->add_option("--pred", pred_path, "Predicted documents JSONL")
      ->required();
  eval_seg->add_option("--gold", gold_path, "Gold documents JSONL")->required();

  CLI::App *eval_cite =
      eval->add_subcommand("citations", "Synthetic citation sentences");
  std::size_t cite_n = 500;
  std::uint64_t cite_seed = 13;
  std::string base_path;
  std::string corpus_out;
  eval_cite->add_option("--n", cite_n, "Number of sentences")
      ->capture_default_str();
  eval_cite->add_option("--seed", cite_seed, "Generator seed")
      ->capture_default_str();
  eval_cite->add_option("--base", base_path,
                        "Citation-free sentences, one per line")
      ->required();
  eval_cite->add_option("--corpus-output", corpus_out,
                        "Also write the generated sentences here");
  add_rules(eval_cite);
  add_seg(eval_cite);

  CLI::App *bench = app.add_subcommand("bench", "Throughput benchmark");
  std::string bench_input;
  std::string stages = "tokenize,segment";
  std::string bench_index;
  std::size_t reps = 3;
  std::size_t warmup = 1;
  bool bench_json = false;
  bench->add_option("--input,-i", bench_input, "Abstracts, one per line")
      ->required();
  bench->add_option("--stages", stages,
                    "Comma-separated subset of tokenize,segment,abbrev,link")
      ->capture_default_str();
  bench->add_option("--index", bench_index, "Alias index (link stage)");
  bench->add_option("--reps", reps, "Timed repetitions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--warmup", warmup, "Untimed repetitions")
      ->capture_default_str();
  bench->add_option("--k", k, "Nearest aliases per mention")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--json", bench_json, "Machine-readable report");
  add_rules(bench);
  add_seg(bench);

  CLI::App *synth = app.add_subcommand("synth", "Seeded synthetic data");
  synth->require_subcommand(1);
  std::string synth_out = "-";
  std::string synth_kb;
  std::uint64_t synth_seed = 1;
  std::size_t synth_n = 1000;
  SyntheticKbOptions kb_options;
  std::size_t synth_bytes = 1500;
  CLI::App *synth_kb_cmd = synth->add_subcommand("kb", "Concepts JSONL");
  synth_kb_cmd->add_option("--concepts", kb_options.n_concepts, "Concepts")
      ->capture_default_str();
  synth_kb_cmd->add_option("--aliases", kb_options.n_aliases,
                           "Distinct aliases")
      ->capture_default_str();
  synth_kb_cmd->add_option("--seed", kb_options.seed, "Seed")
      ->capture_default_str();
  synth_kb_cmd->add_option("--output,-o", synth_out, "Output")
      ->capture_default_str();
  CLI::App *synth_gold = synth->add_subcommand("gold", "Gold mentions JSONL");
  CLI::App *synth_abs = synth->add_subcommand("abstracts", "Abstracts, one per line");
  for (CLI::App *sub : {synth_gold, synth_abs}) {
    sub->add_option("--kb", synth_kb, "Concepts JSONL")->required();
    sub->add_option("--n", synth_n, "Count")->capture_default_str();
    sub->add_option("--seed", synth_seed, "Seed")->capture_default_str();
    sub->add_option("--output,-o", synth_out, "Output")->capture_default_str();
  }
  synth_abs->add_option("--bytes", synth_bytes, "Minimum bytes per abstract")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 1;
  }

  auto logger = spdlog::stderr_logger_mt("bioling");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("bioling: %l: %v");
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*tok) {
      const TokenizerRules rules = load_rules(rules_path);
      stream_documents(io, workers, [&](DocRecord &r, std::size_t) {
        r.has_tokens = false;
        ensure_tokens(r, rules);
        return record_line(r);
      });
    } else if (*seg) {
      const TokenizerRules rules = load_rules(rules_path);
      const SegmenterConfig cfg = load_segmenter_config(seg_path);
      stream_documents(io, workers, [&](DocRecord &r, std::size_t) {
        ensure_tokens(r, rules);
        r.has_sentences = false;
        ensure_sentences(r, rules, cfg);
        return record_line(r);
      });
    } else if (*abbrev) {
      const TokenizerRules rules = load_rules(rules_path);
      const SegmenterConfig cfg = load_segmenter_config(seg_path);
      stream_documents(io, workers, [&](DocRecord &r, std::size_t) {
        r.abbreviations.reset();
        ensure_abbreviations(r, rules, cfg);
        return record_line(r);
      });
    } else if (*kb) {
      const KnowledgeBase base = load_kb_file(kb_input);
      const KbStats stats = kb_stats(base);
      if (*kb_validate) {
        std::cout << "ok: " << stats.n_concepts << " concepts, "
                  << stats.n_aliases << " aliases\n";
      } else {
        print_kb_stats(stats, kb_json);
      }
    } else if (*index) {
      spdlog::stopwatch sw;
      const KnowledgeBase base = load_kb_file(index_kb);
      NgramVectorizer vectorizer =
          NgramVectorizer::fit(alias_corpus(base), min_df);
      const AliasIndex built =
          build_index(base, std::move(vectorizer), parse_backend(backend), lsh);
      built.save(index_out);
      std::cout << "wrote " << index_out << ": " << built.size()
                << " aliases, " << built.vectorizer().size() << " grams, "
                << backend_name(built.backend()) << " backend\n";
      spdlog::info("index built in {:.1f} ms", sw.elapsed().count() * 1e3);
    } else if (*link) {
      const TokenizerRules rules = load_rules(rules_path);
      const SegmenterConfig cfg = load_segmenter_config(seg_path);
      const AliasIndex alias_index = load_index(link_index);
      const LinkOptions options{KParam(k), !no_abbrev};
      stream_documents(io, workers, [&](DocRecord &r, std::size_t doc) {
        std::string out;
        for (const CandidateSet &set :
             link_record(r, alias_index, options, rules, cfg)) {
          out += format_candidate_set(set, doc);
          out += '\n';
        }
        return out;
      });
    } else if (*eval) {
      if (*eval_recall) {
        const std::vector<KParam> ks = parse_k_list(k_list);
        const AliasIndex alias_index = load_index(eval_index);
        const std::vector<GoldMention> gold = load_gold_mentions(gold_path);
        const RecallCurve curve =
            recall_at_k(alias_index, alias_index.alias_table(), gold, ks);
        OutputFile out(eval_out);
        out.stream() << recall_curve_csv(curve);
        out.finish();
      } else if (*eval_seg) {
        const std::vector<Document> pred = read_documents(pred_path);
        const std::vector<Document> gold = read_documents(gold_path);
        const SegmentationAccuracy acc = segmentation_accuracy(pred, gold);
        nlohmann::ordered_json obj;
        obj["sentence_acc"] = acc.sentence_acc;
        obj["abstract_acc"] = acc.abstract_acc;
        obj["n_docs"] = acc.n_docs;
        obj["n_gold_sentences"] = acc.n_gold_sentences;
        std::cout << obj.dump() << "\n";
      } else {
        const TokenizerRules rules = load_rules(rules_path);
        const SegmenterConfig cfg = load_segmenter_config(seg_path);
        SegmenterConfig plain_cfg = cfg;
        plain_cfg.cite_bracket = false;
        plain_cfg.cite_author_year = false;
        const std::vector<std::string> base = read_lines(base_path);
        const std::vector<CitationSample> samples =
            make_citation_samples(base, cite_seed, cite_n);
        std::vector<std::string> all;
        std::vector<std::string> adversarial;
        for (const CitationSample &s : samples) {
          all.push_back(s.text);
          if (is_adversarial(s)) adversarial.push_back(s.text);
        }
        nlohmann::ordered_json obj;
        obj["n"] = all.size();
        obj["seed"] = cite_seed;
        obj["rate"] = citation_split_rate(all, cfg, rules);
        obj["rate_without_citation_rules"] =
            citation_split_rate(all, plain_cfg, rules);
        obj["n_adversarial"] = adversarial.size();
        if (!adversarial.empty()) {
          obj["adversarial_rate"] = citation_split_rate(adversarial, cfg, rules);
          obj["adversarial_rate_without_citation_rules"] =
              citation_split_rate(adversarial, plain_cfg, rules);
        }
        std::cout << obj.dump() << "\n";
        if (!corpus_out.empty()) {
          OutputFile out(corpus_out);
          for (const std::string &s : all) out.stream() << s << "\n";
          out.finish();
        }
      }
    } else if (*bench) {
      BenchOptions options;
      options.stages = parse_stages(stages);
      const bool linking =
          std::find(options.stages.begin(), options.stages.end(),
                    Stage::kLink) != options.stages.end();
      if (linking && bench_index.empty()) {
        throw InvalidArgument("the link stage needs --index");
      }
      const std::vector<std::string> corpus = read_lines(bench_input);
      spdlog::stopwatch sw;
      const TokenizerRules rules = load_rules(rules_path);
      const SegmenterConfig cfg = load_segmenter_config(seg_path);
      std::optional<AliasIndex> alias_index;
      if (linking) alias_index = load_index(bench_index);
      const double load_ms = sw.elapsed().count() * 1e3;
      options.reps = reps;
      options.warmup = warmup;
      options.workers = workers;
      options.k = k;
      options.rules = &rules;
      options.segmenter = &cfg;
      options.index = alias_index ? &*alias_index : nullptr;
      BenchReport report = run_bench(corpus, options);
      report.load_ms = load_ms;
      std::cout << (bench_json ? format_report_json(report) + "\n"
                               : format_report_table(report));
    } else if (*synth) {
      OutputFile out(synth_out);
      if (*synth_kb_cmd) {
        write_kb(make_synthetic_kb(kb_options), out.stream());
      } else {
        const KnowledgeBase base = load_kb_file(synth_kb);
        if (*synth_gold) {
          for (const GoldMention &g :
               make_synthetic_gold(base, synth_n, synth_seed)) {
            nlohmann::ordered_json obj;
            obj["mention"] = g.mention;
            obj["concept_id"] = g.concept_id;
            out.stream() << obj.dump() << "\n";
          }
        } else {
          for (const std::string &a : make_synthetic_abstracts(
                   base, synth_n, synth_seed, synth_bytes)) {
            out.stream() << a << "\n";
          }
        }
      }
      out.finish();
    }
  } catch (const InvalidArgument &e) {
    spdlog::error("{}", e.what());
    return 1;
  } catch (const std::exception &e) {
    spdlog::error("{}", e.what());
    return 2;
  }
  std::cout.flush();
  return 0;
}
