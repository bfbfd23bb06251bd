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


#include "bioling/evals.h"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <set>
#include <tuple>
#include <utility>

#include "bioling/error.h"
#include "bioling/rng.h"
#include "bioling/text_util.h"
#include "bioling/unicode.h"
#include "json.hpp"

namespace bioling {

std::vector<GoldMention> parse_gold_mentions(std::string_view jsonl) {
  std::vector<GoldMention> out;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(jsonl)) {
    ++line_no;
    if (trim_ascii(line).empty()) continue;
    try {
      const nlohmann::json obj = nlohmann::json::parse(line);
      if (!obj.is_object()) throw DataError("expected a JSON object");
      auto field = [&](const char *name) {
        auto it = obj.find(name);
        if (it == obj.end() || !it->is_string() ||
            it->get_ref<const std::string &>().empty()) {
          throw DataError(std::string("missing or empty '") + name + "'");
        }
        return it->get<std::string>();
      };
      out.push_back(GoldMention{field("mention"), field("concept_id")});
    } catch (const nlohmann::json::exception &e) {
      throw DataError(std::string("malformed JSON: ") + e.what(), line_no);
    } catch (const DataError &e) {
      throw DataError(e.what(), line_no);
    }
  }
  return out;
}

std::vector<GoldMention> load_gold_mentions(const std::string &path) {
  try {
    return parse_gold_mentions(read_file(path));
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

RecallCurve recall_at_k(const AliasIndex &index, const AliasTable &alias_table,
                        std::span<const GoldMention> gold,
                        std::span<const KParam> ks,
                        const Expansions *expansion) {
  if (gold.empty()) throw InvalidArgument("empty gold set");
  if (ks.empty()) throw InvalidArgument("empty k list");
  for (std::size_t i = 1; i < ks.size(); ++i) {
    if (ks[i].value() <= ks[i - 1].value()) {
      throw InvalidArgument("k list must be strictly increasing");
    }
  }
  const KParam k_max = ks.back();
  std::vector<std::size_t> hits(ks.size(), 0);
  std::vector<std::size_t> total(ks.size(), 0);
  std::vector<std::size_t> most(ks.size(), 0);
  for (const GoldMention &g : gold) {
    std::string_view query = g.mention;
    if (expansion) {
      auto it = expansion->find(g.mention);
      if (it != expansion->end()) query = it->second;
    }
    // An out-of-vocabulary query yields no candidates, as in
    // generate_candidates.
    const SparseVector encoded = index.vectorizer().encode(query);
    const std::vector<Neighbor> neighbors =
        encoded.empty() ? std::vector<Neighbor>{}
                        : index.nearest(encoded, k_max);
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const std::size_t prefix = std::min(ks[j].value(), neighbors.size());
      const std::vector<Candidate> candidates = candidates_from_neighbors(
          index, alias_table,
          std::span<const Neighbor>(neighbors.data(), prefix));
      total[j] += candidates.size();
      most[j] = std::max(most[j], candidates.size());
      for (const Candidate &c : candidates) {
        if (c.concept_id == g.concept_id) {
          ++hits[j];
          break;
        }
      }
    }
  }
  RecallCurve curve;
  const double n = static_cast<double>(gold.size());
  for (std::size_t j = 0; j < ks.size(); ++j) {
    curve.points.push_back(RecallPoint{ks[j].value(),
                                       static_cast<double>(hits[j]) / n,
                                       static_cast<double>(total[j]) / n,
                                       most[j]});
  }
  return curve;
}

std::string recall_curve_csv(const RecallCurve &curve) {
  std::string out = "k,recall,mean_candidates,max_candidates\n";
  char row[128];
  for (const RecallPoint &p : curve.points) {
    std::snprintf(row, sizeof(row), "%zu,%.6f,%.4f,%zu\n", p.k, p.recall,
                  p.mean_candidates, p.max_candidates);
    out += row;
  }
  return out;
}

std::vector<KParam> parse_k_list(std::string_view list) {
  std::vector<KParam> out;
  for (std::string_view part : split(list, ',')) {
    part = trim_ascii(part);
    std::size_t k = 0;
    if (part.empty() || part.size() > 9) {
      throw InvalidArgument("bad k value '" + std::string(part) + "'");
    }
    for (char ch : part) {
      if (ch < '0' || ch > '9') {
        throw InvalidArgument("bad k value '" + std::string(part) + "'");
      }
      k = k * 10 + static_cast<std::size_t>(ch - '0');
    }
    out.emplace_back(k);
  }
  return out;
}

SegmentationAccuracy segmentation_accuracy(std::span<const Document> pred,
                                           std::span<const Document> gold) {
  if (gold.empty()) throw InvalidArgument("empty evaluation set");
  if (pred.size() != gold.size()) {
    throw InvalidArgument("prediction has " + std::to_string(pred.size()) +
                          " documents but gold has " +
                          std::to_string(gold.size()));
  }
  using Span = std::pair<std::size_t, std::size_t>;
  auto spans = [](const Document &doc) {
    std::vector<Span> out;
    for (const SentenceSpan &s : doc.sentences()) {
      out.emplace_back(doc.sentence_start(s), doc.sentence_end(s));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  SegmentationAccuracy acc;
  std::size_t sentences_found = 0;
  std::size_t docs_exact = 0;
  for (std::size_t d = 0; d < gold.size(); ++d) {
    if (pred[d].text() != gold[d].text()) {
      throw DataError("document " + std::to_string(d + 1) +
                      ": text differs between prediction and gold");
    }
    const std::vector<Span> p = spans(pred[d]);
    const std::vector<Span> g = spans(gold[d]);
    acc.n_gold_sentences += g.size();
    for (const Span &s : g) {
      if (std::binary_search(p.begin(), p.end(), s)) ++sentences_found;
    }
    if (p == g) ++docs_exact;
  }
  acc.n_docs = gold.size();
  acc.sentence_acc =
      acc.n_gold_sentences == 0
          ? 1.0
          : static_cast<double>(sentences_found) /
                static_cast<double>(acc.n_gold_sentences);
  acc.abstract_acc =
      static_cast<double>(docs_exact) / static_cast<double>(gold.size());
  return acc;
}

namespace {

constexpr std::string_view kSurnames[] = {
    "Smith",  "Chen",   "Garcia", "Müller", "Tanaka", "Johnson", "Kim",
    "Rossi",  "Nguyen", "Brown",  "Ivanov", "Dubois", "Silva",   "Kowalski",
    "Olsen",  "Patel"};
constexpr int kFirstYear = 1995;
constexpr int kYears = 26;
constexpr int kMaxNumber = 99;
constexpr int kMaxMulti = 20;

constexpr std::uint64_t kMultiCount = kMaxMulti * (kMaxMulti - 1) / 2;
constexpr std::uint64_t kAuthorYearCount =
    std::size(kSurnames) * 2 * static_cast<std::uint64_t>(kYears);

std::uint64_t inventory(CitationFamily family) {
  switch (family) {
    case CitationFamily::kBracketSingle:
    case CitationFamily::kSuperscript:
      return kMaxNumber;
    case CitationFamily::kBracketMulti:
      return kMultiCount;
    case CitationFamily::kAuthorYear:
      return kAuthorYearCount;
  }
  return 0;
}

std::string citation_text(CitationFamily family, std::uint64_t item) {
  switch (family) {
    case CitationFamily::kBracketSingle:
      return "[" + std::to_string(item + 1) + "]";
    case CitationFamily::kSuperscript:
      return std::to_string(item + 1);
    case CitationFamily::kBracketMulti: {
      std::uint64_t a = 1;
      std::uint64_t left = item;
      while (left >= static_cast<std::uint64_t>(kMaxMulti) - a) {
        left -= kMaxMulti - a;
        ++a;
      }
      return "[" + std::to_string(a) + "," + std::to_string(a + 1 + left) +
             "]";
    }
    case CitationFamily::kAuthorYear: {
      const std::uint64_t year = item % kYears;
      const bool et_al = (item / kYears) % 2 == 1;
      const std::string_view name = kSurnames[item / kYears / 2];
      return "(" + std::string(name) + (et_al ? " et al." : "") + ", " +
             std::to_string(kFirstYear + static_cast<int>(year)) + ")";
    }
  }
  return {};
}

struct BaseSentence {
  std::string text;
  std::vector<CitationPosition> positions;
  std::size_t mid_end = 0;  // byte offset where a mid-sentence citation goes
};

std::vector<BaseSentence> prepare_bases(std::span<const std::string> bases) {
  std::vector<BaseSentence> out;
  std::set<std::string> seen;
  for (const std::string &raw : bases) {
    std::string text(trim_ascii(raw));
    if (text.empty() || !seen.insert(text).second) continue;
    BaseSentence b;
    b.text = text;
    const bool period = text.back() == '.';
    const std::string_view body =
        std::string_view(text).substr(0, text.size() - (period ? 1 : 0));
    // End of the middle word; the sentence needs words on both sides.
    std::vector<std::size_t> word_ends;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] != ' ' && (i + 1 == body.size() || body[i + 1] == ' ')) {
        word_ends.push_back(i + 1);
      }
    }
    if (word_ends.size() >= 3) {
      b.mid_end = word_ends[(word_ends.size() - 1) / 2];
      b.positions.push_back(CitationPosition::kMid);
    }
    b.positions.push_back(CitationPosition::kBeforeFinalPeriod);
    if (period) b.positions.push_back(CitationPosition::kAfterFinalPeriod);
    out.push_back(std::move(b));
  }
  return out;
}

std::string render(const BaseSentence &b, CitationFamily family,
                   CitationPosition position, const std::string &cite) {
  const std::string &t = b.text;
  const bool period = t.back() == '.';
  const std::size_t body_end = t.size() - (period ? 1 : 0);
  const bool superscript = family == CitationFamily::kSuperscript;
  const bool author = family == CitationFamily::kAuthorYear;
  switch (position) {
    case CitationPosition::kMid: {
      std::size_t at = b.mid_end;
      // Superscripts sit on the word, before any trailing punctuation.
      if (superscript) {
        while (at > 0 && (t[at - 1] == ',' || t[at - 1] == ';' ||
                          t[at - 1] == ':')) {
          --at;
        }
        return t.substr(0, at) + cite + t.substr(at);
      }
      return t.substr(0, at) + " " + cite + t.substr(at);
    }
    case CitationPosition::kBeforeFinalPeriod:
      return t.substr(0, body_end) + (superscript ? "" : " ") + cite +
             t.substr(body_end);
    case CitationPosition::kAfterFinalPeriod:
      return t + (author ? " " : "") + cite;
  }
  return t;
}

}  // namespace

std::string_view citation_family_name(CitationFamily family) {
  switch (family) {
    case CitationFamily::kBracketSingle:
      return "bracket_single";
    case CitationFamily::kBracketMulti:
      return "bracket_multi";
    case CitationFamily::kAuthorYear:
      return "author_year";
    case CitationFamily::kSuperscript:
      return "superscript";
  }
  return "";
}

std::string_view citation_position_name(CitationPosition position) {
  switch (position) {
    case CitationPosition::kMid:
      return "mid";
    case CitationPosition::kBeforeFinalPeriod:
      return "before_final_period";
    case CitationPosition::kAfterFinalPeriod:
      return "after_final_period";
  }
  return "";
}

std::uint64_t citation_corpus_capacity(
    std::span<const std::string> base_sentences) {
  std::uint64_t per_position = 0;
  for (int f = 0; f < 4; ++f) {
    per_position += inventory(static_cast<CitationFamily>(f));
  }
  std::uint64_t positions = 0;
  for (const BaseSentence &b : prepare_bases(base_sentences)) {
    positions += b.positions.size();
  }
  return positions * per_position;
}

std::vector<CitationSample> make_citation_samples(
    std::span<const std::string> base_sentences, std::uint64_t seed,
    std::size_t n) {
  const std::vector<BaseSentence> bases = prepare_bases(base_sentences);
  const std::uint64_t capacity = citation_corpus_capacity(base_sentences);
  if (n > capacity) {
    throw InvalidArgument("requested " + std::to_string(n) +
                          " sentences but only " + std::to_string(capacity) +
                          " distinct ones can be built");
  }
  Rng rng(seed);
  std::set<std::tuple<int, std::size_t, int, std::uint64_t>> used;
  std::vector<CitationSample> out;
  out.reserve(n);
  while (out.size() < n) {
    const auto family = static_cast<CitationFamily>(rng.below(4));
    const std::size_t base = rng.below(bases.size());
    const BaseSentence &b = bases[base];
    const CitationPosition position =
        b.positions[rng.below(b.positions.size())];
    const std::uint64_t item = rng.below(inventory(family));
    if (!used.emplace(static_cast<int>(family), base,
                      static_cast<int>(position), item)
             .second) {
      continue;
    }
    out.push_back(CitationSample{
        render(b, family, position, citation_text(family, item)), family,
        position, base});
  }
  return out;
}

std::vector<std::string> make_citation_corpus(
    std::span<const std::string> base_sentences, std::uint64_t seed,
    std::size_t n) {
  std::vector<std::string> out;
  for (CitationSample &s : make_citation_samples(base_sentences, seed, n)) {
    out.push_back(std::move(s.text));
  }
  return out;
}

bool is_adversarial(const CitationSample &sample) {
  return sample.position == CitationPosition::kAfterFinalPeriod &&
         sample.family != CitationFamily::kSuperscript;
}

}  // namespace bioling
