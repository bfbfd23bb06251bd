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


#include "bioling/pipeline.h"

#include <unordered_set>
#include <utility>

#include "bioling/abbrev.h"
#include "bioling/unicode.h"

namespace bioling {

namespace {

const std::unordered_set<std::u32string> &stopwords() {
  static const std::unordered_set<std::u32string> words = {
      U"the",     U"and",     U"for",     U"with",    U"from",   U"that",
      U"this",    U"these",   U"those",   U"was",     U"were",   U"are",
      U"has",     U"have",    U"had",     U"been",    U"being",  U"into",
      U"than",    U"then",    U"our",     U"their",   U"its",    U"not",
      U"but",     U"also",    U"both",    U"between", U"after",  U"before",
      U"during",  U"under",   U"over",    U"via",     U"using",  U"used",
      U"use",     U"may",     U"can",     U"could",   U"would",  U"should",
      U"all",     U"each",    U"such",    U"other",   U"more",   U"most",
      U"less",    U"per",     U"among",   U"within",  U"without", U"here",
      U"there",   U"however", U"thus",    U"while",   U"when",   U"where",
      U"which",   U"who",     U"whose",   U"whether", U"what",   U"how",
      U"only",    U"further", U"found",   U"shown",   U"show",   U"shows",
      U"results", U"result",  U"study",   U"studies", U"data",   U"two",
      U"three",   U"one",     U"several", U"many",    U"some",   U"any",
      U"did",     U"does",    U"well",    U"very",    U"about",  U"against",
      U"through", U"because", U"since",   U"until",   U"upon",   U"out",
      U"they",    U"them",    U"his",     U"her",     U"she",    U"him",
      U"you",     U"your",    U"will",    U"shall",   U"must",   U"might",
      U"suggest", U"suggests", U"indicate", U"indicates", U"observed",
      U"increased", U"decreased", U"compared", U"significantly"};
  return words;
}

void clear_sentences(DocRecord &record) {
  record.doc = record.doc.with_sentences({});
  record.has_sentences = false;
}

}  // namespace

void ensure_tokens(DocRecord &record, const TokenizerRules &rules) {
  if (record.has_tokens) return;
  record.doc = tokenize(std::u32string(record.doc.text()), rules);
  record.has_tokens = true;
  clear_sentences(record);
}

void ensure_sentences(DocRecord &record, const TokenizerRules &rules,
                      const SegmenterConfig &cfg) {
  ensure_tokens(record, rules);
  if (record.has_sentences) return;
  record.doc = segment(record.doc, cfg);
  record.has_sentences = true;
}

void ensure_abbreviations(DocRecord &record, const TokenizerRules &rules,
                          const SegmenterConfig &cfg) {
  ensure_sentences(record, rules, cfg);
  if (record.abbreviations) return;
  record.abbreviations = find_abbreviations(record.doc);
}

std::vector<MentionSpan> propose_mentions(const Document &doc) {
  std::vector<MentionSpan> out;
  for (const Token &t : doc.tokens()) {
    if (t.end - t.start < 3) continue;
    const std::u32string_view s = doc.surface(t);
    bool letter = false;
    for (char32_t ch : s) letter = letter || is_letter(ch);
    if (!letter) continue;
    if (stopwords().count(to_lower(s))) continue;
    out.push_back(doc.mention(t.start, t.end));
  }
  return out;
}

std::vector<CandidateSet> link_record(DocRecord &record,
                                      const AliasIndex &index,
                                      const LinkOptions &options,
                                      const TokenizerRules &rules,
                                      const SegmenterConfig &cfg) {
  Expansions expansions;
  if (options.use_abbreviations) {
    ensure_abbreviations(record, rules, cfg);
    expansions = utf8_expansions(expansion_map(*record.abbreviations));
  } else {
    ensure_sentences(record, rules, cfg);
  }
  const std::vector<MentionSpan> mentions =
      record.mentions ? *record.mentions : propose_mentions(record.doc);
  std::vector<CandidateSet> out;
  out.reserve(mentions.size());
  for (const MentionSpan &m : mentions) {
    CandidateSet set =
        generate_candidates(index, index.alias_table(), utf8_encode(m.surface),
                            options.k,
                            options.use_abbreviations ? &expansions : nullptr);
    set.start = m.start;
    set.end = m.end;
    out.push_back(std::move(set));
  }
  return out;
}

std::string format_candidate_set(const CandidateSet &set, std::size_t doc) {
  nlohmann::ordered_json obj;
  obj["doc"] = doc;
  obj["mention"] = set.mention;
  obj["start"] = set.start;
  obj["end"] = set.end;
  obj["query_text"] = set.query_text;
  nlohmann::ordered_json candidates = nlohmann::ordered_json::array();
  for (const Candidate &c : set.candidates) {
    nlohmann::ordered_json entry;
    entry["concept_id"] = c.concept_id;
    entry["alias"] = c.alias;
    entry["score"] = c.similarity;
    candidates.push_back(std::move(entry));
  }
  obj["candidates"] = std::move(candidates);
  if (set.empty_reason) obj["empty_reason"] = *set.empty_reason;
  return obj.dump();
}

}  // namespace bioling
