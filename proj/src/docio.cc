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

#include "bioling/docio.h"

#include <utility>

#include "bioling/error.h"
#include "bioling/unicode.h"

namespace bioling {

using Json = nlohmann::ordered_json;

namespace {

std::size_t offset_field(const Json &obj, const char *field) {
  auto it = obj.find(field);
  if (it == obj.end() || !it->is_number_unsigned()) {
    if (it != obj.end() && it->is_number_integer() && it->get<long long>() >= 0) {
      return it->get<std::size_t>();
    }
    throw DataError(std::string("expected non-negative integer '") + field +
                    "'");
  }
  return it->get<std::size_t>();
}

const Json &array_field(const Json &obj, const char *field) {
  const Json &v = obj.at(field);
  if (!v.is_array()) {
    throw DataError(std::string("'") + field + "' must be an array");
  }
  return v;
}

MentionSpan span_from_json(const Document &doc, const Json &obj) {
  if (!obj.is_object()) throw DataError("span must be an object");
  const std::size_t start = offset_field(obj, "start");
  const std::size_t end = offset_field(obj, "end");
  if (end <= start || end > doc.text().size()) {
    throw DataError("span [" + std::to_string(start) + ", " +
                    std::to_string(end) + ") is empty or out of range");
  }
  return doc.mention(start, end);
}

}  // namespace

Json span_json(std::size_t start, std::size_t end) {
  Json obj;
  obj["start"] = start;
  obj["end"] = end;
  return obj;
}

DocRecord text_record(std::string_view utf8) {
  DocRecord record;
  record.doc = Document(utf8_decode(utf8));
  return record;
}

DocRecord parse_doc_record(std::string_view line) {
  Json obj;
  try {
    obj = Json::parse(line);
  } catch (const Json::parse_error &e) {
    throw DataError(std::string("malformed JSON: ") + e.what());
  }
  if (!obj.is_object()) throw DataError("expected a JSON object");
  auto text_it = obj.find("text");
  if (text_it == obj.end() || !text_it->is_string()) {
    throw DataError("missing string field 'text'");
  }
  std::u32string text = utf8_decode(text_it->get_ref<const std::string &>());

  DocRecord record;
  std::vector<Token> tokens;
  std::vector<SentenceSpan> sentences;
  if (obj.contains("tokens")) {
    record.has_tokens = true;
    for (const Json &t : array_field(obj, "tokens")) {
      if (!t.is_object()) throw DataError("token must be an object");
      tokens.push_back(Token{offset_field(t, "start"), offset_field(t, "end")});
    }
  }
  if (obj.contains("sentences")) {
    if (!record.has_tokens) throw DataError("'sentences' without 'tokens'");
    record.has_sentences = true;
    for (const Json &s : array_field(obj, "sentences")) {
      if (!s.is_object()) throw DataError("sentence must be an object");
      sentences.push_back(SentenceSpan{offset_field(s, "first_token"),
                                       offset_field(s, "last_token")});
    }
  }
  record.doc = record.has_tokens
                   ? Document(std::move(text), std::move(tokens),
                              std::move(sentences))
                   : Document(std::move(text));

  if (obj.contains("abbreviations")) {
    std::vector<AbbreviationPair> pairs;
    for (const Json &p : array_field(obj, "abbreviations")) {
      if (!p.is_object() || !p.contains("short") || !p.contains("long")) {
        throw DataError("abbreviation needs 'short' and 'long' spans");
      }
      pairs.push_back(AbbreviationPair{span_from_json(record.doc, p["short"]),
                                       span_from_json(record.doc, p["long"])});
    }
    record.abbreviations = std::move(pairs);
  }
  if (obj.contains("mentions")) {
    std::vector<MentionSpan> mentions;
    for (const Json &m : array_field(obj, "mentions")) {
      mentions.push_back(span_from_json(record.doc, m));
    }
    record.mentions = std::move(mentions);
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string &key = it.key();
    if (key == "text" || key == "tokens" || key == "sentences" ||
        key == "abbreviations" || key == "mentions") {
      continue;
    }
    record.extra[key] = it.value();
  }
  return record;
}

std::string format_doc_record(const DocRecord &record) {
  const Document &doc = record.doc;
  Json obj;
  obj["text"] = utf8_encode(doc.text());
  Json tokens = Json::array();
  for (const Token &t : doc.tokens()) tokens.push_back(span_json(t.start, t.end));
  obj["tokens"] = std::move(tokens);
  Json sentences = Json::array();
  for (const SentenceSpan &s : doc.sentences()) {
    Json span;
    span["first_token"] = s.first_token;
    span["last_token"] = s.last_token;
    sentences.push_back(std::move(span));
  }
  obj["sentences"] = std::move(sentences);
  if (record.abbreviations) {
    Json pairs = Json::array();
    for (const AbbreviationPair &p : *record.abbreviations) {
      Json pair;
      pair["short"] = span_json(p.short_form.start, p.short_form.end);
      pair["long"] = span_json(p.long_form.start, p.long_form.end);
      pairs.push_back(std::move(pair));
    }
    obj["abbreviations"] = std::move(pairs);
  }
  if (record.mentions) {
    Json mentions = Json::array();
    for (const MentionSpan &m : *record.mentions) {
      mentions.push_back(span_json(m.start, m.end));
    }
    obj["mentions"] = std::move(mentions);
  }
  for (auto it = record.extra.begin(); it != record.extra.end(); ++it) {
    obj[it.key()] = it.value();
  }
  return obj.dump(-1, ' ', false, Json::error_handler_t::strict);
}

}  // namespace bioling
