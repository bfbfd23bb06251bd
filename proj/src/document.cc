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

#include "bioling/document.h"

#include <cassert>
#include <utility>

#include "bioling/error.h"
#include "bioling/unicode.h"

namespace bioling {

namespace {

bool all_space(std::u32string_view s) {
  for (char32_t ch : s) {
    if (!is_space(ch)) return false;
  }
  return true;
}

}  // namespace

Document::Document(std::u32string text)
    : text_(std::make_shared<const std::u32string>(std::move(text))) {}

Document::Document(std::u32string text, std::vector<Token> tokens,
                   std::vector<SentenceSpan> sentences)
    : text_(std::make_shared<const std::u32string>(std::move(text))),
      tokens_(std::move(tokens)),
      sentences_(std::move(sentences)) {
  validate_tokens();
  validate_sentences();
}

void Document::validate_tokens() const {
  const std::u32string &text = *text_;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const Token &t = tokens_[i];
    if (t.end <= t.start) {
      throw DataError("token " + std::to_string(i) + " is empty");
    }
    if (t.start < pos) {
      throw DataError("token " + std::to_string(i) +
                      " overlaps or precedes the previous token");
    }
    if (t.end > text.size()) {
      throw DataError("token " + std::to_string(i) + " extends past the text");
    }
    if (!all_space(std::u32string_view(text).substr(pos, t.start - pos))) {
      throw DataError("non-whitespace text before token " + std::to_string(i) +
                      " is not covered by any token");
    }
    pos = t.end;
  }
  if (!all_space(std::u32string_view(text).substr(pos))) {
    throw DataError("non-whitespace text after the last token");
  }
}

void Document::validate_sentences() const {
  std::size_t next = 0;
  for (std::size_t i = 0; i < sentences_.size(); ++i) {
    const SentenceSpan &s = sentences_[i];
    if (s.first_token != next || s.last_token < s.first_token ||
        s.last_token >= tokens_.size()) {
      throw DataError("sentence " + std::to_string(i) +
                      " does not continue the token partition");
    }
    next = s.last_token + 1;
  }
  if (!sentences_.empty() && next != tokens_.size()) {
    throw DataError("sentences do not cover every token");
  }
}

std::u32string_view Document::surface(const Token &token) const {
  return std::u32string_view(*text_).substr(token.start,
                                            token.end - token.start);
}

std::u32string_view Document::trailing_ws(std::size_t token_index) const {
  const std::size_t begin = tokens_[token_index].end;
  const std::size_t end = token_index + 1 < tokens_.size()
                              ? tokens_[token_index + 1].start
                              : text_->size();
  return std::u32string_view(*text_).substr(begin, end - begin);
}

std::u32string_view Document::leading_ws() const {
  const std::size_t end = tokens_.empty() ? text_->size() : tokens_[0].start;
  return std::u32string_view(*text_).substr(0, end);
}

MentionSpan Document::mention(std::size_t start, std::size_t end) const {
  if (end <= start || end > text_->size()) {
    throw InvalidArgument("mention span [" + std::to_string(start) + ", " +
                          std::to_string(end) + ") is empty or out of range");
  }
  return MentionSpan{start, end, text_->substr(start, end - start)};
}

Document Document::with_sentences(std::vector<SentenceSpan> sentences) const {
  Document copy = *this;
  copy.sentences_ = std::move(sentences);
  copy.validate_sentences();
  return copy;
}

std::u32string detokenize(const Document &doc) {
  std::u32string out(doc.leading_ws());
  out.reserve(doc.text().size());
  for (std::size_t i = 0; i < doc.tokens().size(); ++i) {
    out += doc.surface(i);
    out += doc.trailing_ws(i);
  }
  assert(out == doc.text());
  return out;
}

}  // namespace bioling
