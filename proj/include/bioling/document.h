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

// Offset-anchored document model shared by every pipeline stage.
//
// A Document owns its source text as Unicode scalar values. Tokens,
// sentences and mentions are spans into that text; the text itself is never
// modified, so every span can be re-read at any time and the original string
// can be rebuilt exactly from the tokens and the whitespace between them.

#ifndef BIOLING_DOCUMENT_H_
#define BIOLING_DOCUMENT_H_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bioling {

// Half-open range [start, end) of code point offsets.
struct Token {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token &) const = default;
};

// Inclusive token index range.
struct SentenceSpan {
  std::size_t first_token = 0;
  std::size_t last_token = 0;

  bool operator==(const SentenceSpan &) const = default;
};

struct MentionSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::u32string surface;

  bool operator==(const MentionSpan &) const = default;
};

struct AbbreviationPair {
  MentionSpan short_form;
  MentionSpan long_form;

  bool operator==(const AbbreviationPair &) const = default;
};

class Document {
 public:
  Document() : Document(std::u32string()) {}

  // A document with no tokens. Every character must be whitespace for the
  // token invariants to hold, so this is mostly useful as a tokenizer input
  // holder; tokens() is simply empty.
  explicit Document(std::u32string text);

  // Validates the token and sentence invariants and throws DataError when
  // they do not hold: tokens nonempty, strictly increasing, non-overlapping,
  // inside the text, every gap between them whitespace, every non-whitespace
  // character covered. Sentences, when given, must partition the tokens.
  Document(std::u32string text, std::vector<Token> tokens,
           std::vector<SentenceSpan> sentences = {});

  const std::u32string &text() const { return *text_; }
  std::span<const Token> tokens() const { return tokens_; }
  std::span<const SentenceSpan> sentences() const { return sentences_; }

  std::u32string_view surface(const Token &token) const;
  std::u32string_view surface(std::size_t token_index) const {
    return surface(tokens_[token_index]);
  }

  // Whitespace between token i and token i + 1 (or the end of text).
  std::u32string_view trailing_ws(std::size_t token_index) const;

  // Whitespace before the first token. For a document with no tokens this is
  // the whole text.
  std::u32string_view leading_ws() const;

  // Code point range covered by a sentence, from the start of its first
  // token to the end of its last token.
  std::size_t sentence_start(const SentenceSpan &s) const {
    return tokens_[s.first_token].start;
  }
  std::size_t sentence_end(const SentenceSpan &s) const {
    return tokens_[s.last_token].end;
  }

  MentionSpan mention(std::size_t start, std::size_t end) const;

  // Returns a copy sharing the same text and tokens with the given
  // sentences. Throws DataError if they do not partition the tokens.
  Document with_sentences(std::vector<SentenceSpan> sentences) const;

 private:
  void validate_tokens() const;
  void validate_sentences() const;

  std::shared_ptr<const std::u32string> text_;
  std::vector<Token> tokens_;
  std::vector<SentenceSpan> sentences_;
};

// Rebuilds the source text from leading whitespace, token surfaces and
// trailing whitespace. Always equals doc.text() for a valid Document.
std::u32string detokenize(const Document &doc);

}  // namespace bioling

#endif  // BIOLING_DOCUMENT_H_
