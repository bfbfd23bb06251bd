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

// UTF-8 conversion and the small amount of character classification the
// toolkit needs. All text offsets in the library are Unicode scalar-value
// indices into a std::u32string.

#ifndef BIOLING_UNICODE_H_
#define BIOLING_UNICODE_H_

#include <string>
#include <string_view>

namespace bioling {

// Decodes UTF-8. Throws DataError on malformed sequences, overlong forms,
// surrogates and code points above U+10FFFF.
std::u32string utf8_decode(std::string_view bytes);

// Encodes code points as UTF-8. Throws DataError on surrogates or
// out-of-range values.
std::string utf8_encode(std::u32string_view text);
void utf8_append(char32_t ch, std::string *out);

// Unicode White_Space property.
bool is_space(char32_t ch);

// Simple one-to-one lowercase mapping covering ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic. Other code points map to themselves, so
// lowercasing never changes string length.
char32_t to_lower(char32_t ch);
std::u32string to_lower(std::u32string_view text);

bool is_upper(char32_t ch);
bool is_digit(char32_t ch);  // ASCII 0-9 only.
bool is_letter(char32_t ch);
inline bool is_alnum(char32_t ch) { return is_letter(ch) || is_digit(ch); }

}  // namespace bioling

#endif  // BIOLING_UNICODE_H_
