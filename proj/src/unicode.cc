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

#include "bioling/unicode.h"

#include <cstdint>

#include "bioling/error.h"

namespace bioling {

std::u32string utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto b0 = static_cast<std::uint8_t>(bytes[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4, cp = b0 & 0x07, min = 0x10000;
    } else {
      throw DataError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + len > n) {
      throw DataError("truncated UTF-8 sequence at offset " +
                      std::to_string(i));
    }
    for (int k = 1; k < len; ++k) {
      const auto b = static_cast<std::uint8_t>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw DataError("invalid UTF-8 continuation byte at offset " +
                        std::to_string(i + k));
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw DataError("invalid UTF-8 code point at offset " +
                      std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

void utf8_append(char32_t ch, std::string *out) {
  if (ch < 0x80) {
    out->push_back(static_cast<char>(ch));
  } else if (ch < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (ch >> 6)));
    out->push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else if (ch < 0x10000) {
    if (ch >= 0xD800 && ch <= 0xDFFF) {
      throw DataError("cannot encode surrogate code point");
    }
    out->push_back(static_cast<char>(0xE0 | (ch >> 12)));
    out->push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else if (ch <= 0x10FFFF) {
    out->push_back(static_cast<char>(0xF0 | (ch >> 18)));
    out->push_back(static_cast<char>(0x80 | ((ch >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((ch >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (ch & 0x3F)));
  } else {
    throw DataError("code point out of range");
  }
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t ch : text) utf8_append(ch, &out);
  return out;
}

bool is_space(char32_t ch) {
  switch (ch) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return ch >= 0x2000 && ch <= 0x200A;
  }
}

char32_t to_lower(char32_t ch) {
  if (ch < 0x80) {
    return (ch >= 'A' && ch <= 'Z') ? ch + 0x20 : ch;
  }
  if (ch < 0x100) {
    return (ch >= 0xC0 && ch <= 0xDE && ch != 0xD7) ? ch + 0x20 : ch;
  }
  if (ch < 0x180) {
    // Latin Extended-A alternates upper/lower pairs, with the parity
    // flipping in a few sub-ranges.
    if (ch == 0x130) return 'i';
    if (ch == 0x178) return 0xFF;
    if (ch <= 0x137) return (ch % 2 == 0 && ch != 0x130) ? ch + 1 : ch;
    if (ch >= 0x139 && ch <= 0x148) return (ch % 2 == 1) ? ch + 1 : ch;
    if (ch >= 0x14A && ch <= 0x177) return (ch % 2 == 0) ? ch + 1 : ch;
    if (ch >= 0x179 && ch <= 0x17E) return (ch % 2 == 1) ? ch + 1 : ch;
    return ch;
  }
  if (ch >= 0x370 && ch < 0x400) {
    if (ch == 0x386) return 0x3AC;
    if (ch >= 0x388 && ch <= 0x38A) return ch + 0x25;
    if (ch == 0x38C) return 0x3CC;
    if (ch == 0x38E || ch == 0x38F) return ch + 0x3F;
    if (ch >= 0x391 && ch <= 0x3AB && ch != 0x3A2) return ch + 0x20;
    return ch;
  }
  if (ch >= 0x400 && ch < 0x500) {
    if (ch <= 0x40F) return ch + 0x50;
    if (ch <= 0x42F) return ch + 0x20;
    if ((ch >= 0x460 && ch <= 0x481) || (ch >= 0x48A && ch <= 0x4BF)) {
      return (ch % 2 == 0) ? ch + 1 : ch;
    }
    return ch;
  }
  return ch;
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t &ch : out) ch = to_lower(ch);
  return out;
}

bool is_upper(char32_t ch) { return to_lower(ch) != ch; }

bool is_digit(char32_t ch) { return ch >= '0' && ch <= '9'; }

bool is_letter(char32_t ch) {
  if (ch < 0x80) return (ch | 0x20) >= 'a' && (ch | 0x20) <= 'z';
  if (ch < 0x100) {
    return ch == 0xAA || ch == 0xB5 || ch == 0xBA ||
           (ch >= 0xC0 && ch != 0xD7 && ch != 0xF7);
  }
  if (ch < 0x2B0) return true;  // Latin Extended-A/B, IPA.
  if (ch >= 0x370 && ch < 0x400) {
    return ch != 0x375 && ch != 0x37E && ch != 0x384 && ch != 0x385 &&
           ch != 0x387;
  }
  if (ch >= 0x400 && ch < 0x530) return ch < 0x482 || ch > 0x489;
  if (ch >= 0x5D0 && ch <= 0x5EA) return true;  // Hebrew.
  if (ch >= 0x620 && ch <= 0x64A) return true;  // Arabic.
  if (ch >= 0x1E00 && ch < 0x2000) return true;  // Latin/Greek extended.
  if (ch >= 0x3040 && ch <= 0x30FF) return true;  // Kana.
  if (ch >= 0x4E00 && ch <= 0x9FFF) return true;  // CJK ideographs.
  if (ch >= 0xAC00 && ch <= 0xD7A3) return true;  // Hangul.
  return false;
}

}  // namespace bioling
