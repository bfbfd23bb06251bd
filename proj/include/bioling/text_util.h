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

#ifndef BIOLING_TEXT_UTIL_H_
#define BIOLING_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace bioling {

// Splits on '\n'; a trailing '\r' is removed from each line. A final empty
// line after a terminating newline is not returned.
std::vector<std::string_view> split_lines(std::string_view text);

std::string_view trim_ascii(std::string_view s);

// Splits on a single character; empty fields are kept.
std::vector<std::string_view> split(std::string_view s, char sep);

// Reads a whole file. Throws DataError naming the path on failure.
std::string read_file(const std::string &path);

}  // namespace bioling

#endif  // BIOLING_TEXT_UTIL_H_
