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

#ifndef BIOLING_ERROR_H_
#define BIOLING_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bioling {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data. When the error originates from a
// line-oriented file, line() holds the 1-based line number (0 otherwise).
class DataError : public Error {
 public:
  explicit DataError(const std::string &message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Invalid arguments passed to an operation (bad parameters, empty inputs
// where a nonempty one is required).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace bioling

#endif  // BIOLING_ERROR_H_
