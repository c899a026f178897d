// Copyright 2026 The cmld Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace cmld {

// Malformed or inconsistent user input. Parsers attach a 1-based location;
// line == 0 means no location is known.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, int line = 0, int column = 0)
      : std::runtime_error(Format(what, line, column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string Format(const std::string& what, int line, int column) {
    if (line <= 0) return what;
    std::string loc = "line " + std::to_string(line);
    if (column > 0) loc += ", column " + std::to_string(column);
    return loc + ": " + what;
  }

  int line_;
  int column_;
};

// The multiplicities cannot cover the requested degree.
class InfeasibleError : public InputError {
 public:
  using InputError::InputError;
};

// A run would exceed a configured size limit (degree, expansion budget).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cmld
