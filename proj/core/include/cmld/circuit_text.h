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

// Circuit text format: one s-expression per file, UTF-8.
//
//   expr := atom | "(" op expr+ ")"
//   op   := "+" | "*"
//   atom := "x" [A-Za-z0-9_]+
//
// Comments run from ';' to end of line. "*" takes two or more operands and
// is folded left into binary products; "+" takes one or more.

#include <string>
#include <string_view>
#include <vector>

#include "cmld/circuit.h"

namespace cmld {

struct ParsedCircuit {
  Circuit circuit;
  // var_names[v] is the atom spelled in the text for VarId v, numbered by
  // first appearance.
  std::vector<std::string> var_names;
};

// Throws InputError with the 1-based line and column of the problem.
ParsedCircuit ParseCircuit(std::string_view text);

// Writes the output gate as a tree; shared subcircuits are repeated. Throws
// ResourceError if the text would exceed max_bytes.
std::string FormatCircuit(const Circuit& c,
                          const std::vector<std::string>& var_names,
                          std::size_t max_bytes = std::size_t{1} << 24);

}  // namespace cmld
