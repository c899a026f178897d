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

// Exhaustive reference answers for desk-sized inputs. Everything here is
// deterministic and independent of the randomized algebraic route.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cmld/circuit.h"
#include "cmld/graph.h"

namespace cmld {

inline constexpr std::size_t kMaxOracleVertices = 24;

// Calls visit once per connected k-vertex set (ascending ids). ESU-style
// extension with exclusive neighborhoods, rooted at each set's smallest
// vertex. Throws ResourceError above kMaxOracleVertices.
void EnumConnectedSets(const ColoredGraph& g, int k,
                       const std::function<void(std::span<const VertexId>)>& visit);

std::vector<std::vector<VertexId>> ConnectedSets(const ColoredGraph& g, int k);

// Number of connected components of the subgraph induced by `vertices`.
int CountComponents(const ColoredGraph& g, std::span<const VertexId> vertices);

bool BruteGraphMotif(const ColoredGraph& g, const Motif& m);
bool BruteMultisetMotif(const ColoredGraph& g, const Motif& m, int k);
// Smallest p <= max_p with a connected (k + p)-set whose colors contain the
// motif.
std::optional<int> BruteMinAdd(const ColoredGraph& g, const Motif& m,
                               int max_p = 1 << 20);
// Smallest component count over sets whose color multiset is the motif.
std::optional<int> BruteMinCc(const ColoredGraph& g, const Motif& m);
// Smallest sum_c max(0, count_S(c) - mu(c)) over connected k-sets S.
std::optional<int> BruteMinSubstitute(const ColoredGraph& g, const Motif& m);

// Multilinear monomials (sorted distinct variables) with their number of
// copies, saturating. Copies are counted, never cancelled.
struct MonomialMap {
  std::map<std::vector<VarId>, std::uint64_t> terms;
};

// Symbolic expansion keeping only multilinear monomials of degree <= cap.
// If `multiplicity` is nonempty, monomials with more than multiplicity[c]
// variables of color var_color[x] == c are dropped as well. Throws
// ResourceError when a gate holds more than `budget` monomials.
MonomialMap ExpandMultilinear(const Circuit& c, int cap,
                              std::span<const ColorId> var_color = {},
                              std::span<const int> multiplicity = {},
                              std::size_t budget = 1 << 20);

// Does the circuit's polynomial contain an allowed multilinear monomial of
// degree exactly k?
bool BruteMultilinear(const Circuit& c, std::span<const ColorId> var_color,
                      std::span<const int> multiplicity, int k,
                      std::size_t budget = 1 << 20);

}  // namespace cmld
