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

// Functional motif problems on vertex-colored graphs, reduced to constrained
// multilinear detection through branching-walk circuits.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cmld/circuit.h"
#include "cmld/engine.h"
#include "cmld/graph.h"

namespace cmld {

// walk[v][i] (1 <= i <= k) is B(v, i), the sum over branching walks of
// size i rooted at v:
//   B(v, 1) = terminal(v)
//   B(v, i) = sum_{u in N(v)} sum_{j=1}^{i-1} B(u, j) * B(v, i - j)
// nullopt marks excluded vertices and identically-zero gates. Every
// multilinear monomial of B(v, i) is the product of the terminal variables
// of a connected i-vertex set containing v, and every such set contributes.
using WalkGates = std::vector<std::vector<std::optional<GateId>>>;

WalkGates BuildWalkGates(Circuit& c, const ColoredGraph& g, int k,
                         std::span<const std::optional<GateId>> terminal);

// Circuit with output sum_v B(v, k) over vertices with a terminal; nullopt
// if that sum is empty (the polynomial is zero). `terminal` is called once
// per vertex in id order and may return nullopt to exclude the vertex.
using TerminalFn = std::function<std::optional<GateId>(Circuit&, VertexId)>;
std::optional<Circuit> BranchingWalkCircuit(const ColoredGraph& g, int k,
                                            const TerminalFn& terminal);

// Vertex set with the extras of the variant that produced it.
struct Occurrence {
  std::vector<VertexId> vertices;  // ascending
  std::int64_t trials_run = 0;
};

// True iff `vertices` induces a connected subgraph whose color multiset is
// exactly the motif.
bool IsOccurrence(const ColoredGraph& g, const Motif& m,
                  std::span<const VertexId> vertices);

// Is there a connected set of motif.size() vertices whose colors are the
// motif? `allowed`, if nonempty, restricts the vertices (one flag per
// vertex).
Verdict DecideGraphMotif(const ColoredGraph& g, const Motif& m,
                         const SolveOptions& options,
                         std::span<const bool> allowed = {});

// Is there a connected set of k vertices with at most mu(c) of each color?
// Bounds with sum_c min(mu(c), k) < k answer "no" without running trials.
Verdict DecideMultisetMotif(const ColoredGraph& g, const Motif& m, int k,
                            const SolveOptions& options);

// Self-reduction to the decision problem: drop every vertex whose removal
// keeps the answer "yes". Returned sets always pass IsOccurrence; nullopt
// means none was found (wrong with probability at most delta).
std::optional<Occurrence> FindOccurrence(const ColoredGraph& g, const Motif& m,
                                         const SolveOptions& options);

// Outcome of a sweep over a parameter (p or q), one decision per value.
struct SweepResult {
  std::optional<int> value;
  std::int64_t trials_run = 0;  // summed over the sweep
  std::vector<Verdict> steps;
};

// Smallest p <= max_p such that some connected set of k + p vertices
// contains the motif.
SweepResult MinAdd(const ColoredGraph& g, const Motif& m,
                   const SolveOptions& options, int max_p);

// Smallest q such that a vertex set with exactly the motif's colors induces
// at most q connected components.
SweepResult MinCc(const ColoredGraph& g, const Motif& m,
                  const SolveOptions& options);

struct SubstituteResult {
  std::optional<int> p;
  std::int64_t trials_run = 0;
  std::uint64_t seed = 0;
  int field_bits = 0;
  RepetitionPlan plan;
};

// Minimum over connected k-vertex sets S (k = motif size) of
// sum_c max(0, count_S(c) - mu(c)). Evaluates over F[z][Z2^(2k)]: the upper
// k coordinates enforce the motif on x-variables, the lower k coordinates
// enforce multilinearity, and each substituted vertex contributes a factor
// z. Any reported p is attained; it is optimal with probability >= 1 - delta.
// Throws ResourceError if k exceeds options.max_substitute_degree.
SubstituteResult MinSubstitute(const ColoredGraph& g, const Motif& m,
                               const SolveOptions& options);

}  // namespace cmld
