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

// Constrained multilinear detection: does P(X), given as a circuit, contain
// a degree-k multilinear monomial with at most mu(c) variables of each
// color c? Decided by repeated evaluation of the circuit, with random edge
// multipliers, over F[Z2^k] at color-constrained random points.
//
// "yes" is always correct: monomials that repeat a variable or exceed a
// multiplicity evaluate to zero for every random choice. "no" is wrong with
// probability at most delta.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cmld/assignment.h"
#include "cmld/circuit.h"
#include "cmld/coefficient_ring.h"
#include "cmld/group_algebra.h"

namespace cmld {

struct CmldInstance {
  Circuit circuit;
  std::vector<ColorId> var_color;  // indexed by VarId
  std::vector<int> multiplicity;   // indexed by ColorId
  int k = 0;
};

struct SolveOptions {
  double delta = 0.01;
  std::uint64_t seed = 1;
  int field_bits = 0;           // 0 picks FieldContext::DefaultBitsForDegree
  std::int64_t max_trials = 0;  // 0 uses the planned count
  int threads = 1;
  int max_degree = 16;            // resource guard on k
  int max_substitute_degree = 10;  // guard for the 2k-dimensional variant
};

struct Verdict {
  bool yes = false;
  std::int64_t trials_run = 0;  // first_hit + 1 on yes, planned count on no
  std::optional<std::int64_t> first_hit;
  std::uint64_t seed = 0;
  int field_bits = 0;
  RepetitionPlan plan;
};

// Runs trial(0), trial(1), ... up to count on `threads` workers and returns
// the smallest index whose trial returned true. Every trial with a smaller
// index has run, so the result does not depend on the thread count.
std::optional<std::int64_t> RunTrials(
    std::int64_t count, int threads,
    const std::function<bool(std::int64_t)>& trial);

// Field width used for degree k under `options`.
int ResolveFieldBits(const SolveOptions& options, int k);

// Throws InputError if a circuit variable has no color, a color id has no
// multiplicity, or the circuit is not homogeneous of degree k;
// ResourceError if k exceeds the guard.
void ValidateInstance(const CmldInstance& inst, const SolveOptions& options);

// The value of the extended circuit in trial `trial` of a run seeded with
// `seed`. Draw order within a trial: subspaces, variable vectors,
// multipliers.
GroupAlgebraElement<FieldRing> EvaluateTrial(const CmldInstance& inst,
                                             const FieldRing& ring,
                                             std::uint64_t seed,
                                             std::int64_t trial);

// Multiplicities that cannot cover k give an immediate "no" with zero
// trials and an empty plan.
Verdict SolveCmld(const CmldInstance& inst, const SolveOptions& options);

// Unconstrained detection: every variable its own color, multiplicity 1.
Verdict SolveMld(const Circuit& circuit, int k, const SolveOptions& options);

}  // namespace cmld
