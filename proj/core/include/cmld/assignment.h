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

// Color-constrained random assignment: per-color random subspaces of Z2^k
// and, per variable, a random nonzero vector of its color's subspace. Also
// the exact subspace survival probabilities and the repetition planner
// built on them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmld/circuit.h"
#include "cmld/group_algebra.h"
#include "cmld/rng.h"

namespace cmld {

using ColorId = std::uint32_t;
using Rational = boost::multiprecision::cpp_rational;

// Rank over GF(2) of the given rows (each a bit vector).
int RankGf2(std::span<const std::uint32_t> rows);

// t random k-bit rows, redrawn until they are linearly independent.
// `attempts`, when given, receives the number of draws made.
std::vector<std::uint32_t> SampleBasis(int t, int k, Rng& rng,
                                       int* attempts = nullptr);

// Basis rows of S_c per color. dim(S_c) = min(mu(c), k).
struct SubspaceFamily {
  int dim = 0;  // k
  std::vector<std::vector<std::uint32_t>> bases;

  const std::vector<std::uint32_t>& basis(ColorId c) const;
};

// Colors are sampled in id order. Throws std::invalid_argument for k < 1 or
// k > 32, or a negative multiplicity.
SubspaceFamily SampleSubspaces(std::span<const int> multiplicity, int k,
                               Rng& rng);

// XOR of a uniformly random nonempty subset of the basis of S_c, so never
// v0. A color with multiplicity 0 has S_c = {v0} and yields v0, whose pair
// element v0 + v0 is zero.
GroupVector SampleVector(const SubspaceFamily& family, ColorId c, Rng& rng);

// assignment[x] is the vector v with x -> v0 + v; nullopt for variables
// not listed.
using Assignment = std::vector<std::optional<GroupVector>>;

// Independent draws for `vars` in the given order. Throws
// std::invalid_argument if a variable's color has no subspace.
Assignment AssignVariables(std::span<const VarId> vars,
                           std::span<const ColorId> var_color,
                           const SubspaceFamily& family, Rng& rng);

// Probability that t random nonzero vectors of a t-dimensional subspace are
// linearly independent:
//   p_t = prod_{i=1}^{t-1} (2^t - 2^(t-i)) / (2^t - 1),  p_1 = 1.
// Throws std::invalid_argument for t < 1.
Rational SurvivalProbability(int t);
double SurvivalProbabilityDouble(int t);

struct RepetitionPlan {
  std::int64_t trials = 0;  // R = ceil(ln(1/delta) / q)
  double q = 0;             // lower bound on per-trial success
  double delta = 0;
  // Group size per color in the worst allowed term (sums to k).
  std::vector<int> worst_grouping;
};

// Worst grouping: minimize prod_c p_{t_c} subject to sum_c t_c = k and
// 0 <= t_c <= min(mu(c), k), by dynamic programming over colors.
// q = base_success * that minimum, where base_success is the probability the
// groups' union survives once each group has (1/4 for one independent
// random assignment).
//
// Throws InfeasibleError if sum_c min(mu(c), k) < k and
// std::invalid_argument unless 0 < delta < 1.
RepetitionPlan PlanRepetitions(std::span<const int> multiplicity, int k,
                               double delta, double base_success = 0.25);

}  // namespace cmld
