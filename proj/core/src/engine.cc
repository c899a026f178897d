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

#include "cmld/engine.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "cmld/errors.h"

namespace cmld {

std::optional<std::int64_t> RunTrials(
    std::int64_t count, int threads,
    const std::function<bool(std::int64_t)>& trial) {
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  if (threads <= 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) {
      if (trial(i)) return i;
    }
    return std::nullopt;
  }

  std::atomic<std::int64_t> next{0};
  std::atomic<std::int64_t> best{kNone};
  std::exception_ptr error;
  std::mutex error_mu;

  auto worker = [&] {
    for (;;) {
      const std::int64_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      bool hit = false;
      try {
        hit = trial(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        best.store(-1);
        return;
      }
      if (hit) {
        std::int64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    const auto n = static_cast<int>(std::min<std::int64_t>(threads, count));
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  const std::int64_t b = best.load();
  if (b == kNone) return std::nullopt;
  return b;
}

int ResolveFieldBits(const SolveOptions& options, int k) {
  return options.field_bits > 0 ? options.field_bits
                                : FieldContext::DefaultBitsForDegree(k);
}

void ValidateInstance(const CmldInstance& inst, const SolveOptions& options) {
  if (inst.k < 1) throw InputError("degree k must be positive");
  if (inst.k > options.max_degree) {
    throw ResourceError("degree " + std::to_string(inst.k) +
                        " exceeds the configured maximum " +
                        std::to_string(options.max_degree));
  }
  if (inst.circuit.size() == 0) throw InputError("empty circuit");
  for (VarId x : inst.circuit.Variables()) {
    if (x >= inst.var_color.size()) {
      throw InputError("variable x" + std::to_string(x) + " has no color");
    }
    if (inst.var_color[x] >= inst.multiplicity.size()) {
      throw InputError("color of variable x" + std::to_string(x) +
                       " has no multiplicity");
    }
  }
  if (!DegreeCheck(inst.circuit, inst.k)) {
    throw InputError("circuit is not homogeneous of degree " +
                     std::to_string(inst.k));
  }
}

GroupAlgebraElement<FieldRing> EvaluateTrial(const CmldInstance& inst,
                                             const FieldRing& ring,
                                             std::uint64_t seed,
                                             std::int64_t trial) {
  Rng rng = MakeStream(seed, static_cast<std::uint64_t>(trial));
  const SubspaceFamily family = SampleSubspaces(inst.multiplicity, inst.k, rng);
  const std::vector<VarId> vars = inst.circuit.Variables();
  const Assignment assignment =
      AssignVariables(vars, inst.var_color, family, rng);
  const EdgeMultipliers mult = Extend(inst.circuit, ring.field(), rng);

  std::vector<std::optional<GroupAlgebraElement<FieldRing>>> values(
      inst.circuit.num_vars());
  for (VarId x : vars) values[x] = FromPair(ring, *assignment[x]);
  return Evaluate<FieldRing>(inst.circuit, ring, mult, values);
}

Verdict SolveCmld(const CmldInstance& inst, const SolveOptions& options) {
  ValidateInstance(inst, options);
  Verdict verdict;
  verdict.seed = options.seed;
  verdict.field_bits = ResolveFieldBits(options, inst.k);
  try {
    verdict.plan = PlanRepetitions(inst.multiplicity, inst.k, options.delta);
  } catch (const InfeasibleError&) {
    // No degree-k term can respect the bounds, so "no" is certain.
    verdict.plan.delta = options.delta;
    return verdict;
  }

  const FieldRing ring{FieldContext(verdict.field_bits)};
  const std::int64_t trials =
      options.max_trials > 0 ? options.max_trials : verdict.plan.trials;
  verdict.first_hit = RunTrials(trials, options.threads, [&](std::int64_t i) {
    return !IsZero(ring, EvaluateTrial(inst, ring, options.seed, i));
  });
  verdict.yes = verdict.first_hit.has_value();
  verdict.trials_run = verdict.yes ? *verdict.first_hit + 1 : trials;
  return verdict;
}

Verdict SolveMld(const Circuit& circuit, int k, const SolveOptions& options) {
  CmldInstance inst;
  inst.circuit = circuit;
  inst.k = k;
  inst.var_color.resize(circuit.num_vars());
  for (VarId x = 0; x < circuit.num_vars(); ++x) inst.var_color[x] = x;
  inst.multiplicity.assign(circuit.num_vars(), 1);
  return SolveCmld(inst, options);
}

}  // namespace cmld
