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

#include "cmld/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cmld/errors.h"

namespace cmld {

int RankGf2(std::span<const std::uint32_t> rows) {
  // pivot[b] holds a reduced row whose leading bit is b.
  std::uint32_t pivot[32] = {};
  int rank = 0;
  for (std::uint32_t r : rows) {
    for (int b = 31; b >= 0 && r != 0; --b) {
      if (!((r >> b) & 1u)) continue;
      if (pivot[b] == 0) {
        pivot[b] = r;
        ++rank;
        r = 0;
      } else {
        r ^= pivot[b];
      }
    }
  }
  return rank;
}

std::vector<std::uint32_t> SampleBasis(int t, int k, Rng& rng, int* attempts) {
  std::vector<std::uint32_t> rows(t);
  int tries = 0;
  do {
    ++tries;
    for (auto& r : rows) r = static_cast<std::uint32_t>(RandomBits(rng, k));
  } while (RankGf2(rows) < t);
  if (attempts != nullptr) *attempts = tries;
  return rows;
}

const std::vector<std::uint32_t>& SubspaceFamily::basis(ColorId c) const {
  if (c >= bases.size()) {
    throw std::invalid_argument("no subspace for color " + std::to_string(c));
  }
  return bases[c];
}

SubspaceFamily SampleSubspaces(std::span<const int> multiplicity, int k,
                               Rng& rng) {
  if (k < 1 || k > 32) throw std::invalid_argument("subspace dimension out of range");
  SubspaceFamily family;
  family.dim = k;
  family.bases.reserve(multiplicity.size());
  for (int mu : multiplicity) {
    if (mu < 0) throw std::invalid_argument("negative multiplicity");
    family.bases.push_back(SampleBasis(std::min(mu, k), k, rng));
  }
  return family;
}

GroupVector SampleVector(const SubspaceFamily& family, ColorId c, Rng& rng) {
  const auto& basis = family.basis(c);
  GroupVector v{family.dim, 0};
  if (basis.empty()) return v;
  const int t = static_cast<int>(basis.size());
  std::uint64_t subset = 0;
  while (subset == 0) subset = RandomBits(rng, t);
  for (int i = 0; i < t; ++i) {
    if ((subset >> i) & 1u) v.bits ^= basis[i];
  }
  return v;
}

Assignment AssignVariables(std::span<const VarId> vars,
                           std::span<const ColorId> var_color,
                           const SubspaceFamily& family, Rng& rng) {
  VarId max_var = 0;
  for (VarId x : vars) max_var = std::max(max_var, x + 1);
  Assignment out(max_var);
  for (VarId x : vars) {
    if (x >= var_color.size()) {
      throw std::invalid_argument("variable x" + std::to_string(x) +
                                  " has no color");
    }
    out[x] = SampleVector(family, var_color[x], rng);
  }
  return out;
}

Rational SurvivalProbability(int t) {
  if (t < 1) throw std::invalid_argument("survival probability needs t >= 1");
  using boost::multiprecision::cpp_int;
  const cpp_int full = (cpp_int(1) << t) - 1;
  Rational p = 1;
  for (int i = 1; i < t; ++i) {
    p *= Rational((cpp_int(1) << t) - (cpp_int(1) << (t - i)), full);
  }
  return p;
}

double SurvivalProbabilityDouble(int t) {
  return SurvivalProbability(t).convert_to<double>();
}

RepetitionPlan PlanRepetitions(std::span<const int> multiplicity, int k,
                               double delta, double base_success) {
  if (!(delta > 0 && delta < 1)) {
    throw std::invalid_argument("delta must lie in (0, 1)");
  }
  if (k < 1) throw std::invalid_argument("degree must be positive");
  if (!(base_success > 0 && base_success <= 1)) {
    throw std::invalid_argument("base success must lie in (0, 1]");
  }

  std::vector<int> cap;
  long capacity = 0;
  for (int mu : multiplicity) {
    if (mu < 0) throw std::invalid_argument("negative multiplicity");
    cap.push_back(std::min(mu, k));
    capacity += cap.back();
  }
  if (capacity < k) {
    throw InfeasibleError("multiplicities cover " + std::to_string(capacity) +
                          " variables, fewer than degree " + std::to_string(k));
  }

  std::vector<double> log_p(k + 1, 0.0);
  for (int t = 1; t <= k; ++t) log_p[t] = std::log(SurvivalProbabilityDouble(t));

  // best[c][j]: minimum sum of log p over colors < c using j variables.
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t colors = cap.size();
  std::vector<std::vector<double>> best(colors + 1,
                                        std::vector<double>(k + 1, kInf));
  std::vector<std::vector<int>> choice(colors + 1, std::vector<int>(k + 1, 0));
  best[0][0] = 0;
  for (std::size_t c = 0; c < colors; ++c) {
    for (int j = 0; j <= k; ++j) {
      if (best[c][j] == kInf) continue;
      for (int t = 0; t <= cap[c] && j + t <= k; ++t) {
        const double v = best[c][j] + log_p[t];
        if (v < best[c + 1][j + t]) {
          best[c + 1][j + t] = v;
          choice[c + 1][j + t] = t;
        }
      }
    }
  }

  RepetitionPlan plan;
  plan.delta = delta;
  plan.worst_grouping.assign(colors, 0);
  Rational q = 1;
  for (std::size_t c = colors, j = k; c > 0; --c) {
    const int t = choice[c][j];
    plan.worst_grouping[c - 1] = t;
    if (t > 0) q *= SurvivalProbability(t);
    j -= t;
  }
  plan.q = base_success * q.convert_to<double>();

  const double r = std::ceil(std::log(1.0 / delta) / plan.q);
  constexpr double kMaxTrials = 9.0e18;
  plan.trials = r >= kMaxTrials ? static_cast<std::int64_t>(kMaxTrials)
                                : std::max<std::int64_t>(1, static_cast<std::int64_t>(r));
  return plan;
}

}  // namespace cmld
