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

#include "cmld/motif.h"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

#include "cmld/errors.h"

namespace cmld {
namespace {

bool Allowed(std::span<const bool> allowed, VertexId v) {
  return allowed.empty() || allowed[v];
}

Verdict NoWithoutTrials(const SolveOptions& options,
                        std::span<const int> multiplicity, int k) {
  Verdict v;
  v.seed = options.seed;
  v.field_bits = ResolveFieldBits(options, k);
  try {
    v.plan = PlanRepetitions(multiplicity, k, options.delta);
  } catch (const InfeasibleError&) {
    v.plan.delta = options.delta;
  }
  return v;
}

// Variables x_v = v colored like the graph; y_v = n + v share one extra
// color. Only the first n entries are used when there are no y variables.
std::vector<ColorId> VertexVarColors(const ColoredGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<ColorId> colors(2 * n, static_cast<ColorId>(g.num_colors()));
  for (VertexId v = 0; v < n; ++v) colors[v] = g.color(v);
  return colors;
}

VarId GapVar(const ColoredGraph& g, VertexId v) {
  return static_cast<VarId>(g.num_vertices() + v);
}

// Graph Motif and Multiset Motif share one reduction: x_v for every allowed
// vertex whose color is in the motif, degree k.
Verdict DecideMotifOfSize(const ColoredGraph& g, std::vector<int> mu, int k,
                          const SolveOptions& options,
                          std::span<const bool> allowed) {
  long capacity = 0;
  for (int t : mu) capacity += std::min(t, k);
  if (capacity < k) return NoWithoutTrials(options, mu, k);

  auto circuit = BranchingWalkCircuit(
      g, k, [&](Circuit& c, VertexId v) -> std::optional<GateId> {
        if (!Allowed(allowed, v) || mu[g.color(v)] == 0) return std::nullopt;
        return c.NewInput(v);
      });
  if (!circuit) return NoWithoutTrials(options, mu, k);

  CmldInstance inst;
  inst.circuit = std::move(*circuit);
  inst.var_color = VertexVarColors(g);
  inst.multiplicity = std::move(mu);
  inst.k = k;
  return SolveCmld(inst, options);
}

SolveOptions StepOptions(const SolveOptions& options, std::uint64_t step) {
  SolveOptions o = options;
  o.seed = DeriveSeed(options.seed, step);
  return o;
}

}  // namespace

WalkGates BuildWalkGates(Circuit& c, const ColoredGraph& g, int k,
                         std::span<const std::optional<GateId>> terminal) {
  const std::size_t n = g.num_vertices();
  WalkGates walk(n, std::vector<std::optional<GateId>>(k + 1));
  for (VertexId v = 0; v < n; ++v) walk[v][1] = terminal[v];
  for (int i = 2; i <= k; ++i) {
    for (VertexId v = 0; v < n; ++v) {
      if (!terminal[v]) continue;
      std::vector<GateId> terms;
      for (VertexId u : g.neighbors(v)) {
        if (!terminal[u]) continue;
        for (int j = 1; j < i; ++j) {
          if (walk[u][j] && walk[v][i - j]) {
            terms.push_back(c.NewMul(*walk[u][j], *walk[v][i - j]));
          }
        }
      }
      if (!terms.empty()) walk[v][i] = c.NewAdd(std::move(terms));
    }
  }
  return walk;
}

std::optional<Circuit> BranchingWalkCircuit(const ColoredGraph& g, int k,
                                            const TerminalFn& terminal) {
  if (k < 1) throw std::invalid_argument("walk size must be positive");
  Circuit c;
  std::vector<std::optional<GateId>> term(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) term[v] = terminal(c, v);
  const WalkGates walk = BuildWalkGates(c, g, k, term);
  std::vector<GateId> roots;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (walk[v][k]) roots.push_back(*walk[v][k]);
  }
  if (roots.empty()) return std::nullopt;
  c.SetOutput(c.NewAdd(std::move(roots)));
  return c;
}

bool IsOccurrence(const ColoredGraph& g, const Motif& m,
                  std::span<const VertexId> vertices) {
  if (static_cast<int>(vertices.size()) != m.size() || vertices.empty()) {
    return false;
  }
  std::map<std::string, int> count;
  std::vector<bool> in(g.num_vertices(), false);
  for (VertexId v : vertices) {
    if (v >= g.num_vertices() || in[v]) return false;
    in[v] = true;
    ++count[g.color_label(g.color(v))];
  }
  for (const auto& [color, mu] : m.entries) {
    auto it = count.find(color);
    if (it == count.end() || it->second != mu) return false;
    count.erase(it);
  }
  if (!count.empty()) return false;

  std::vector<VertexId> stack = {vertices[0]};
  std::vector<bool> seen(g.num_vertices(), false);
  seen[vertices[0]] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (in[u] && !seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertices.size();
}

Verdict DecideGraphMotif(const ColoredGraph& g, const Motif& m,
                         const SolveOptions& options,
                         std::span<const bool> allowed) {
  int missing = 0;
  std::vector<int> mu = ResolveMotif(g, m, &missing);
  const int k = m.size();
  if (missing > 0) return NoWithoutTrials(options, mu, k);
  return DecideMotifOfSize(g, std::move(mu), k, options, allowed);
}

Verdict DecideMultisetMotif(const ColoredGraph& g, const Motif& m, int k,
                            const SolveOptions& options) {
  if (k < 1) throw InputError("motif size k must be positive");
  long capacity = 0;
  for (const auto& [color, mu] : m.entries) capacity += std::min(mu, k);
  std::vector<int> mu = ResolveMotif(g, m);
  if (capacity < k) return NoWithoutTrials(options, mu, k);
  return DecideMotifOfSize(g, std::move(mu), k, options, {});
}

std::optional<Occurrence> FindOccurrence(const ColoredGraph& g, const Motif& m,
                                         const SolveOptions& options) {
  const std::size_t n = g.num_vertices();
  SolveOptions step = options;
  step.delta = options.delta / static_cast<double>(n + 1);

  Occurrence occ;
  std::uint64_t calls = 0;
  auto decide = [&](std::span<const bool> allowed) {
    Verdict v = DecideGraphMotif(g, m, StepOptions(step, calls++), allowed);
    occ.trials_run += v.trials_run;
    return v.yes;
  };

  std::vector<bool> keep(n, true);
  std::unique_ptr<bool[]> mask(new bool[n]);
  auto as_span = [&] {
    std::copy(keep.begin(), keep.end(), mask.get());
    return std::span<const bool>(mask.get(), n);
  };
  if (!decide(as_span())) return std::nullopt;

  // A false "no" keeps a vertex that is not needed; another pass with fresh
  // randomness removes it.
  constexpr int kMaxPasses = 4;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    for (VertexId v = 0; v < n; ++v) {
      if (!keep[v]) continue;
      keep[v] = false;
      if (!decide(as_span())) keep[v] = true;
    }
    occ.vertices.clear();
    for (VertexId v = 0; v < n; ++v) {
      if (keep[v]) occ.vertices.push_back(v);
    }
    if (IsOccurrence(g, m, occ.vertices)) return occ;
  }
  return std::nullopt;
}

SweepResult MinAdd(const ColoredGraph& g, const Motif& m,
                   const SolveOptions& options, int max_p) {
  SweepResult result;
  int missing = 0;
  const std::vector<int> mu = ResolveMotif(g, m, &missing);
  const int k = m.size();
  if (missing > 0) return result;

  for (int p = 0; p <= max_p; ++p) {
    const int degree = k + p;
    if (degree > static_cast<int>(g.num_vertices())) break;
    const SolveOptions step = StepOptions(options, static_cast<std::uint64_t>(p));
    std::vector<int> mult = mu;
    mult.push_back(p);  // the gap color

    // Motif-colored vertices may count towards the motif (x_v) or be gap
    // vertices (y_v); others can only be gaps. The degree k + p equals the
    // sum of all multiplicity bounds, so every allowed term covers the motif
    // exactly and uses exactly p gap vertices.
    auto circuit = BranchingWalkCircuit(
        g, degree, [&](Circuit& c, VertexId v) -> std::optional<GateId> {
          const bool motif_colored = mu[g.color(v)] > 0;
          if (p == 0) {
            if (!motif_colored) return std::nullopt;
            return c.NewInput(v);
          }
          const GateId y = c.NewInput(GapVar(g, v));
          if (!motif_colored) return y;
          const GateId x = c.NewInput(v);
          return c.NewAdd({x, y});
        });

    Verdict verdict;
    if (!circuit) {
      verdict = NoWithoutTrials(step, mult, degree);
    } else {
      CmldInstance inst;
      inst.circuit = std::move(*circuit);
      inst.var_color = VertexVarColors(g);
      inst.multiplicity = std::move(mult);
      inst.k = degree;
      verdict = SolveCmld(inst, step);
    }
    result.trials_run += verdict.trials_run;
    result.steps.push_back(verdict);
    if (verdict.yes) {
      result.value = p;
      break;
    }
  }
  return result;
}

SweepResult MinCc(const ColoredGraph& g, const Motif& m,
                  const SolveOptions& options) {
  SweepResult result;
  int missing = 0;
  const std::vector<int> mu = ResolveMotif(g, m, &missing);
  const int k = m.size();
  if (missing > 0) return result;

  for (int q = 1; q <= k; ++q) {
    const SolveOptions step = StepOptions(options, static_cast<std::uint64_t>(q));
    Circuit c;
    std::vector<std::optional<GateId>> term(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (mu[g.color(v)] > 0) term[v] = c.NewInput(v);
    }
    const int part_max = k - q + 1;
    const WalkGates walk = BuildWalkGates(c, g, part_max, term);

    // Each part slot gets its own copy of sum_v B(v, i) so that permuting
    // equal-sized parts between slots yields distinct multiplier monomials.
    auto slot_sum = [&](int size) -> std::optional<GateId> {
      std::vector<GateId> roots;
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (walk[v][size]) roots.push_back(*walk[v][size]);
      }
      if (roots.empty()) return std::nullopt;
      return c.NewAdd(std::move(roots));
    };

    // parts[j]: q'-part decompositions of total size j (q' = slots so far).
    std::vector<std::optional<GateId>> parts(k + 1);
    for (int j = 1; j <= part_max; ++j) parts[j] = slot_sum(j);
    for (int slot = 2; slot <= q; ++slot) {
      std::vector<std::optional<GateId>> slot_gate(part_max + 1);
      for (int i = 1; i <= part_max; ++i) slot_gate[i] = slot_sum(i);
      std::vector<std::optional<GateId>> next(k + 1);
      for (int j = slot; j <= k; ++j) {
        std::vector<GateId> terms;
        for (int i = 1; i <= part_max && j - i >= slot - 1; ++i) {
          if (parts[j - i] && slot_gate[i]) {
            terms.push_back(c.NewMul(*parts[j - i], *slot_gate[i]));
          }
        }
        if (!terms.empty()) next[j] = c.NewAdd(std::move(terms));
      }
      parts = std::move(next);
    }

    Verdict verdict;
    if (!parts[k]) {
      verdict = NoWithoutTrials(step, mu, k);
    } else {
      c.SetOutput(*parts[k]);
      CmldInstance inst;
      inst.circuit = std::move(c);
      inst.var_color = VertexVarColors(g);
      inst.multiplicity = mu;
      inst.k = k;
      verdict = SolveCmld(inst, step);
    }
    result.trials_run += verdict.trials_run;
    result.steps.push_back(verdict);
    if (verdict.yes) {
      result.value = q;
      break;
    }
  }
  return result;
}

SubstituteResult MinSubstitute(const ColoredGraph& g, const Motif& m,
                               const SolveOptions& options) {
  const int k = m.size();
  if (k > options.max_substitute_degree) {
    throw ResourceError("motif size " + std::to_string(k) +
                        " exceeds the configured maximum " +
                        std::to_string(options.max_substitute_degree) +
                        " for min-substitute");
  }
  const std::vector<int> mu = ResolveMotif(g, m);
  const std::size_t n = g.num_vertices();

  SubstituteResult result;
  result.seed = options.seed;
  result.field_bits = ResolveFieldBits(options, k);
  // The upper coordinates survive with the motif's worst-grouping
  // probability times 1/4; the independent lower coordinates add another
  // factor 1/4.
  // Planned on the motif itself: colors absent from the graph still bound
  // the group sizes of the x-part.
  std::vector<int> motif_mu;
  for (const auto& [color, count] : m.entries) motif_mu.push_back(count);
  result.plan = PlanRepetitions(motif_mu, k, options.delta, 1.0 / 16.0);

  // Terminal a1 x_v + a2 y_v; vertices colored outside the motif can only be
  // substitutions.
  auto built = BranchingWalkCircuit(
      g, k, [&](Circuit& c, VertexId v) -> std::optional<GateId> {
        const GateId y = c.NewInput(GapVar(g, v));
        if (mu[g.color(v)] == 0) return c.NewAdd({y});
        const GateId x = c.NewInput(v);
        return c.NewAdd({x, y});
      });
  if (!built) return result;
  const Circuit circuit = std::move(*built);

  const FieldContext field(result.field_bits);
  const ZPolyRing ring(field, k);
  const int dim = 2 * k;
  const std::int64_t trials =
      options.max_trials > 0 ? options.max_trials : result.plan.trials;
  std::vector<std::optional<int>> best(static_cast<std::size_t>(trials));

  auto trial = [&](std::int64_t t) {
    Rng rng = MakeStream(options.seed, static_cast<std::uint64_t>(t));
    const SubspaceFamily family = SampleSubspaces(mu, k, rng);
    std::vector<GroupVector> upper(n);
    for (VertexId v = 0; v < n; ++v) {
      if (mu[g.color(v)] == 0) continue;
      const GroupVector s = SampleVector(family, g.color(v), rng);
      upper[v] = GroupVector{dim, s.bits << k};
    }
    std::vector<GroupVector> lower(n);
    for (VertexId v = 0; v < n; ++v) {
      lower[v] = GroupVector{dim, static_cast<std::uint32_t>(RandomBits(rng, k))};
    }
    const EdgeMultipliers mult = Extend(circuit, field, rng);

    std::vector<std::optional<GroupAlgebraElement<ZPolyRing>>> values(
        circuit.num_vars());
    const ZPoly z = ring.Monomial(1, FieldElement{1});
    for (VarId x : circuit.Variables()) {
      if (x < n) {
        values[x] = MulByPair(ring, FromPair(ring, upper[x]), lower[x]);
      } else {
        GroupAlgebraElement<ZPolyRing> e(ring, dim);
        ring.AddTo(e[0], z);
        ring.AddTo(e[lower[x - n].bits], z);
        values[x] = std::move(e);
      }
    }
    const auto out = Evaluate<ZPolyRing>(circuit, ring, mult, values);
    std::optional<int> low;
    for (const ZPoly& coeff : out.coeffs()) {
      if (auto d = MinNonzeroDegree(coeff); d && (!low || *d < *low)) low = d;
    }
    best[static_cast<std::size_t>(t)] = low;
    return low == 0;
  };

  const auto zero_hit = RunTrials(trials, options.threads, trial);
  if (zero_hit) {
    result.p = 0;
    result.trials_run = *zero_hit + 1;
    return result;
  }
  for (const auto& b : best) {
    if (b && (!result.p || *b < *result.p)) result.p = b;
  }
  result.trials_run = trials;
  return result;
}

}  // namespace cmld
