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

#include "cmld/oracle.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "cmld/errors.h"

namespace cmld {
namespace {

void CheckSize(const ColoredGraph& g) {
  if (g.num_vertices() > kMaxOracleVertices) {
    throw ResourceError("oracle limited to " +
                        std::to_string(kMaxOracleVertices) + " vertices");
  }
}

std::vector<std::uint64_t> NeighborMasks(const ColoredGraph& g) {
  std::vector<std::uint64_t> mask(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId u : g.neighbors(v)) mask[v] |= std::uint64_t{1} << u;
  }
  return mask;
}

class Esu {
 public:
  Esu(const ColoredGraph& g, int k,
      const std::function<void(std::span<const VertexId>)>& visit)
      : nbr_(NeighborMasks(g)), k_(k), visit_(visit) {}

  void Run() {
    for (VertexId v = 0; v < nbr_.size(); ++v) {
      const std::uint64_t above = ~((std::uint64_t{2} << v) - 1);
      above_ = above;
      Extend(std::uint64_t{1} << v, nbr_[v] | (std::uint64_t{1} << v),
             nbr_[v] & above, 1);
    }
  }

 private:
  // closed: sub and all neighbors of sub.
  void Extend(std::uint64_t sub, std::uint64_t closed, std::uint64_t ext,
              int size) {
    if (size == k_) {
      std::vector<VertexId> set;
      for (std::uint64_t s = sub; s != 0; s &= s - 1) {
        set.push_back(static_cast<VertexId>(std::countr_zero(s)));
      }
      visit_(set);
      return;
    }
    while (ext != 0) {
      const int w = std::countr_zero(ext);
      ext &= ext - 1;
      const std::uint64_t exclusive = nbr_[w] & ~closed & above_;
      Extend(sub | (std::uint64_t{1} << w), closed | nbr_[w], ext | exclusive,
             size + 1);
    }
  }

  std::vector<std::uint64_t> nbr_;
  int k_;
  std::uint64_t above_ = 0;
  const std::function<void(std::span<const VertexId>)>& visit_;
};

std::map<ColorId, int> ColorCounts(const ColoredGraph& g,
                                   std::span<const VertexId> set) {
  std::map<ColorId, int> count;
  for (VertexId v : set) ++count[g.color(v)];
  return count;
}

}  // namespace

void EnumConnectedSets(
    const ColoredGraph& g, int k,
    const std::function<void(std::span<const VertexId>)>& visit) {
  CheckSize(g);
  if (k < 1) throw std::invalid_argument("set size must be positive");
  if (k > static_cast<int>(g.num_vertices())) return;
  Esu(g, k, visit).Run();
}

std::vector<std::vector<VertexId>> ConnectedSets(const ColoredGraph& g, int k) {
  std::vector<std::vector<VertexId>> sets;
  EnumConnectedSets(g, k, [&](std::span<const VertexId> s) {
    sets.emplace_back(s.begin(), s.end());
  });
  return sets;
}

int CountComponents(const ColoredGraph& g, std::span<const VertexId> vertices) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : vertices) in[v] = 1;
  std::vector<char> seen(g.num_vertices(), 0);
  int components = 0;
  for (VertexId s : vertices) {
    if (seen[s]) continue;
    ++components;
    std::vector<VertexId> stack = {s};
    seen[s] = 1;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : g.neighbors(v)) {
        if (in[u] && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
  }
  return components;
}

bool BruteGraphMotif(const ColoredGraph& g, const Motif& m) {
  return BruteMinSubstitute(g, m) == 0;
}

bool BruteMultisetMotif(const ColoredGraph& g, const Motif& m, int k) {
  const std::vector<int> mu = ResolveMotif(g, m);
  bool found = false;
  EnumConnectedSets(g, k, [&](std::span<const VertexId> set) {
    if (found) return;
    for (const auto& [c, count] : ColorCounts(g, set)) {
      if (count > mu[c]) return;
    }
    found = true;
  });
  return found;
}

std::optional<int> BruteMinAdd(const ColoredGraph& g, const Motif& m,
                               int max_p) {
  int missing = 0;
  const std::vector<int> mu = ResolveMotif(g, m, &missing);
  if (missing > 0) return std::nullopt;
  const int k = m.size();
  for (int p = 0; p <= max_p && k + p <= static_cast<int>(g.num_vertices());
       ++p) {
    bool found = false;
    EnumConnectedSets(g, k + p, [&](std::span<const VertexId> set) {
      if (found) return;
      const auto count = ColorCounts(g, set);
      for (ColorId c = 0; c < mu.size(); ++c) {
        auto it = count.find(c);
        if (mu[c] > (it == count.end() ? 0 : it->second)) return;
      }
      found = true;
    });
    if (found) return p;
  }
  return std::nullopt;
}

std::optional<int> BruteMinCc(const ColoredGraph& g, const Motif& m) {
  CheckSize(g);
  int missing = 0;
  const std::vector<int> mu = ResolveMotif(g, m, &missing);
  if (missing > 0) return std::nullopt;

  std::vector<std::vector<VertexId>> by_color(g.num_colors());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    by_color[g.color(v)].push_back(v);
  }
  std::vector<ColorId> colors;
  for (ColorId c = 0; c < mu.size(); ++c) {
    if (mu[c] > 0) colors.push_back(c);
  }

  std::optional<int> best;
  std::vector<VertexId> chosen;
  // Choose exactly mu(c) vertices of each motif color, colors in order.
  std::function<void(std::size_t, std::size_t, int)> choose =
      [&](std::size_t ci, std::size_t from, int left) {
        if (ci == colors.size()) {
          const int q = CountComponents(g, chosen);
          if (!best || q < *best) best = q;
          return;
        }
        const auto& pool = by_color[colors[ci]];
        if (left == 0) {
          const std::size_t next = ci + 1;
          choose(next, 0, next < colors.size() ? mu[colors[next]] : 0);
          return;
        }
        for (std::size_t i = from; i + left <= pool.size(); ++i) {
          chosen.push_back(pool[i]);
          choose(ci, i + 1, left - 1);
          chosen.pop_back();
        }
      };
  if (!colors.empty()) choose(0, 0, mu[colors[0]]);
  return best;
}

std::optional<int> BruteMinSubstitute(const ColoredGraph& g, const Motif& m) {
  const std::vector<int> mu = ResolveMotif(g, m);
  std::optional<int> best;
  EnumConnectedSets(g, m.size(), [&](std::span<const VertexId> set) {
    int excess = 0;
    for (const auto& [c, count] : ColorCounts(g, set)) {
      excess += std::max(0, count - mu[c]);
    }
    if (!best || excess < *best) best = excess;
  });
  return best;
}

MonomialMap ExpandMultilinear(const Circuit& c, int cap,
                              std::span<const ColorId> var_color,
                              std::span<const int> multiplicity,
                              std::size_t budget) {
  using Terms = std::map<std::vector<VarId>, std::uint64_t>;
  constexpr std::uint64_t kSaturate = std::numeric_limits<std::uint64_t>::max();
  auto add_count = [](std::uint64_t a, std::uint64_t b) {
    return a > kSaturate - b ? kSaturate : a + b;
  };
  auto mul_count = [](std::uint64_t a, std::uint64_t b) {
    return (b != 0 && a > kSaturate / b) ? kSaturate : a * b;
  };
  auto allowed = [&](const std::vector<VarId>& mono) {
    if (multiplicity.empty()) return true;
    std::map<ColorId, int> count;
    for (VarId x : mono) {
      const ColorId col = var_color[x];
      if (col >= multiplicity.size() || ++count[col] > multiplicity[col]) {
        return false;
      }
    }
    return true;
  };
  auto check_budget = [&](const Terms& t) {
    if (t.size() > budget) {
      throw ResourceError("symbolic expansion exceeds monomial budget");
    }
  };

  const auto gates = c.gates();
  std::vector<Terms> value(gates.size());
  for (GateId g = 0; g <= c.output(); ++g) {
    Terms out;
    if (const auto* in = std::get_if<InputGate>(&gates[g])) {
      std::vector<VarId> mono = {in->var};
      if (cap >= 1 && allowed(mono)) out.emplace(std::move(mono), 1);
    } else if (const auto* add = std::get_if<AddGate>(&gates[g])) {
      for (GateId ch : add->children) {
        for (const auto& [mono, n] : value[ch]) {
          auto& slot = out[mono];
          slot = add_count(slot, n);
        }
      }
    } else {
      const auto& mul = std::get<MulGate>(gates[g]);
      for (const auto& [a, na] : value[mul.left]) {
        for (const auto& [b, nb] : value[mul.right]) {
          if (static_cast<int>(a.size() + b.size()) > cap) continue;
          std::vector<VarId> mono;
          mono.reserve(a.size() + b.size());
          std::merge(a.begin(), a.end(), b.begin(), b.end(),
                     std::back_inserter(mono));
          if (std::adjacent_find(mono.begin(), mono.end()) != mono.end()) {
            continue;
          }
          if (!allowed(mono)) continue;
          auto& slot = out[mono];
          slot = add_count(slot, mul_count(na, nb));
        }
      }
    }
    check_budget(out);
    value[g] = std::move(out);
  }
  return MonomialMap{std::move(value[c.output()])};
}

bool BruteMultilinear(const Circuit& c, std::span<const ColorId> var_color,
                      std::span<const int> multiplicity, int k,
                      std::size_t budget) {
  const MonomialMap map =
      ExpandMultilinear(c, k, var_color, multiplicity, budget);
  for (const auto& [mono, n] : map.terms) {
    if (static_cast<int>(mono.size()) == k && n > 0) return true;
  }
  return false;
}

}  // namespace cmld
