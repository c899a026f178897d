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

// Small graphs and a 2^n subset-filter reference, independent of the
// connected-set enumerator in the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmld/graph.h"

namespace cmld::testing {

// Vertices are labeled v0, v1, ... with the given color labels.
inline ColoredGraph MakeGraph(const std::vector<std::string>& colors,
                              const std::vector<std::pair<int, int>>& edges) {
  ColoredGraph g;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    g.AddVertex("v" + std::to_string(i), colors[i]);
  }
  for (auto [u, v] : edges) {
    g.AddEdge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

inline Motif MakeMotif(std::vector<std::pair<std::string, int>> entries) {
  return Motif{std::move(entries)};
}

inline std::vector<VertexId> MaskVertices(std::uint32_t mask) {
  std::vector<VertexId> out;
  for (VertexId v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

inline int MaskComponents(const ColoredGraph& g, std::uint32_t mask) {
  int comps = 0;
  std::uint32_t left = mask;
  while (left != 0) {
    ++comps;
    std::uint32_t frontier = left & (~left + 1);
    std::uint32_t seen = frontier;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (VertexId u : g.neighbors(static_cast<VertexId>(v))) {
        const std::uint32_t bit = 1u << u;
        if ((mask & bit) && !(seen & bit)) {
          seen |= bit;
          frontier |= bit;
        }
      }
    }
    left &= ~seen;
  }
  return comps;
}

inline std::map<std::string, int> MaskColorCounts(const ColoredGraph& g,
                                                  std::uint32_t mask) {
  std::map<std::string, int> counts;
  for (VertexId v : MaskVertices(mask)) ++counts[g.color_label(g.color(v))];
  return counts;
}

inline std::map<std::string, int> MotifCounts(const Motif& m) {
  std::map<std::string, int> counts;
  for (const auto& [c, mu] : m.entries) counts[c] += mu;
  return counts;
}

// Calls f(mask) for every nonempty vertex subset.
template <typename F>
void ForEachSubset(const ColoredGraph& g, F&& f) {
  const std::uint32_t n = static_cast<std::uint32_t>(g.num_vertices());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) f(mask);
}

inline bool FilterGraphMotif(const ColoredGraph& g, const Motif& m) {
  const auto want = MotifCounts(m);
  bool found = false;
  ForEachSubset(g, [&](std::uint32_t mask) {
    found = found || (MaskComponents(g, mask) == 1 && MaskColorCounts(g, mask) == want);
  });
  return found;
}

inline bool FilterMultisetMotif(const ColoredGraph& g, const Motif& m, int k) {
  const auto bound = MotifCounts(m);
  bool found = false;
  ForEachSubset(g, [&](std::uint32_t mask) {
    if (found || std::popcount(mask) != k || MaskComponents(g, mask) != 1) return;
    for (const auto& [c, n] : MaskColorCounts(g, mask)) {
      auto it = bound.find(c);
      if (it == bound.end() || n > it->second) return;
    }
    found = true;
  });
  return found;
}

inline std::optional<int> FilterMinAdd(const ColoredGraph& g, const Motif& m,
                                       int max_p) {
  const auto want = MotifCounts(m);
  std::optional<int> best;
  ForEachSubset(g, [&](std::uint32_t mask) {
    const int p = std::popcount(mask) - m.size();
    if (p < 0 || p > max_p || (best && p >= *best)) return;
    if (MaskComponents(g, mask) != 1) return;
    const auto have = MaskColorCounts(g, mask);
    for (const auto& [c, n] : want) {
      auto it = have.find(c);
      if (it == have.end() || it->second < n) return;
    }
    best = p;
  });
  return best;
}

inline std::optional<int> FilterMinCc(const ColoredGraph& g, const Motif& m) {
  const auto want = MotifCounts(m);
  std::optional<int> best;
  ForEachSubset(g, [&](std::uint32_t mask) {
    if (MaskColorCounts(g, mask) != want) return;
    const int q = MaskComponents(g, mask);
    if (!best || q < *best) best = q;
  });
  return best;
}

inline std::optional<int> FilterMinSubstitute(const ColoredGraph& g,
                                              const Motif& m) {
  const auto bound = MotifCounts(m);
  std::optional<int> best;
  ForEachSubset(g, [&](std::uint32_t mask) {
    if (std::popcount(mask) != m.size() || MaskComponents(g, mask) != 1) return;
    int p = 0;
    for (const auto& [c, n] : MaskColorCounts(g, mask)) {
      auto it = bound.find(c);
      p += std::max(0, n - (it == bound.end() ? 0 : it->second));
    }
    if (!best || p < *best) best = p;
  });
  return best;
}

}  // namespace cmld::testing
