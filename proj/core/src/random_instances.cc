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

#include "cmld/random_instances.h"

#include <algorithm>
#include <map>
#include <string>

namespace cmld {
namespace {

int UniformInt(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(UniformBelow(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace

MotifInstance RandomMotifInstance(Rng& rng, const RandomInstanceParams& p) {
  MotifInstance inst;
  const int n = UniformInt(rng, p.min_vertices, p.max_vertices);
  const int colors = UniformInt(rng, p.min_colors, p.max_colors);
  const double edge_prob =
      p.min_edge_prob + (p.max_edge_prob - p.min_edge_prob) * UniformUnit(rng);

  for (int v = 0; v < n; ++v) {
    const int c = UniformInt(rng, 0, colors - 1);
    inst.graph.AddVertex("v" + std::to_string(v), "c" + std::to_string(c));
  }
  for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
    for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) {
      if (UniformUnit(rng) < edge_prob) inst.graph.AddEdge(u, v);
    }
  }

  const int k = std::min(UniformInt(rng, p.min_k, p.max_k), n);
  std::map<std::string, int> counts;
  if (UniformUnit(rng) < p.planted_prob) {
    // Grow a random connected set; if it gets stuck, pad with random
    // vertices (the motif then need not occur).
    std::vector<VertexId> set = {static_cast<VertexId>(UniformBelow(rng, n))};
    std::vector<bool> in(n, false);
    in[set[0]] = true;
    while (static_cast<int>(set.size()) < k) {
      std::vector<VertexId> frontier;
      for (VertexId v : set) {
        for (VertexId u : inst.graph.neighbors(v)) {
          if (!in[u]) frontier.push_back(u);
        }
      }
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()),
                     frontier.end());
      VertexId next;
      if (!frontier.empty()) {
        next = frontier[UniformBelow(rng, frontier.size())];
      } else {
        do {
          next = static_cast<VertexId>(UniformBelow(rng, n));
        } while (in[next]);
      }
      in[next] = true;
      set.push_back(next);
    }
    for (VertexId v : set) ++counts[inst.graph.color_label(inst.graph.color(v))];
  } else {
    for (int i = 0; i < k; ++i) {
      ++counts["c" + std::to_string(UniformInt(rng, 0, colors - 1))];
    }
  }
  for (const auto& [color, mu] : counts) inst.motif.entries.emplace_back(color, mu);
  return inst;
}

}  // namespace cmld
