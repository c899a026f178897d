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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cmld/assignment.h"

namespace cmld {

using VertexId = std::uint32_t;

// Simple undirected vertex-colored graph. Vertex and color labels are
// strings mapped to dense ids in order of first appearance.
class ColoredGraph {
 public:
  // Throws InputError if the label is already used.
  VertexId AddVertex(const std::string& label, const std::string& color);
  // Throws InputError for self-loops, duplicate edges and unknown ids.
  void AddEdge(VertexId u, VertexId v);

  std::size_t num_vertices() const { return color_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t num_colors() const { return color_labels_.size(); }

  const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
  ColorId color(VertexId v) const { return color_[v]; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::string& color_label(ColorId c) const { return color_labels_[c]; }
  bool HasEdge(VertexId u, VertexId v) const;

  std::optional<VertexId> FindVertex(std::string_view label) const;
  std::optional<ColorId> FindColor(std::string_view label) const;

  // Edges (u, v) with u < v, in insertion order.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edge_list_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<ColorId> color_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<std::string> color_labels_;
  std::unordered_map<std::string, VertexId> vertex_ids_;
  std::unordered_map<std::string, ColorId> color_ids_;
  std::vector<std::pair<VertexId, VertexId>> edge_list_;
  std::size_t num_edges_ = 0;
};

// A multiset of colors, as (color label, multiplicity >= 1) in file order.
struct Motif {
  std::vector<std::pair<std::string, int>> entries;

  // Sum of multiplicities.
  int size() const;
  // Multiplicity of the label, 0 if absent.
  int multiplicity(std::string_view color) const;
};

// mu per graph color id (0 for graph colors outside the motif). `missing`
// receives the total multiplicity of motif colors that no vertex carries.
std::vector<int> ResolveMotif(const ColoredGraph& g, const Motif& m,
                              int* missing = nullptr);

// Graph file:
//   n m
//   <vertex_label> <color_label>     (n lines)
//   <u_label> <v_label>              (m lines)
// '#' starts a comment; blank lines are ignored. Errors carry line numbers.
ColoredGraph ParseGraph(std::string_view text);
std::string FormatGraph(const ColoredGraph& g);

// Motif file: one "<color_label> <multiplicity>" per line, at least one.
Motif ParseMotif(std::string_view text);
std::string FormatMotif(const Motif& m);

// Coloring of circuit variables: one "<variable> <color_label>" per line.
using Coloring = std::vector<std::pair<std::string, std::string>>;
Coloring ParseColoring(std::string_view text);
std::string FormatColoring(const Coloring& c);

}  // namespace cmld
