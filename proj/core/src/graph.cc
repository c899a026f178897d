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

#include "cmld/graph.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cmld/errors.h"

namespace cmld {

VertexId ColoredGraph::AddVertex(const std::string& label,
                                 const std::string& color) {
  const auto id = static_cast<VertexId>(labels_.size());
  if (!vertex_ids_.emplace(label, id).second) {
    throw InputError("duplicate vertex '" + label + "'");
  }
  auto [it, inserted] =
      color_ids_.try_emplace(color, static_cast<ColorId>(color_labels_.size()));
  if (inserted) color_labels_.push_back(color);
  labels_.push_back(label);
  color_.push_back(it->second);
  adj_.emplace_back();
  return id;
}

bool ColoredGraph::HasEdge(VertexId u, VertexId v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  const VertexId other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

void ColoredGraph::AddEdge(VertexId u, VertexId v) {
  if (u >= num_vertices() || v >= num_vertices()) {
    throw InputError("edge endpoint out of range");
  }
  if (u == v) throw InputError("self-loop at '" + labels_[u] + "'");
  if (HasEdge(u, v)) {
    throw InputError("duplicate edge '" + labels_[u] + "' - '" + labels_[v] +
                     "'");
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  edge_list_.emplace_back(std::min(u, v), std::max(u, v));
  ++num_edges_;
}

std::optional<VertexId> ColoredGraph::FindVertex(std::string_view label) const {
  auto it = vertex_ids_.find(std::string(label));
  if (it == vertex_ids_.end()) return std::nullopt;
  return it->second;
}

std::optional<ColorId> ColoredGraph::FindColor(std::string_view label) const {
  auto it = color_ids_.find(std::string(label));
  if (it == color_ids_.end()) return std::nullopt;
  return it->second;
}

int Motif::size() const {
  int total = 0;
  for (const auto& [color, mu] : entries) total += mu;
  return total;
}

int Motif::multiplicity(std::string_view color) const {
  for (const auto& [label, mu] : entries) {
    if (label == color) return mu;
  }
  return 0;
}

std::vector<int> ResolveMotif(const ColoredGraph& g, const Motif& m,
                              int* missing) {
  std::vector<int> mu(g.num_colors(), 0);
  int absent = 0;
  for (const auto& [label, count] : m.entries) {
    if (auto c = g.FindColor(label)) {
      mu[*c] += count;
    } else {
      absent += count;
    }
  }
  if (missing != nullptr) *missing = absent;
  return mu;
}

namespace {

// Splits text into (line number, whitespace-separated tokens) for every line
// that is not blank after removing a comment.
std::vector<std::pair<int, std::vector<std::string>>> Tokenize(
    std::string_view text, char comment) {
  std::vector<std::pair<int, std::vector<std::string>>> lines;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto c = line.find(comment); c != std::string_view::npos) {
      line = line.substr(0, c);
    }
    std::istringstream in{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  return lines;
}

long ParseCount(const std::string& tok, int line, const char* what) {
  long value = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0) {
    throw InputError(std::string("invalid ") + what + " '" + tok + "'", line);
  }
  return value;
}

void ExpectTokens(const std::pair<int, std::vector<std::string>>& line,
                  std::size_t n, const char* shape) {
  if (line.second.size() != n) {
    throw InputError(std::string("expected \"") + shape + "\"", line.first);
  }
}

}  // namespace

ColoredGraph ParseGraph(std::string_view text) {
  const auto lines = Tokenize(text, '#');
  if (lines.empty()) throw InputError("empty graph file");
  ExpectTokens(lines[0], 2, "n m");
  const long n = ParseCount(lines[0].second[0], lines[0].first, "vertex count");
  const long m = ParseCount(lines[0].second[1], lines[0].first, "edge count");
  if (static_cast<long>(lines.size()) - 1 != n + m) {
    const int at = lines.back().first;
    throw InputError("expected " + std::to_string(n) + " vertex lines and " +
                         std::to_string(m) + " edge lines, found " +
                         std::to_string(lines.size() - 1) + " lines",
                     at);
  }

  ColoredGraph g;
  for (long i = 1; i <= n; ++i) {
    ExpectTokens(lines[i], 2, "vertex_label color_label");
    try {
      g.AddVertex(lines[i].second[0], lines[i].second[1]);
    } catch (const InputError& e) {
      throw InputError(e.what(), lines[i].first);
    }
  }
  for (long i = n + 1; i <= n + m; ++i) {
    ExpectTokens(lines[i], 2, "u_label v_label");
    const auto& toks = lines[i].second;
    auto u = g.FindVertex(toks[0]);
    auto v = g.FindVertex(toks[1]);
    if (!u) throw InputError("unknown vertex '" + toks[0] + "'", lines[i].first);
    if (!v) throw InputError("unknown vertex '" + toks[1] + "'", lines[i].first);
    try {
      g.AddEdge(*u, *v);
    } catch (const InputError& e) {
      throw InputError(e.what(), lines[i].first);
    }
  }
  return g;
}

std::string FormatGraph(const ColoredGraph& g) {
  std::string out = std::to_string(g.num_vertices()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out += g.label(v) + " " + g.color_label(g.color(v)) + "\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u) + " " + g.label(v) + "\n";
  }
  return out;
}

Motif ParseMotif(std::string_view text) {
  Motif m;
  for (const auto& line : Tokenize(text, '#')) {
    ExpectTokens(line, 2, "color_label multiplicity");
    const long mu = ParseCount(line.second[1], line.first, "multiplicity");
    if (mu < 1) throw InputError("multiplicity must be positive", line.first);
    if (m.multiplicity(line.second[0]) > 0) {
      throw InputError("duplicate color '" + line.second[0] + "'", line.first);
    }
    m.entries.emplace_back(line.second[0], static_cast<int>(mu));
  }
  if (m.entries.empty()) throw InputError("motif has no colors");
  return m;
}

std::string FormatMotif(const Motif& m) {
  std::string out;
  for (const auto& [color, mu] : m.entries) {
    out += color + " " + std::to_string(mu) + "\n";
  }
  return out;
}

Coloring ParseColoring(std::string_view text) {
  Coloring c;
  for (const auto& line : Tokenize(text, '#')) {
    ExpectTokens(line, 2, "variable color_label");
    for (const auto& [var, color] : c) {
      if (var == line.second[0]) {
        throw InputError("duplicate variable '" + var + "'", line.first);
      }
    }
    c.emplace_back(line.second[0], line.second[1]);
  }
  return c;
}

std::string FormatColoring(const Coloring& c) {
  std::string out;
  for (const auto& [var, color] : c) out += var + " " + color + "\n";
  return out;
}

}  // namespace cmld
