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

// Random desk-sized motif instances, shared by the self-test and the test
// suites.

#include "cmld/graph.h"
#include "cmld/rng.h"

namespace cmld {

struct MotifInstance {
  ColoredGraph graph;
  Motif motif;
};

struct RandomInstanceParams {
  int min_vertices = 4;
  int max_vertices = 12;
  int min_k = 2;
  int max_k = 6;
  int min_colors = 2;
  int max_colors = 4;
  double min_edge_prob = 0.15;
  double max_edge_prob = 0.45;
  // Probability that the motif is read off a random connected set, which
  // makes yes-instances common.
  double planted_prob = 0.5;
};

// Vertices are labeled v0, v1, ...; colors c0, c1, ... .
MotifInstance RandomMotifInstance(Rng& rng, const RandomInstanceParams& p);

}  // namespace cmld
