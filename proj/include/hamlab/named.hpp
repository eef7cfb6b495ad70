// Copyright 2026 The hamlab Authors
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

// Named graphs with fixed vertex and edge numbering.

#pragma once

#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Outer 5-cycle 0..4 (edges 0-4), inner pentagram on 5..9 (edges 5-9) and
/// spokes i -- i+5 (edges 10-14).
inline MultiGraph petersen() {
  MultiGraph g = MultiGraph::with_vertices(10);
  for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
  for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);
  return g;
}

/// 8-cycle 0..7 (edges 0-7) plus the antipodal chords i -- i+4 (edges 8-11).
inline MultiGraph wagner() {
  MultiGraph g = MultiGraph::with_vertices(8);
  for (int i = 0; i < 8; ++i) g.add_edge(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) g.add_edge(i, i + 4);
  return g;
}

inline MultiGraph complete_graph(int n) {
  MultiGraph g = MultiGraph::with_vertices(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline MultiGraph cycle_graph(int n) {
  MultiGraph g = MultiGraph::with_vertices(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline MultiGraph path_graph(int n) {
  MultiGraph g = MultiGraph::with_vertices(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

/// K_{1,k} with center 0.
inline MultiGraph star_graph(int k) {
  MultiGraph g = MultiGraph::with_vertices(k + 1);
  for (int i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

/// Complete multipartite graph; parts get consecutive vertex ids in order.
inline MultiGraph complete_multipartite(const std::vector<int>& sizes) {
  std::vector<int> part;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (int i = 0; i < sizes[p]; ++i) part.push_back(static_cast<int>(p));
  MultiGraph g = MultiGraph::with_vertices(static_cast<int>(part.size()));
  for (std::size_t u = 0; u < part.size(); ++u)
    for (std::size_t v = u + 1; v < part.size(); ++v)
      if (part[u] != part[v]) g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

}  // namespace hamlab
