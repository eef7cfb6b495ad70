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

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

/// Small multigraph used as a (not necessarily induced) subgraph pattern.
struct PatternGraph {
  std::string name;
  MultiGraph graph;
};

namespace patterns {

/// T1: K4 minus one edge.
inline PatternGraph diamond() {
  MultiGraph g = MultiGraph::with_vertices(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  return {"T1", g};
}

/// T2: triangle with one edge doubled.
inline PatternGraph multitriangle() {
  MultiGraph g = MultiGraph::with_vertices(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  return {"T2", g};
}

/// T3: two vertices joined by three parallel edges.
inline PatternGraph triple_edge() {
  MultiGraph g = MultiGraph::with_vertices(2);
  for (int i = 0; i < 3; ++i) g.add_edge(0, 1);
  return {"T3", g};
}

inline PatternGraph claw() {
  MultiGraph g = MultiGraph::with_vertices(4);
  for (int i = 1; i <= 3; ++i) g.add_edge(0, i);
  return {"claw", g};
}

}  // namespace patterns

struct Embedding {
  std::map<VertexId, VertexId> vertex_map;  // pattern vertex -> host vertex
  std::map<EdgeId, EdgeId> edge_map;        // pattern edge -> host edge
};

/// Injective vertex map carrying pattern edges onto distinct host edges,
/// respecting multiplicity. Plain backtracking.
inline std::optional<Embedding> find_subgraph(const MultiGraph& host, const PatternGraph& pattern) {
  const DenseMultigraph p(pattern.graph);
  const DenseMultigraph h(host);
  if (p.n() > 5) throw InputError("patterns are limited to 5 vertices");
  if (p.n() > h.n()) return std::nullopt;

  auto mult_matrix = [](const DenseMultigraph& d) {
    std::vector<std::vector<int>> m(d.n(), std::vector<int>(d.n(), 0));
    for (auto [a, b] : d.ends) {
      ++m[a][b];
      if (a != b) ++m[b][a];
    }
    return m;
  };
  const auto pm = mult_matrix(p);
  const auto hm = mult_matrix(h);

  std::vector<int> image(p.n(), -1);
  std::vector<char> used(h.n(), 0);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == p.n()) return true;
    for (int x = 0; x < h.n(); ++x) {
      if (used[x]) continue;
      bool ok = pm[i][i] <= hm[x][x];
      for (int j = 0; j < i && ok; ++j) ok = pm[i][j] <= hm[x][image[j]];
      if (!ok) continue;
      image[i] = x;
      used[x] = 1;
      if (self(self, i + 1)) return true;
      used[x] = 0;
    }
    image[i] = -1;
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  Embedding out;
  for (int i = 0; i < p.n(); ++i) out.vertex_map[p.vertex_id[i]] = h.vertex_id[image[i]];
  std::vector<char> taken(h.m(), 0);
  for (int pe = 0; pe < p.m(); ++pe) {
    const int a = image[p.ends[pe].first];
    const int b = image[p.ends[pe].second];
    for (int he = 0; he < h.m(); ++he) {
      if (taken[he]) continue;
      auto [x, y] = h.ends[he];
      if ((x == a && y == b) || (x == b && y == a)) {
        taken[he] = 1;
        out.edge_map[p.edge_id[pe]] = h.edge_id[he];
        break;
      }
    }
  }
  return out;
}

}  // namespace hamlab
