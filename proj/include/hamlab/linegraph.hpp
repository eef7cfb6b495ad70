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

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/hypergraph.hpp"
#include "hamlab/structure.hpp"

namespace hamlab {

struct LineCorrespondence {
  std::map<EdgeId, int> forward;  // edge of H -> vertex of L(H)
  std::vector<EdgeId> backward;   // vertex of L(H) -> edge of H
};

struct LineGraph {
  SimpleGraph graph;
  LineCorrespondence map;
};

/// L(H): vertex i is the i-th edge of h in id order; adjacency = shared endpoint.
inline LineGraph line_graph(const MultiGraph& h) {
  if (h.num_edges() == 0) throw InputError("line graph of an edgeless graph");
  const DenseMultigraph d(h);
  LineGraph out{SimpleGraph(d.m()), {}};
  for (int i = 0; i < d.m(); ++i) {
    out.map.forward[d.edge_id[i]] = i;
    out.map.backward.push_back(d.edge_id[i]);
    for (int j = i + 1; j < d.m(); ++j)
      if (d.edge_ends_mask(i) & d.edge_ends_mask(j)) out.graph.add_edge(i, j);
  }
  return out;
}

/// L(H) of a hypergraph: vertex i is hyperedge i; adjacency = intersection.
inline SimpleGraph line_graph_h3(const Hypergraph3& hg) {
  if (hg.size() == 0) throw InputError("line graph of a hypergraph without hyperedges");
  SimpleGraph g(hg.size());
  for (int i = 0; i < hg.size(); ++i)
    for (int j = i + 1; j < hg.size(); ++j)
      if (hg.intersects(i, j)) g.add_edge(i, j);
  return g;
}

inline bool is_simplicial(const SimpleGraph& g, int v) { return g.is_clique(g.neighbors(v)); }

inline Mask simplicial_vertices(const SimpleGraph& g) {
  Mask out = 0;
  for (int v = 0; v < g.n(); ++v)
    if (is_simplicial(g, v)) out |= bit(v);
  return out;
}

/// Edges of h with an endpoint of degree 1.
inline std::vector<EdgeId> pendant_edges(const MultiGraph& h) {
  std::vector<EdgeId> out;
  for (const Edge& e : h.edges())
    if (!e.is_loop() && (h.degree(e.u) == 1 || h.degree(e.v) == 1)) out.push_back(e.id);
  return out;
}

namespace detail {

/// Clique cover search: every edge of g must lie in some clique and vertex v
/// in at most cap[v] cliques. The initial cliques are kept.
class CliqueCoverSearch {
 public:
  CliqueCoverSearch(const SimpleGraph& g, std::vector<Mask> cliques, std::vector<int> cap)
      : g_(g), cliques_(std::move(cliques)), cap_(std::move(cap)), member_(g.n(), 0) {
    for (Mask c : cliques_) for_each_bit(c, [&](int v) { ++member_[v]; });
    edges_ = g.edges();
  }

  bool run() { return step(0); }
  const std::vector<Mask>& cliques() const { return cliques_; }
  const std::vector<int>& membership() const { return member_; }

  /// Calls `accept` on every complete cover; stops when it returns true.
  template <class Accept>
  bool run_all(Accept accept) {
    accept_ = [&](const std::vector<Mask>& c) { return accept(c); };
    return step(0);
  }

 private:
  bool covered(int u, int v) const {
    for (Mask c : cliques_)
      if (((c >> u) & 1) && ((c >> v) & 1)) return true;
    return false;
  }
  bool joinable(int v, Mask c) const { return member_[v] < cap_[v] && (g_.neighbors(v) & c) == c; }

  bool step(std::size_t i) {
    while (i < edges_.size() && covered(edges_[i].first, edges_[i].second)) ++i;
    if (i == edges_.size()) return accept_ ? accept_(cliques_) : true;
    const auto [u, v] = edges_[i];
    const Mask both = bit(u) | bit(v);
    for (std::size_t k = 0; k < cliques_.size(); ++k) {
      const Mask c = cliques_[k];
      const bool has_u = (c >> u) & 1, has_v = (c >> v) & 1;
      int add = -1;
      if (has_u && joinable(v, c)) add = v;
      else if (has_v && joinable(u, c)) add = u;
      if (add >= 0) {
        cliques_[k] |= bit(add);
        ++member_[add];
        if (step(i + 1)) return true;
        --member_[add];
        cliques_[k] = c;
      } else if (!has_u && !has_v && joinable(u, c) && joinable(v, c | bit(u))) {
        cliques_[k] |= both;
        ++member_[u], ++member_[v];
        if (step(i + 1)) return true;
        --member_[u], --member_[v];
        cliques_[k] = c;
      }
    }
    if (member_[u] < cap_[u] && member_[v] < cap_[v]) {
      cliques_.push_back(both);
      ++member_[u], ++member_[v];
      if (step(i + 1)) return true;
      --member_[u], --member_[v];
      cliques_.pop_back();
    }
    return false;
  }

  const SimpleGraph& g_;
  std::vector<Mask> cliques_;
  std::vector<int> cap_;
  std::vector<int> member_;
  std::vector<std::pair<int, int>> edges_;
  std::function<bool(const std::vector<Mask>&)> accept_;
};

/// Multigraph with one vertex per clique and one leaf per vertex in a single
/// clique; vertex v of g becomes edge id v.
inline MultiGraph assemble_preimage(const SimpleGraph& g, const std::vector<Mask>& cliques) {
  MultiGraph h = MultiGraph::with_vertices(static_cast<int>(cliques.size()));
  std::vector<std::vector<int>> at(g.n());
  for (std::size_t k = 0; k < cliques.size(); ++k)
    for_each_bit(cliques[k], [&](int v) { at[v].push_back(static_cast<int>(k)); });
  for (int v = 0; v < g.n(); ++v) {
    while (at[v].size() < 2) at[v].push_back(h.add_vertex());
    h.add_edge_with_id(v, at[v][0], at[v][1]);
  }
  return h;
}

}  // namespace detail

/// The preimage H with L(H) = G in which the simplicial vertices of G are
/// exactly the pendant edges of H. Edge id v of H is vertex v of G.
/// Disconnected inputs are handled componentwise.
inline MultiGraph preimage(const SimpleGraph& g) {
  if (g.n() == 0) throw InputError("preimage of the empty graph");
  if (const auto claw = find_induced_claw(g)) {
    throw NotLineGraph("induced claw centered at " + std::to_string(claw->center) + " with leaves " +
                       std::to_string(claw->leaves[0]) + "," + std::to_string(claw->leaves[1]) + "," +
                       std::to_string(claw->leaves[2]));
  }
  const Mask simp = simplicial_vertices(g);
  std::vector<Mask> cliques;
  std::vector<int> cap(g.n(), 2);
  for_each_bit(simp, [&](int v) {
    const Mask c = g.neighbors(v) | bit(v);
    if (std::find(cliques.begin(), cliques.end(), c) == cliques.end()) cliques.push_back(c);
    cap[v] = 1;
  });
  detail::CliqueCoverSearch search(g, cliques, cap);
  for (int v = 0; v < g.n(); ++v)
    if (search.membership()[v] > cap[v])
      throw NotLineGraph("vertex " + std::to_string(v) + " lies in too many simplicial cliques");
  if (!search.run()) throw NotLineGraph("no clique cover with every vertex in at most two cliques");
  return detail::assemble_preimage(g, search.cliques());
}

struct KrauszCover {
  std::vector<std::vector<int>> cliques;  // vertex lists of g
  std::optional<Hypergraph3> hypergraph;  // r = 3 only
};

/// Clique system covering every vertex and edge of g with each vertex in at
/// most r cliques. For r = 3 the cliques become hypergraph vertices (padded
/// with singleton cliques so every hyperedge has at least two vertices) and
/// vertex v of g becomes hyperedge v.
inline std::optional<KrauszCover> krausz_cover(const SimpleGraph& g, int r) {
  if (g.n() > 12) throw BoundExceeded("clique cover search limited to n <= 12");
  if (r < 1) throw InputError("clique membership bound must be positive");
  detail::CliqueCoverSearch search(g, {}, std::vector<int>(g.n(), r));
  if (!search.run()) return std::nullopt;
  std::vector<Mask> cliques = search.cliques();
  std::vector<int> member = search.membership();
  const int pad_to = r == 3 ? 2 : 1;
  for (int v = 0; v < g.n(); ++v)
    for (; member[v] < pad_to; ++member[v]) cliques.push_back(bit(v));
  KrauszCover out;
  for (Mask c : cliques) {
    out.cliques.emplace_back();
    for_each_bit(c, [&](int v) { out.cliques.back().push_back(v); });
  }
  if (r == 3) {
    Hypergraph3 h(static_cast<int>(cliques.size()));
    for (int v = 0; v < g.n(); ++v) {
      std::vector<int> e;
      for (std::size_t k = 0; k < cliques.size(); ++k)
        if ((cliques[k] >> v) & 1) e.push_back(static_cast<int>(k));
      h.add(e);
    }
    out.hypergraph = std::move(h);
  }
  return out;
}

}  // namespace hamlab
