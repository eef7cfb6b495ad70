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

#include <gtest/gtest.h>

#include <random>

#include "hamlab/canonical.hpp"
#include "hamlab/named.hpp"
#include "hamlab/structure.hpp"
#include "hamlab/subgraph.hpp"
#include "oracles.hpp"

namespace hamlab {
namespace {

TEST(MultiGraph, LoopCountsTwice) {
  MultiGraph g = MultiGraph::with_vertices(2);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  EXPECT_EQ(g.degree(0), 3);
  EXPECT_TRUE(g.has_loops());
  EXPECT_FALSE(g.is_simple());
  EXPECT_THROW(SimpleGraph::from_multigraph(g), InputError);
}

TEST(MultiGraph, EdgeIdsStable) {
  MultiGraph g = MultiGraph::with_vertices(3);
  const EdgeId a = g.add_edge(0, 1);
  const EdgeId b = g.add_edge(1, 2);
  g.remove_edge(a);
  const EdgeId c = g.add_edge(0, 2);
  EXPECT_EQ(g.edge(b).u, 1);
  EXPECT_NE(c, a);
  EXPECT_THROW(g.add_edge(0, 7), InputError);
}

TEST(Neighbors, SetSemantics) {
  EXPECT_EQ(neighbors(star_graph(3), 0), (std::set<VertexId>{1, 2, 3}));
  EXPECT_EQ(neighbors(cycle_graph(5), 2).size(), 2u);
  MultiGraph d = MultiGraph::with_vertices(2);
  d.add_edge(0, 1);
  d.add_edge(0, 1);
  EXPECT_EQ(neighbors(d, 0), (std::set<VertexId>{1}));
  MultiGraph l = MultiGraph::with_vertices(1);
  l.add_edge(0, 0);
  EXPECT_TRUE(neighbors(l, 0).empty());
  EXPECT_THROW(neighbors(d, 5), InputError);
}

TEST(VertexConnectivity, Examples) {
  EXPECT_TRUE(vertex_connectivity_at_least(SimpleGraph::from_multigraph(complete_graph(4)), 3).holds);
  const auto c5 = vertex_connectivity_at_least(SimpleGraph::from_multigraph(cycle_graph(5)), 3);
  EXPECT_FALSE(c5.holds);
  EXPECT_EQ(c5.cut.size(), 2u);
  EXPECT_TRUE(
      vertex_connectivity_at_least(SimpleGraph::from_multigraph(complete_multipartite({1, 2, 3})), 3).holds);
}

TEST(VertexConnectivity, AgreesWithBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + int(rng() % 7);
    const SimpleGraph g = oracle::random_graph(rng, n, 0.6);
    for (int k = 1; k <= 4; ++k) {
      const auto r = vertex_connectivity_at_least(g, k);
      ASSERT_EQ(r.holds, oracle::k_connected(g, k)) << "n=" << n << " k=" << k;
      if (!r.holds && !r.cut.empty()) {
        Mask removed = 0;
        for (int v : r.cut) removed |= bit(v);
        EXPECT_FALSE(oracle::connected_without(g, removed));
        EXPECT_LT(int(r.cut.size()), k);
      }
    }
  }
}

TEST(EssentialEdgeConnectivity, Examples) {
  EXPECT_TRUE(is_essentially_k_edge_connected(star_graph(5), 3).holds);
  const auto p4 = is_essentially_k_edge_connected(path_graph(4), 2);
  EXPECT_FALSE(p4.holds);
  EXPECT_EQ(p4.cut, (std::vector<EdgeId>{1}));
  EXPECT_TRUE(is_essentially_k_edge_connected(petersen(), 3).holds);
  EXPECT_THROW(is_essentially_k_edge_connected(path_graph(3), 3), InputError);
}

TEST(EssentialEdgeConnectivity, PetersenBruteForce) {
  EXPECT_TRUE(oracle::essentially_k_edge_connected(petersen(), 3));
}

TEST(EssentialEdgeConnectivity, AgreesWithBruteForce) {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 2 + int(rng() % 6);
    const int m = 3 + int(rng() % 6);
    const MultiGraph h = oracle::random_multigraph(rng, n, m, 2);
    if (!is_connected(h)) continue;
    for (int k = 1; k <= 3; ++k) {
      if (h.num_edges() < k + 1) continue;
      const auto r = is_essentially_k_edge_connected(h, k);
      ASSERT_EQ(r.holds, oracle::essentially_k_edge_connected(h, k));
      if (!r.holds) {
        EXPECT_LT(int(r.cut.size()), k);
        std::vector<char> removed(h.num_edges());
        for (EdgeId e : r.cut)
          for (int i = 0; i < h.num_edges(); ++i)
            if (h.edges()[i].id == e) removed[i] = 1;
        EXPECT_GE(oracle::nontrivial_components(h, removed), 2);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(EdgeConnectivity, Basic) {
  EXPECT_TRUE(edge_connectivity_at_least(petersen(), 3).holds);
  EXPECT_FALSE(edge_connectivity_at_least(petersen(), 4).holds);
  EXPECT_FALSE(edge_connectivity_at_least(cycle_graph(6), 3).holds);
}

TEST(Claw, Examples) {
  const auto star = find_induced_claw(SimpleGraph::from_multigraph(star_graph(3)));
  ASSERT_TRUE(star);
  EXPECT_EQ(star->center, 0);
  EXPECT_TRUE(find_induced_claw(SimpleGraph::from_multigraph(petersen())).has_value());
  EXPECT_TRUE(is_claw_free(SimpleGraph::from_multigraph(cycle_graph(6))));
}

TEST(Claw, AgreesWithBruteForce) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const SimpleGraph g = oracle::random_graph(rng, 3 + int(rng() % 7), 0.5);
    EXPECT_EQ(is_claw_free(g), oracle::claw_free(g));
  }
}

TEST(Transforms, SubdivideAndSuppress) {
  const auto c4 = subdivide_edge(complete_graph(3), 0);
  EXPECT_TRUE(is_isomorphic(c4.graph, cycle_graph(4)));
  EXPECT_EQ(c4.graph.vertex_label(c4.vertex), "subdivision");

  const auto p = subdivide_edge(petersen(), 7);
  EXPECT_EQ(p.graph.num_vertices(), 11);
  EXPECT_EQ(p.graph.num_edges(), 16);

  MultiGraph d = MultiGraph::with_vertices(2);
  const EdgeId first = d.add_edge(0, 1);
  d.add_edge(0, 1);
  const auto t = subdivide_edge(d, first);
  MultiGraph expected = MultiGraph::with_vertices(3);
  expected.add_edge(0, 1);
  expected.add_edge(1, 2);
  expected.add_edge(2, 0);
  EXPECT_TRUE(is_isomorphic(t.graph, expected));
  EXPECT_EQ(t.graph.multiplicity(0, 1), 1);

  MultiGraph loop = MultiGraph::with_vertices(1);
  const EdgeId l = loop.add_edge(0, 0);
  EXPECT_THROW(subdivide_edge(loop, l), InputError);

  const auto ab = suppress_vertex(path_graph(3), 1);
  EXPECT_EQ(ab.graph.num_edges(), 1);
  EXPECT_EQ(ab.graph.multiplicity(0, 2), 1);

  const auto to_loop = suppress_vertex(d, 1);
  EXPECT_EQ(to_loop.graph.num_vertices(), 1);
  EXPECT_TRUE(to_loop.graph.edge(to_loop.merged).is_loop());

  EXPECT_THROW(suppress_vertex(petersen(), 0), InputError);
}

TEST(Transforms, PetersenMinusEdgeIsWagner) {
  const MultiGraph base = petersen();
  for (const Edge& e : base.edges()) {
    MultiGraph h = base;
    h.remove_edge(e.id);
    h = suppress_vertex(h, e.u).graph;
    h = suppress_vertex(h, e.v).graph;
    EXPECT_TRUE(is_isomorphic(h, wagner())) << "edge " << e.id;
  }
}

TEST(Transforms, SuppressInvertsSubdivide) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph h = oracle::random_multigraph(rng, 2 + int(rng() % 5), 1 + int(rng() % 7), 2);
    const Edge& e = h.edges()[rng() % h.num_edges()];
    const auto s = subdivide_edge(h, e.id);
    const auto back = suppress_vertex(s.graph, s.vertex);
    EXPECT_TRUE(is_isomorphic(back.graph, h));
  }
}

TEST(Transforms, AttachPendant) {
  const auto k2 = attach_pendant(MultiGraph::with_vertices(1), 0);
  EXPECT_TRUE(is_isomorphic(k2.graph, path_graph(2)));
  MultiGraph p = petersen();
  for (int v = 0; v < 10; ++v) p = attach_pendant(p, v).graph;
  EXPECT_EQ(p.num_vertices(), 20);
  EXPECT_EQ(p.num_edges(), 25);
  const auto w = attach_pendant(wagner(), 3, 2);
  EXPECT_EQ(w.graph.degree(w.vertex), 2);
  EXPECT_EQ(w.graph.vertex_label(w.vertex), "pendant");
}

TEST(Subgraph, Patterns) {
  EXPECT_EQ(patterns::diamond().graph.num_edges(), 5);
  EXPECT_EQ(patterns::multitriangle().graph.num_edges(), 4);
  EXPECT_EQ(patterns::triple_edge().graph.multiplicity(0, 1), 3);

  const auto k4 = find_subgraph(complete_graph(4), patterns::diamond());
  ASSERT_TRUE(k4);
  EXPECT_EQ(k4->edge_map.size(), 5u);
  EXPECT_TRUE(find_subgraph(patterns::multitriangle().graph, patterns::multitriangle()));
  EXPECT_FALSE(find_subgraph(petersen(), patterns::triple_edge()));
  EXPECT_FALSE(find_subgraph(petersen(), patterns::diamond()));
  EXPECT_FALSE(find_subgraph(complete_graph(5), patterns::multitriangle()));
}

TEST(Subgraph, EmbeddingIsValid) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph h = oracle::random_multigraph(rng, 4 + int(rng() % 3), 6 + int(rng() % 5), 3);
    for (const auto& pat : {patterns::diamond(), patterns::multitriangle(), patterns::triple_edge()}) {
      const auto emb = find_subgraph(h, pat);
      if (!emb) continue;
      std::set<EdgeId> used;
      for (const Edge& pe : pat.graph.edges()) {
        const EdgeId he = emb->edge_map.at(pe.id);
        EXPECT_TRUE(used.insert(he).second);
        const Edge& hed = h.edge(he);
        const VertexId a = emb->vertex_map.at(pe.u), b = emb->vertex_map.at(pe.v);
        EXPECT_TRUE((hed.u == a && hed.v == b) || (hed.u == b && hed.v == a));
      }
    }
  }
}

}  // namespace
}  // namespace hamlab
