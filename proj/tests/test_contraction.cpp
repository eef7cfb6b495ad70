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

#include "hamlab/atlas.hpp"
#include "hamlab/canonical.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/named.hpp"
#include "hamlab/structure.hpp"
#include "hamlab/trails.hpp"

namespace hamlab {
namespace {

int girth(const MultiGraph& h) {
  // Shortest cycle through BFS from every vertex (simple graphs only).
  int best = 1 << 20;
  const DenseMultigraph d(h);
  for (int s = 0; s < d.n(); ++s) {
    std::vector<int> dist(d.n(), -1), parent(d.n(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int v = queue[i];
      for (const auto& inc : d.inc[v]) {
        if (dist[inc.other] < 0) {
          dist[inc.other] = dist[v] + 1;
          parent[inc.other] = v;
          queue.push_back(inc.other);
        } else if (parent[v] != inc.other) {
          best = std::min(best, dist[v] + dist[inc.other] + 1);
        }
      }
    }
  }
  return best;
}

TEST(Constants, PetersenAndWagner) {
  const MultiGraph p = petersen();
  EXPECT_EQ(p.num_vertices(), 10);
  EXPECT_EQ(p.num_edges(), 15);
  for (VertexId v : p.vertices()) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(girth(p), 5);
  const MultiGraph w = wagner();
  EXPECT_EQ(w.num_vertices(), 8);
  EXPECT_EQ(w.num_edges(), 12);
  for (VertexId v : w.vertices()) EXPECT_EQ(w.degree(v), 3);
}

TEST(Constants, PetersenMinusAnEdgeIsWagner) {
  const MultiGraph p = petersen();
  for (const Edge& e : p.edges()) {
    MultiGraph g = p;
    g.remove_edge(e.id);
    g = suppress_vertex(g, e.u).graph;
    g = suppress_vertex(g, e.v).graph;
    EXPECT_TRUE(is_isomorphic(g, wagner())) << e.id;
  }
}

TEST(Contract, Examples) {
  const MultiGraph c6 = cycle_graph(6);
  const MultiGraph c3 = contract(c6, {{0, 0}, {1, 0}, {2, 1}, {3, 1}, {4, 2}, {5, 2}});
  EXPECT_TRUE(is_isomorphic(c3, cycle_graph(3)));
  std::map<VertexId, int> id, one;
  for (VertexId v = 0; v < 6; ++v) {
    id[v] = v;
    one[v] = 0;
  }
  EXPECT_TRUE(is_isomorphic(contract(c6, id), c6));
  const MultiGraph single = contract(c6, one);
  EXPECT_EQ(single.num_vertices(), 1);
  EXPECT_EQ(single.num_edges(), 0);
  EXPECT_THROW(contract(c6, {{0, 0}, {1, 1}, {2, 0}, {3, 1}, {4, 2}, {5, 2}}), InputError);
  EXPECT_THROW(contract(c6, {{0, 0}}), InputError);
}

TEST(Contract, CrossingMultiplicities) {
  const MultiGraph k4 = complete_graph(4);
  const MultiGraph q = contract(k4, {{0, 0}, {1, 0}, {2, 1}, {3, 1}});
  EXPECT_EQ(q.num_edges(), 4);
}

TEST(FindContraction, Examples) {
  const MultiGraph p = petersen();
  std::vector<VertexId> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto r = find_contraction(p, p, {all});
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_valid_contraction(p, *r.cert, {all}));
  std::set<int> labels;
  for (auto [v, x] : r.cert->partition) labels.insert(x);
  EXPECT_EQ(labels.size(), 10u);

  const Subdivision s = subdivide_edge(p, 2);
  const auto rs = find_contraction(s.graph, p, {all});
  ASSERT_TRUE(rs.found());
  EXPECT_TRUE(is_valid_contraction(s.graph, *rs.cert, {all}));
  const int part = rs.cert->partition.at(s.vertex);
  const Edge& orig = p.edge(2);
  EXPECT_TRUE(rs.cert->partition.at(orig.u) == part || rs.cert->partition.at(orig.v) == part);

  EXPECT_TRUE(find_contraction(complete_graph(4), p).absent());
  EXPECT_TRUE(find_contraction(cycle_graph(4), cycle_graph(3)).found());
  EXPECT_THROW(find_contraction(cycle_graph(17), p), BoundExceeded);
}

TEST(FindContraction, WagnerOntoItselfAndFromPetersen) {
  EXPECT_TRUE(find_contraction(wagner(), wagner()).found());
  // Wagner is a minor of Petersen but not a contraction of it (contracting
  // an edge of a cubic graph leaves a degree-4 vertex).
  EXPECT_TRUE(find_contraction(petersen(), wagner()).absent());
  MultiGraph two = wagner();
  const VertexId a = two.add_vertex(), b = two.add_vertex();
  two.add_edge(a, b);
  two.add_edge(a, 0);
  two.add_edge(b, 4);
  EXPECT_TRUE(find_contraction(two, wagner()).absent());
}

TEST(FindContraction, EdgeConstrainedOnPetersen) {
  const MultiGraph p = petersen();
  for (const Edge& e : p.edges()) {
    std::vector<VertexId> a;
    for (VertexId v = 0; v < 10; ++v)
      if (!e.touches(v)) a.push_back(v);
    EXPECT_TRUE(closed_trail_through(p, a, e.id).absent()) << e.id;
    const ContractionQuery q{a, e.id};
    const auto r = find_contraction(p, p, q);
    ASSERT_TRUE(r.found()) << e.id;
    EXPECT_TRUE(is_valid_contraction(p, *r.cert, q));
    ASSERT_TRUE(r.cert->edge_image.has_value());
  }
}

TEST(FindContraction, DichotomyOnSmallGraphs) {
  // Every 3-edge-connected multigraph admits a closed trail through A or a
  // marked Petersen contraction.
  std::mt19937 rng(3);
  long contractions = 0, checked = 0;
  auto check = [&](const MultiGraph& h) {
    const auto vs = h.vertices();
    for (int sample = 0; sample < 20; ++sample) {
      std::vector<VertexId> a;
      for (VertexId v : vs)
        if (rng() % 2) a.push_back(v);
      if (closed_trail_through(h, a).found()) continue;
      const auto r = find_contraction(h, petersen(), {a});
      ASSERT_TRUE(r.found());
      ASSERT_TRUE(is_valid_contraction(h, *r.cert, {a}));
      ++contractions;
    }
    ++checked;
  };
  for (int n = 2; n <= 6; ++n)
    enumerate_multigraphs({.n = n, .max_multiplicity = 3, .max_edges = 10, .filters = {Filter::k_edge_connected(3)}},
                          [&](const MultiGraph& h) { check(h); });
  enumerate_graphs({.n = 10, .filters = {Filter::regular(3), Filter::connected()}},
                   [&](const SimpleGraph& g) {
                     const MultiGraph h = g.to_multigraph();
                     if (edge_connectivity_at_least(h, 3).holds) check(h);
                   });
  // Petersen itself with A = V.
  std::vector<VertexId> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  EXPECT_TRUE(closed_trail_through(petersen(), all).absent());
  EXPECT_TRUE(find_contraction(petersen(), petersen(), {all}).found());
  EXPECT_GT(checked, 100);
}

TEST(FindContraction, CertificatesContractToTarget) {
  std::mt19937 rng(8);
  MultiGraph h = petersen();
  for (int i = 0; i < 3; ++i) h = subdivide_edge(h, h.edges()[rng() % h.num_edges()].id).graph;
  const auto r = find_contraction(h, petersen());
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(is_isomorphic(contract(h, r.cert->partition), petersen()));
}

TEST(FindContraction, BudgetIsIndeterminate) {
  MultiGraph h = petersen();
  for (int i = 0; i < 5; ++i) h = subdivide_edge(h, i).graph;
  EXPECT_EQ(find_contraction(h, wagner(), {}, {.nodes = 5}).status, SearchStatus::Indeterminate);
}

}  // namespace
}  // namespace hamlab
