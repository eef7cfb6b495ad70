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

#include "hamlab/atlas.hpp"
#include "hamlab/closure.hpp"
#include "hamlab/hamilton.hpp"
#include "hamlab/named.hpp"
#include "oracles.hpp"

namespace hamlab {
namespace {

SimpleGraph simple(const MultiGraph& h) { return SimpleGraph::from_multigraph(h); }

SimpleGraph diamond() { return SimpleGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

bool same_edges(const SimpleGraph& a, const SimpleGraph& b) { return a.n() == b.n() && a.edges() == b.edges(); }

TEST(Closure, Eligible) {
  EXPECT_EQ(eligible_vertices(diamond()), bit(1) | bit(2));
  EXPECT_EQ(eligible_vertices(simple(cycle_graph(5))), Mask{0});
  EXPECT_EQ(eligible_vertices(simple(complete_graph(4))), Mask{0});
}

TEST(Closure, Examples) {
  const ClosureTrace t = ryjacek_closure(diamond());
  EXPECT_TRUE(same_edges(t.result, simple(complete_graph(4))));
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_EQ(t.steps[0].vertex, 1);
  EXPECT_EQ(t.steps[0].added, (std::vector<std::pair<int, int>>{{0, 3}}));
  EXPECT_TRUE(same_edges(closure(simple(cycle_graph(6))), simple(cycle_graph(6))));
  const SimpleGraph lp = line_graph(petersen()).graph;
  EXPECT_EQ(eligible_vertices(lp), Mask{0});
  EXPECT_TRUE(same_edges(closure(lp), lp));
  EXPECT_THROW(closure(simple(star_graph(3))), InputError);
}

TEST(Closure, TraceSteps) {
  // Each recorded vertex is eligible just before its step and the added
  // edges join two of its neighbours.
  enumerate_graphs({.n = 7, .filters = {Filter::claw_free(), Filter::connected()}}, [](const SimpleGraph& g) {
    const ClosureTrace t = ryjacek_closure(g);
    SimpleGraph cur = g;
    for (const ClosureStep& s : t.steps) {
      ASSERT_TRUE(is_eligible(cur, s.vertex));
      for (auto [a, b] : s.added) {
        ASSERT_TRUE(cur.has_edge(s.vertex, a) && cur.has_edge(s.vertex, b));
        ASSERT_FALSE(cur.has_edge(a, b));
        cur.add_edge(a, b);
      }
    }
    ASSERT_TRUE(same_edges(cur, t.result));
  });
}

TEST(Closure, PropertiesOnClawFreeGraphs) {
  long checked = 0;
  for (int n = 1; n <= 8; ++n) {
    enumerate_graphs({.n = n, .filters = {Filter::claw_free()}}, [&](const SimpleGraph& g) {
      const SimpleGraph c = closure(g);
      ASSERT_TRUE(same_edges(ryjacek_closure(c).result, c));
      ASSERT_TRUE(same_edges(ryjacek_closure(g, CompletionOrder::HighestFirst).result, c));
      ASSERT_TRUE(is_claw_free(c));
      if (c.num_edges() >= 2) {
        for (Mask comp : components(c, c.all())) {
          if (popcount(comp) < 2) continue;
          ASSERT_FALSE(has_triangle(preimage(c.induced(comp))));
        }
      }
      if (n >= 3) ASSERT_EQ(hamilton_cycle(g).found(), hamilton_cycle(c).found());
      ++checked;
    });
  }
  EXPECT_GT(checked, 1000);
}

TEST(MClosed, Examples) {
  const MClosedReport lp = is_m_closed(line_graph(petersen()).graph);
  EXPECT_TRUE(lp.holds);
  const MClosedReport lk4 = is_m_closed(line_graph(complete_graph(4)).graph);
  EXPECT_FALSE(lk4.holds);
  EXPECT_TRUE(lk4.line_graph);
  EXPECT_EQ(lk4.pattern, "T1");
  ASSERT_TRUE(lk4.embedding.has_value());
  EXPECT_TRUE(is_m_closed(simple(complete_graph(4))).holds);
  const MClosedReport claw = is_m_closed(simple(star_graph(3)));
  EXPECT_FALSE(claw.holds);
  EXPECT_FALSE(claw.line_graph);
}

TEST(MClosed, MultitriangleAndTripleEdge) {
  // Triangular prism with one triangle edge doubled; no edge is simplicial.
  MultiGraph t2 = MultiGraph::with_vertices(6);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}, {0, 1}})
    t2.add_edge(a, b);
  EXPECT_EQ(is_m_closed(line_graph(t2).graph).pattern, "T2");
  MultiGraph t3 = path_graph(4);
  t3.add_edge(1, 2);
  t3.add_edge(1, 2);
  EXPECT_EQ(is_m_closed(line_graph(t3).graph).pattern, "T3");
}

}  // namespace
}  // namespace hamlab
