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
#include "hamlab/domination.hpp"
#include "hamlab/pipeline.hpp"
#include "oracles.hpp"

namespace hamlab {
namespace {

MultiGraph with_pendants(MultiGraph h) {
  const auto vs = h.vertices();
  for (VertexId v : vs) h = attach_pendant(h, v).graph;
  return h;
}

void expect_cycle_certificate(const MultiGraph& h, const VerdictReport& r) {
  ASSERT_EQ(r.branch, Branch::Certificate) << r.diagnostic;
  ASSERT_TRUE(r.walk.has_value());
  EXPECT_TRUE(is_dominating_closed_trail(h, *r.walk));
  EXPECT_TRUE(is_hamilton_cycle(line_graph(h).graph, hamilton_cycle_from_dct(h, *r.walk)));
}

TEST(HamiltonianPipeline, Petersen) {
  const MultiGraph p = petersen();
  const auto dom = edge_domination_number(p).witness.members;
  ASSERT_EQ(dom.size(), 3u);
  const VerdictReport r = verify_hamiltonian_instance(p, dom);
  expect_cycle_certificate(p, r);
  EXPECT_LE(r.marks.size(), 6u);
}

TEST(HamiltonianPipeline, PetersenWithPendantsIsTheException) {
  const MultiGraph h = with_pendants(petersen());
  const auto dom = edge_domination_number(h).witness.members;
  ASSERT_EQ(dom.size(), 5u);
  const VerdictReport r = verify_hamiltonian_instance(h, dom);
  ASSERT_EQ(r.branch, Branch::Exception) << r.diagnostic;
  ASSERT_TRUE(r.contraction.has_value());
  EXPECT_TRUE(is_valid_contraction(core(h).graph, *r.contraction, {r.marks}));
  EXPECT_TRUE(dominating_closed_trail(h).absent());
}

TEST(HamiltonianPipeline, K4WithPendants) {
  const MultiGraph h = with_pendants(complete_graph(4));
  // Edges 0 (0-1) and 5 (2-3) are independent in K4.
  const VerdictReport r = verify_hamiltonian_instance(h, {0, 5});
  expect_cycle_certificate(h, r);
}

TEST(HamiltonianPipeline, PreconditionsAreInputErrors) {
  EXPECT_THROW(verify_hamiltonian_instance(petersen(), {0}), InputError);
  EXPECT_THROW(verify_hamiltonian_instance(cycle_graph(6), {0, 3}), InputError);
  const MultiGraph k4 = with_pendants(complete_graph(4));
  EXPECT_THROW(verify_hamilton_connected_instance(k4, 0, 0, {0, 5}), InputError);
  EXPECT_THROW(verify_hamilton_connected_instance(with_pendants(petersen()), 0, 1, {0, 1, 2, 3, 4}), InputError);
}

TEST(HamiltonConnectedPipeline, K4WithPendants) {
  const MultiGraph h = with_pendants(complete_graph(4));
  const SimpleGraph l = line_graph(h).graph;
  for (const Edge& a : h.edges())
    for (const Edge& b : h.edges()) {
      if (a.id == b.id) continue;
      const VerdictReport r = verify_hamilton_connected_instance(h, a.id, b.id, {0, 5});
      ASSERT_EQ(r.branch, Branch::Certificate) << a.id << " " << b.id << ": " << r.diagnostic;
      ASSERT_TRUE(is_idt(h, a.id, b.id, *r.walk));
      const LineGraph lg = line_graph(h);
      ASSERT_TRUE(is_hamilton_path(l, lg.map.forward.at(a.id), lg.map.forward.at(b.id),
                                   hamilton_path_from_idt(h, *r.walk)));
    }
}

TEST(HamiltonConnectedPipeline, SameCoreImage) {
  const Subdivision s = subdivide_edge(complete_graph(4), 0);
  const MultiGraph h = s.graph;
  const auto dom = edge_domination_number(h).witness.members;
  ASSERT_LE(dom.size(), 4u);
  const VerdictReport r = verify_hamilton_connected_instance(h, s.first, s.second, dom);
  ASSERT_EQ(r.branch, Branch::Certificate) << r.diagnostic;
  EXPECT_TRUE(is_idt(h, s.first, s.second, *r.walk));
}

TEST(HamiltonConnectedPipeline, WagnerWithPendants) {
  const MultiGraph h = with_pendants(wagner());
  const auto dom = std::vector<EdgeId>{8, 9, 10, 11};
  ASSERT_TRUE(is_edge_dominating_set(h, dom));
  long exceptions = 0;
  for (const Edge& a : h.edges())
    for (const Edge& b : h.edges()) {
      if (a.id == b.id) continue;
      const VerdictReport r = verify_hamilton_connected_instance(h, a.id, b.id, dom);
      ASSERT_NE(r.branch, Branch::Violation) << r.diagnostic;
      ASSERT_EQ(r.branch == Branch::Certificate, idt(h, a.id, b.id).found());
      if (r.branch == Branch::Certificate) ASSERT_TRUE(is_idt(h, a.id, b.id, *r.walk));
      exceptions += r.branch == Branch::Exception;
    }
  // The four non-Hamilton pairs of L(H).
  EXPECT_EQ(exceptions, 4);
}

TEST(HypergraphPipeline, Examples) {
  const Hypergraph3 tri(3, {{0, 1, 2}, {0, 1}, {1, 2}, {0, 2}});
  const VerdictReport r = verify_hypergraph_instance(tri, {0});
  ASSERT_EQ(r.branch, Branch::Certificate) << r.diagnostic;
  EXPECT_TRUE(is_dominating_quasitrail(incidence_graph(tri), *r.walk));
  EXPECT_TRUE(hamilton_cycle(line_graph_h3(tri)).found());

  const Hypergraph3 pet = Hypergraph3::from_multigraph(petersen());
  const auto dom = edge_domination_number(petersen()).witness.members;
  const VerdictReport rp = verify_hypergraph_instance(pet, {dom.begin(), dom.end()});
  ASSERT_EQ(rp.branch, Branch::Certificate) << rp.diagnostic;
  EXPECT_TRUE(is_dominating_quasitrail(incidence_graph(pet), *rp.walk));

  const Hypergraph3 pp = Hypergraph3::from_multigraph(with_pendants(petersen()));
  EXPECT_THROW(verify_hypergraph_instance(pp, {0, 1, 2, 3, 4}), InputError);
}

TEST(Pipelines, NoViolationsOnSmallDecoratedGraphs) {
  std::mt19937 rng(5);
  long runs = 0;
  for (int n = 2; n <= 5; ++n)
    enumerate_multigraphs(
        {.n = n, .max_multiplicity = 2, .max_edges = 8,
         .filters = {Filter::connected(), Filter::min_edges(4), Filter::essentially_k_edge_connected(3)}},
        [&](const MultiGraph& base) {
          MultiGraph h = base;
          const auto vs = h.vertices();
          if (rng() % 2) h = attach_pendant(h, vs[rng() % vs.size()]).graph;
          if (!is_essentially_k_edge_connected(h, 3).holds) return;
          const auto dom = edge_domination_number(h).witness.members;
          const SimpleGraph l = line_graph(h).graph;
          if (dom.size() <= 5) {
            const VerdictReport r = verify_hamiltonian_instance(h, dom);
            ASSERT_NE(r.branch, Branch::Violation) << canonical_form(h) << ": " << r.diagnostic;
            if (r.branch == Branch::Certificate) ASSERT_TRUE(is_hamilton_cycle(l, hamilton_cycle_from_dct(h, *r.walk)));
            ++runs;
          }
          if (dom.size() <= 4 && !find_subgraph(h, patterns::diamond()) &&
              !find_subgraph(h, patterns::multitriangle()) && !find_subgraph(h, patterns::triple_edge())) {
            for (const Edge& a : h.edges())
              for (const Edge& b : h.edges()) {
                if (a.id == b.id) continue;
                const VerdictReport r = verify_hamilton_connected_instance(h, a.id, b.id, dom);
                ASSERT_NE(r.branch, Branch::Violation) << canonical_form(h) << " " << a.id << "," << b.id << ": "
                                                       << r.diagnostic;
                if (r.branch == Branch::Certificate) ASSERT_TRUE(is_idt(h, a.id, b.id, *r.walk));
                ++runs;
              }
          }
        });
  EXPECT_GT(runs, 100);
}

TEST(Pipelines, NoViolationsOnSmallHypergraphs) {
  long runs = 0;
  for (int n = 3; n <= 6; ++n)
    enumerate_3hypergraphs({.n = n, .min_hyperedges = 4, .max_hyperedges = 5}, [&](const Hypergraph3& hg) {
      const SimpleGraph l = line_graph_h3(hg);
      if (!vertex_connectivity_at_least(l, 3).holds) return;
      const DominationResult d = domination_number(l);
      if (d.number > 4) return;
      const VerdictReport r = verify_hypergraph_instance(hg, d.witness.members);
      ASSERT_EQ(r.branch, Branch::Certificate) << canonical_form(hg) << ": " << r.diagnostic;
      ASSERT_TRUE(is_dominating_quasitrail(incidence_graph(hg), *r.walk));
      ++runs;
    });
  EXPECT_GT(runs, 10);
}

}  // namespace
}  // namespace hamlab
