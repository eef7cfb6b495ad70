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

#include "hamlab/families.hpp"
#include "hamlab/hamilton.hpp"
#include "hamlab/linegraph.hpp"
#include "hamlab/trails.hpp"
#include "oracles.hpp"

namespace hamlab {
namespace {

DecorationConfig one_pendant_each(DecorationBase b, bool doubled = false) {
  DecorationConfig cfg;
  const MultiGraph base = base_graph(b);
  for (VertexId v : base.vertices()) (doubled ? cfg.at[v].double_pendants : cfg.at[v].pendants) = 1;
  return cfg;
}

TEST(PPrime, PendantPerVertex) {
  const MultiGraph h = p_prime_member(one_pendant_each(DecorationBase::Petersen));
  EXPECT_EQ(h.num_vertices(), 20);
  const MembershipReport r = is_in_P_prime(h);
  EXPECT_TRUE(r.member) << r.reason;
  EXPECT_EQ(r.edge_domination, 5);
  EXPECT_EQ(oracle::edge_domination_number(h), 5);
}

TEST(PPrime, UnmodifiedVertexIsRejected) {
  DecorationConfig cfg = one_pendant_each(DecorationBase::Petersen);
  cfg.at.erase(0);
  EXPECT_THROW(p_prime_member(cfg), InputError);
  const MembershipReport r = is_in_P_prime(decorate(DecorationBase::Petersen, cfg));
  EXPECT_FALSE(r.member);
  EXPECT_NE(r.reason.find("not modified"), std::string::npos) << r.reason;
}

TEST(PPrime, AllEdgesSubdivided) {
  DecorationConfig cfg;
  const MultiGraph p = petersen();
  for (const Edge& e : p.edges()) cfg.at[e.u].subdivide.push_back(e.id);
  const MultiGraph h = p_prime_member(cfg);
  EXPECT_EQ(h.num_vertices(), 25);
  EXPECT_EQ(h.num_edges(), 30);
  const MembershipReport r = is_in_P_prime(h);
  ASSERT_GT(r.edge_domination, 0) << r.reason;
  EXPECT_EQ(r.member, r.edge_domination <= 5);
}

TEST(PPrime, Rejections) {
  EXPECT_FALSE(is_in_P_prime(petersen()).member);
  EXPECT_FALSE(is_in_P_prime(wagner()).member);
  MultiGraph h = p_prime_member(one_pendant_each(DecorationBase::Petersen));
  h.add_edge(0, 10);  // doubles a pendant
  EXPECT_FALSE(is_in_P_prime(h).member);
  DecorationConfig bad;
  bad.at[0].subdivide.push_back(7);  // edge 7 does not touch vertex 0
  EXPECT_THROW(decorate(DecorationBase::Petersen, bad), InputError);
  DecorationConfig dbl;
  dbl.at[0].double_pendants = 1;
  EXPECT_THROW(decorate(DecorationBase::Petersen, dbl), InputError);
}

TEST(WPrime, PendantPerVertex) {
  const MultiGraph h = w_prime_member(one_pendant_each(DecorationBase::Wagner));
  const MembershipReport r = is_in_W_prime(h);
  EXPECT_TRUE(r.member) << r.reason;
  EXPECT_EQ(r.edge_domination, 4);
  // The antipodal chords dominate every edge.
  EXPECT_TRUE(is_edge_dominating_set(h, {8, 9, 10, 11}));
}

TEST(WPrime, DoublePendantPerVertex) {
  const MultiGraph h = w_prime_member(one_pendant_each(DecorationBase::Wagner, true));
  EXPECT_EQ(h.num_edges(), 28);
  const MembershipReport r = is_in_W_prime(h);
  EXPECT_EQ(r.edge_domination, oracle::edge_domination_number(h));
  EXPECT_EQ(r.member, r.edge_domination <= 4);
}

TEST(WPrime, DoubleEdgeToSubdivision) {
  DecorationConfig cfg = one_pendant_each(DecorationBase::Wagner);
  cfg.at[0].subdivide = {0};
  cfg.at[0].double_to_subdivision = {0};
  const MultiGraph h = w_prime_member(cfg);
  EXPECT_EQ(h.num_edges(), 12 + 8 + 2);
  const MembershipReport r = is_in_W_prime(h);
  EXPECT_EQ(r.member, r.edge_domination <= 4) << r.reason;
  EXPECT_GT(r.edge_domination, 0) << r.reason;
  DecorationConfig both = cfg;
  both.at[1].subdivide = {0};
  both.at[1].double_to_subdivision = {0};
  EXPECT_THROW(decorate(DecorationBase::Wagner, both), InputError);
  DecorationConfig loose = one_pendant_each(DecorationBase::Wagner);
  loose.at[0].double_to_subdivision = {0};
  EXPECT_THROW(decorate(DecorationBase::Wagner, loose), InputError);
}

TEST(WPrime, UnmodifiedVertexIsRejected) {
  DecorationConfig cfg = one_pendant_each(DecorationBase::Wagner);
  cfg.at[5] = {};
  EXPECT_THROW(w_prime_member(cfg), InputError);
  EXPECT_FALSE(is_in_W_prime(decorate(DecorationBase::Wagner, cfg)).member);
}

TEST(PPrime, GeneratedMembers) {
  std::mt19937 rng(21);
  int members = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph h = p_prime_member(random_decoration(DecorationBase::Petersen, rng, 0.15));
    const MembershipReport r = is_in_P_prime(h);
    ASSERT_GT(r.edge_domination, 0) << r.reason;
    if (!r.member) continue;
    ++members;
    EXPECT_TRUE(is_isomorphic(core(h).graph, petersen()));
    const SimpleGraph l = line_graph(h).graph;
    EXPECT_TRUE(is_claw_free(l));
    EXPECT_TRUE(vertex_connectivity_at_least(l, 3).holds);
    EXPECT_EQ(domination_number(l).number, r.edge_domination);
    EXPECT_FALSE(dominating_closed_trail(h, {.nodes = 2'000'000}).found());
  }
  EXPECT_GT(members, 0);
}

TEST(WPrime, GeneratedMembers) {
  std::mt19937 rng(22);
  int members = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const DecorationConfig cfg = random_decoration(DecorationBase::Wagner, rng, 0.15);
    const MultiGraph h = w_prime_member(cfg);
    const MembershipReport r = is_in_W_prime(h);
    ASSERT_GT(r.edge_domination, 0) << r.reason;
    if (!r.member) continue;
    ++members;
    EXPECT_LE(r.edge_domination, 4);
    bool plain = true;
    for (const auto& [v, d] : cfg.at) plain = plain && d.double_to_subdivision.empty();
    if (plain) EXPECT_TRUE(is_isomorphic(core(h).graph, wagner()));
    const SimpleGraph l = line_graph(h).graph;
    EXPECT_TRUE(is_claw_free(l));
    EXPECT_TRUE(vertex_connectivity_at_least(l, 3).holds);
  }
  EXPECT_GT(members, 0);
}

TEST(Sharpness, BaseGraphs) {
  const SimpleGraph a = k123();
  EXPECT_EQ(a.n(), 6);
  EXPECT_EQ(a.num_edges(), 11);
  EXPECT_TRUE(is_isomorphic(blowup(SharpnessBase::K123, 1), a));
  EXPECT_TRUE(is_isomorphic(blowup(SharpnessBase::K113, 1), k113()));
  EXPECT_THROW(blowup(SharpnessBase::K123, 0), InputError);
}

TEST(Sharpness, BlowUps) {
  const SimpleGraph b3 = blowup(SharpnessBase::K123, 3);
  EXPECT_EQ(b3.n(), 8);
  EXPECT_TRUE(oracle::k_connected(b3, 3));
  EXPECT_EQ(oracle::domination_number(b3), 1);
  EXPECT_FALSE(is_hamilton_connected(b3).holds());
  const SimpleGraph c2 = blowup(SharpnessBase::K113, 2);
  EXPECT_TRUE(oracle::k_connected(c2, 2));
  EXPECT_EQ(oracle::domination_number(c2), 1);
  EXPECT_FALSE(oracle::hamiltonian(c2));
  EXPECT_FALSE(hamilton_cycle(c2).found());
}

}  // namespace
}  // namespace hamlab
