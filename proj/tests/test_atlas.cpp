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

#include <set>

#include "hamlab/atlas.hpp"
#include "oracles.hpp"

namespace hamlab {
namespace {

/// Classes of all labeled graphs on n vertices accepted by `keep`, bucketed
/// with the permutation oracle.
template <class Keep>
int brute_count(int n, Keep keep) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<std::vector<int>> classes;
  for (long mask = 0; mask < (1L << pairs.size()); ++mask) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (keep(g)) classes.insert(oracle::brute_canon(oracle::matrix(g)));
  }
  return int(classes.size());
}

long count(EnumSpec spec) {
  std::set<std::string> forms;
  const long c = enumerate_graphs(spec, [&](const SimpleGraph& g) { forms.insert(canonical_form(g)); });
  EXPECT_EQ(long(forms.size()), c) << "duplicate class emitted";
  return c;
}

TEST(Atlas, SmallCounts) {
  EXPECT_EQ(count({.n = 3}), 4);
  EXPECT_EQ(count({.n = 4}), 11);
  EXPECT_EQ(count({.n = 4, .filters = {Filter::connected()}}), 6);
  EXPECT_EQ(count({.n = 0}), 1);
  EXPECT_EQ(count({.n = 1}), 1);
}

TEST(Atlas, AgreesWithBruteForce) {
  auto any = [](const SimpleGraph&) { return true; };
  for (int n = 2; n <= 5; ++n) {
    EXPECT_EQ(count({.n = n}), brute_count(n, any)) << n;
    EXPECT_EQ(count({.n = n, .filters = {Filter::claw_free()}}), brute_count(n, oracle::claw_free)) << n;
    EXPECT_EQ(count({.n = n, .filters = {Filter::triangle_free(), Filter::connected()}}),
              brute_count(n, [](const SimpleGraph& g) {
                for (int a = 0; a < g.n(); ++a)
                  for (int b = a + 1; b < g.n(); ++b)
                    for (int c = b + 1; c < g.n(); ++c)
                      if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) return false;
                return oracle::connected_without(g, 0);
              }))
        << n;
    EXPECT_EQ(count({.n = n, .filters = {Filter::k_connected(2), Filter::domination_at_most(1)}}),
              brute_count(n, [](const SimpleGraph& g) {
                return oracle::k_connected(g, 2) && oracle::domination_number(g) <= 1;
              }))
        << n;
    EXPECT_EQ(count({.n = n, .max_edges = 4}),
              brute_count(n, [](const SimpleGraph& g) { return g.num_edges() <= 4; }))
        << n;
  }
}

TEST(Atlas, KnownTotals) {
  EXPECT_EQ(count({.n = 5}), 34);
  EXPECT_EQ(count({.n = 6}), 156);
  EXPECT_EQ(count({.n = 7}), 1044);
  EXPECT_EQ(count({.n = 6, .filters = {Filter::connected()}}), 112);
}

TEST(Atlas, CubicGraphs) {
  const std::vector<Filter> cubic = {Filter::regular(3), Filter::connected()};
  EXPECT_EQ(count({.n = 4, .filters = cubic}), 1);
  EXPECT_EQ(count({.n = 6, .filters = cubic}), 2);
  EXPECT_EQ(count({.n = 8, .filters = cubic}), 5);
  EXPECT_EQ(count({.n = 10, .filters = cubic}), 19);
}

TEST(Atlas, FilterOrderIrrelevant) {
  std::set<std::string> a, b;
  enumerate_graphs({.n = 6, .filters = {Filter::claw_free(), Filter::connected(), Filter::domination_at_most(2)}},
                   [&](const SimpleGraph& g) { a.insert(canonical_form(g)); });
  enumerate_graphs({.n = 6, .filters = {Filter::domination_at_most(2), Filter::connected(), Filter::claw_free()}},
                   [&](const SimpleGraph& g) { b.insert(canonical_form(g)); });
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a.empty());
}

TEST(Atlas, SeedDoesNotChangeClasses) {
  std::set<std::string> a, b;
  enumerate_graphs({.n = 6}, [&](const SimpleGraph& g) { a.insert(canonical_form(g)); });
  enumerate_graphs({.n = 6, .seed = 99}, [&](const SimpleGraph& g) { b.insert(canonical_form(g)); });
  EXPECT_EQ(a, b);
}

TEST(Atlas, ShardsPartitionTheClasses) {
  std::set<std::string> whole;
  enumerate_graphs({.n = 6}, [&](const SimpleGraph& g) { whole.insert(canonical_form(g)); });
  std::multiset<std::string> parts;
  for (int i = 0; i < 3; ++i)
    enumerate_graphs({.n = 6, .shard = {i, 3}}, [&](const SimpleGraph& g) { parts.insert(canonical_form(g)); });
  EXPECT_EQ(std::set<std::string>(parts.begin(), parts.end()), whole);
  EXPECT_EQ(parts.size(), whole.size());
}

TEST(Atlas, Budget) {
  EXPECT_THROW(enumerate_graphs({.n = 11}, [](const SimpleGraph&) {}), BoundExceeded);
  EXPECT_THROW(enumerate_multigraphs({.n = 8, .max_multiplicity = 2}, [](const MultiGraph&) {}), BoundExceeded);
  EXPECT_THROW(enumerate_3hypergraphs(7, 2, [](const Hypergraph3&) {}), BoundExceeded);
}

long count_multi(EnumSpec spec) {
  std::set<std::string> forms;
  const long c = enumerate_multigraphs(spec, [&](const MultiGraph& h) { forms.insert(canonical_form(h)); });
  EXPECT_EQ(long(forms.size()), c);
  return c;
}

/// Multigraph classes by brute force over multiplicity matrices.
template <class Keep>
int brute_multi(int n, int max_mult, int max_edges, Keep keep) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::set<std::vector<int>> classes;
  std::vector<int> mult(pairs.size(), 0);
  while (true) {
    int total = 0;
    for (int m : mult) total += m;
    if (max_edges < 0 || total <= max_edges) {
      MultiGraph h = MultiGraph::with_vertices(n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        for (int r = 0; r < mult[i]; ++r) h.add_edge(pairs[i].first, pairs[i].second);
      if (keep(h)) classes.insert(oracle::brute_canon(oracle::matrix(h)));
    }
    std::size_t i = 0;
    while (i < mult.size() && mult[i] == max_mult) mult[i++] = 0;
    if (i == mult.size()) break;
    ++mult[i];
  }
  return int(classes.size());
}

TEST(Atlas, Multigraphs) {
  EXPECT_EQ(count_multi({.n = 2, .max_multiplicity = 2}), 3);
  EXPECT_EQ(count_multi({.n = 3, .max_multiplicity = 1}), 4);
  EXPECT_EQ(count_multi({.n = 3, .max_multiplicity = 1, .filters = {Filter::triangle_free()}}), 3);
  auto any = [](const MultiGraph&) { return true; };
  for (int n = 2; n <= 4; ++n) {
    EXPECT_EQ(count_multi({.n = n, .max_multiplicity = 2}), brute_multi(n, 2, -1, any)) << n;
    EXPECT_EQ(count_multi({.n = n, .max_multiplicity = 3, .max_edges = 5}), brute_multi(n, 3, 5, any)) << n;
    EXPECT_EQ(count_multi({.n = n, .max_multiplicity = 2, .filters = {Filter::essentially_k_edge_connected(3)}}),
              brute_multi(n, 2, -1, [](const MultiGraph& h) {
                for (int v : h.vertices())
                  if (h.degree(v) == 0) return false;
                return h.num_edges() >= 4 &&
                       oracle::nontrivial_components(h, std::vector<char>(h.num_edges())) == 1 &&
                       oracle::essentially_k_edge_connected(h, 3);
              }))
        << n;
  }
}

/// Hypergraph classes by brute force: every hyperedge multiset, bucketed by
/// the permutation oracle applied to sorted hyperedge lists.
int brute_hyper(int n, int max_h, int max_mult, bool need_triple) {
  std::vector<std::vector<int>> cand;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) cand.push_back({a, b});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) cand.push_back({a, b, c});
  std::set<std::vector<std::vector<int>>> classes;
  std::vector<int> pick;
  auto canon = [&] {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> best;
    do {
      std::vector<std::vector<int>> es;
      for (int c : pick) {
        std::vector<int> e;
        for (int v : cand[c]) e.push_back(p[v]);
        std::sort(e.begin(), e.end());
        es.push_back(e);
      }
      std::sort(es.begin(), es.end());
      if (best.empty() || es < best) best = es;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (!pick.empty()) {
      bool triple = false;
      for (int c : pick) triple |= cand[c].size() == 3;
      if (!need_triple || triple) classes.insert(canon());
    }
    if (int(pick.size()) == max_h) return;
    for (int c = start; c < int(cand.size()); ++c) {
      if (std::count(pick.begin(), pick.end(), c) >= max_mult) continue;
      pick.push_back(c);
      self(self, c);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return int(classes.size());
}

TEST(Atlas, Hypergraphs) {
  HyperEnumSpec one{.n = 3, .min_hyperedges = 1, .max_hyperedges = 1};
  EXPECT_EQ(enumerate_3hypergraphs(one, [](const Hypergraph3&) {}), 2);

  for (int n = 2; n <= 4; ++n) {
    for (int h = 1; h <= 3; ++h) {
      long with_triple = 0;
      const long all = enumerate_3hypergraphs({.n = n, .min_hyperedges = 1, .max_hyperedges = h},
                                              [&](const Hypergraph3& hg) {
                                                if (hg.rank() == 3) ++with_triple;
                                              });
      EXPECT_EQ(all, brute_hyper(n, h, 2, false)) << n << " " << h;
      EXPECT_EQ(with_triple, brute_hyper(n, h, 2, true)) << n << " " << h;
    }
  }
  // One 3-hyperedge plus one 2-edge on four vertices: the 2-edge lies inside
  // the triple, meets it in one vertex, or (impossible here) misses it.
  long mixed = 0;
  enumerate_3hypergraphs({.n = 4, .min_hyperedges = 2, .max_hyperedges = 2}, [&](const Hypergraph3& hg) {
    if (hg.hyperedge(0).size() + hg.hyperedge(1).size() == 5) ++mixed;
  });
  EXPECT_EQ(mixed, 2);
}

}  // namespace
}  // namespace hamlab
