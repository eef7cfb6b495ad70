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

// Exhaustive enumeration of small graphs, multigraphs and 3-hypergraphs up to
// isomorphism.
//
// Simple graphs are grown one vertex at a time by canonical augmentation: a
// child C of parent P is kept iff P is isomorphic to C - w, where w is the
// canonical deletion vertex of C (maximum degree, last in canonical order
// among those), and children of one parent are deduplicated by canonical
// form. Multigraphs put multiplicities on each simple representative;
// hypergraphs are generated naively and deduplicated.

#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "hamlab/canonical.hpp"
#include "hamlab/domination.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hypergraph.hpp"
#include "hamlab/structure.hpp"

namespace hamlab {

struct Filter {
  enum class Kind {
    Connected,
    VertexConnected,  // value = k
    ClawFree,
    TriangleFree,
    EssentiallyEdgeConnected,  // value = k
    EdgeConnected,             // value = k
    DominationAtMost,          // value = d
    MaxDegree,                 // value = d
    Regular,                   // value = d
    MinEdges,                  // value = m
  };
  Kind kind;
  int value = 0;

  static Filter connected() { return {Kind::Connected}; }
  static Filter k_connected(int k) { return {Kind::VertexConnected, k}; }
  static Filter claw_free() { return {Kind::ClawFree}; }
  static Filter triangle_free() { return {Kind::TriangleFree}; }
  static Filter essentially_k_edge_connected(int k) { return {Kind::EssentiallyEdgeConnected, k}; }
  static Filter k_edge_connected(int k) { return {Kind::EdgeConnected, k}; }
  static Filter domination_at_most(int d) { return {Kind::DominationAtMost, d}; }
  static Filter max_degree(int d) { return {Kind::MaxDegree, d}; }
  static Filter regular(int d) { return {Kind::Regular, d}; }
  static Filter min_edges(int m) { return {Kind::MinEdges, m}; }
};

struct Shard {
  int index = 0;
  int count = 1;
};

struct EnumSpec {
  int n = 0;
  int max_multiplicity = 1;
  int max_edges = -1;  // total edges counted with multiplicity; -1 = no bound
  std::vector<Filter> filters;
  int n_limit = 10;    // budget: refuse larger n (7 for multigraphs)
  Shard shard;
  unsigned seed = 0;   // nonzero shuffles the internal branch order
};

namespace detail {

inline bool multigraph_filter(const MultiGraph& h, const Filter& f) {
  switch (f.kind) {
    case Filter::Kind::EssentiallyEdgeConnected:
      return h.num_edges() >= f.value + 1 && is_connected(h) &&
             is_essentially_k_edge_connected(h, f.value).holds;
    case Filter::Kind::EdgeConnected:
      return edge_connectivity_at_least(h, f.value).holds;
    case Filter::Kind::MaxDegree:
      for (VertexId v : h.vertices())
        if (h.degree(v) > f.value) return false;
      return true;
    case Filter::Kind::Regular:
      for (VertexId v : h.vertices())
        if (h.degree(v) != f.value) return false;
      return true;
    case Filter::Kind::MinEdges:
      return h.num_edges() >= f.value;
    default:
      break;
  }
  // Everything else depends only on the underlying simple graph.
  SimpleGraph g(h.num_vertices());
  const DenseMultigraph d(h);
  for (auto [a, b] : d.ends)
    if (a != b) g.add_edge(a, b);
  switch (f.kind) {
    case Filter::Kind::Connected:
      return is_connected(g);
    case Filter::Kind::VertexConnected:
      return vertex_connectivity_at_least(g, f.value).holds;
    case Filter::Kind::ClawFree:
      return is_claw_free(g);
    case Filter::Kind::TriangleFree:
      return !has_triangle(g);
    case Filter::Kind::DominationAtMost:
      return g.n() > 0 && domination_number(g).number <= f.value;
    default:
      return true;
  }
}

inline bool simple_filter(const SimpleGraph& g, const Filter& f) {
  switch (f.kind) {
    case Filter::Kind::Connected:
      return is_connected(g);
    case Filter::Kind::VertexConnected:
      return vertex_connectivity_at_least(g, f.value).holds;
    case Filter::Kind::ClawFree:
      return is_claw_free(g);
    case Filter::Kind::TriangleFree:
      return !has_triangle(g);
    case Filter::Kind::DominationAtMost:
      return g.n() > 0 && domination_number(g).number <= f.value;
    case Filter::Kind::MaxDegree:
      for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > f.value) return false;
      return true;
    case Filter::Kind::Regular:
      for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != f.value) return false;
      return true;
    case Filter::Kind::MinEdges:
      return g.num_edges() >= f.value;
    case Filter::Kind::EssentiallyEdgeConnected:
    case Filter::Kind::EdgeConnected:
      return multigraph_filter(g.to_multigraph(), f);
  }
  return true;
}

class SimpleGenerator {
 public:
  SimpleGenerator(const EnumSpec& spec, std::function<void(const SimpleGraph&)> visit)
      : spec_(spec), visit_(std::move(visit)), rng_(spec.seed) {
    for (const Filter& f : spec_.filters) {
      switch (f.kind) {
        case Filter::Kind::ClawFree: claw_free_ = true; break;
        case Filter::Kind::TriangleFree: triangle_free_ = true; break;
        case Filter::Kind::MaxDegree: max_degree_ = std::min(max_degree_, f.value); break;
        case Filter::Kind::Regular:
          max_degree_ = std::min(max_degree_, f.value);
          regular_ = f.value;
          break;
        default: final_.push_back(f); break;
      }
    }
    if (regular_ >= 0) final_.push_back(Filter::regular(regular_));
    split_ = std::min(spec_.n, 5);
  }

  long run() {
    SimpleGraph root(0);
    grow(root, canonical_form(root));
    return emitted_;
  }

 private:
  bool hereditary_ok(const SimpleGraph& c, int v) const {
    if (triangle_free_) {
      const Mask nb = c.neighbors(v);
      bool tri = false;
      for_each_bit(nb, [&](int a) {
        if (c.neighbors(a) & nb) tri = true;
      });
      if (tri) return false;
    }
    if (claw_free_ && !is_claw_free(c)) return false;
    if (regular_ >= 0) {
      int deficit = 0;
      for (int u = 0; u < c.n(); ++u) deficit += regular_ - c.degree(u);
      if (deficit > regular_ * (spec_.n - c.n())) return false;
    }
    return true;
  }

  /// Returns false when this subtree belongs to another shard.
  bool claim(int order) {
    if (order != split_) return true;
    return (split_counter_++ % spec_.shard.count) == spec_.shard.index;
  }

  void grow(const SimpleGraph& parent, const std::string& parent_form) {
    const int k = parent.n();
    if (!claim(k)) return;
    if (k == spec_.n) {
      for (const Filter& f : final_)
        if (!simple_filter(parent, f)) return;
      ++emitted_;
      visit_(parent);
      return;
    }
    const int edges = parent.num_edges();
    Mask open = 0;  // vertices that may receive another edge
    for (int v = 0; v < k; ++v)
      if (parent.degree(v) < max_degree_) open |= bit(v);

    std::vector<Mask> subsets;
    for (Mask s = 0; s < bit(k); ++s) {
      if ((s & ~open) != 0 || popcount(s) > max_degree_) continue;
      if (spec_.max_edges >= 0 && edges + popcount(s) > spec_.max_edges) continue;
      subsets.push_back(s);
    }
    if (spec_.seed != 0) std::shuffle(subsets.begin(), subsets.end(), rng_);

    std::set<std::string> seen;
    for (Mask s : subsets) {
      const int d = popcount(s);
      bool max_deg = true;
      for (int v = 0; v < k && max_deg; ++v)
        if (parent.degree(v) + ((s >> v) & 1) > d) max_deg = false;
      if (!max_deg) continue;
      SimpleGraph c(k + 1);
      for (auto [a, b] : parent.edges()) c.add_edge(a, b);
      for_each_bit(s, [&](int v) { c.add_edge(v, k); });
      if (!hereditary_ok(c, k)) continue;

      const CanonicalLabeling lab = canonical_labeling(c);
      if (seen.count(lab.form)) continue;
      int w = -1;
      for (int pos = k; pos >= 0; --pos)
        if (c.degree(lab.order[pos]) == d) {
          w = lab.order[pos];
          break;
        }
      if (w != k && canonical_form(c.induced(c.all() & ~bit(w))) != parent_form) continue;
      seen.insert(lab.form);
      grow(c, lab.form);
    }
  }

  EnumSpec spec_;
  std::function<void(const SimpleGraph&)> visit_;
  std::mt19937 rng_;
  std::vector<Filter> final_;
  bool claw_free_ = false;
  bool triangle_free_ = false;
  int max_degree_ = 1 << 20;
  int regular_ = -1;
  int split_ = 0;
  long split_counter_ = 0;
  long emitted_ = 0;
};

}  // namespace detail

/// One representative per isomorphism class of simple graphs on spec.n
/// vertices passing every filter, in a deterministic order.
inline long enumerate_graphs(const EnumSpec& spec, const std::function<void(const SimpleGraph&)>& visit) {
  if (spec.n < 0 || spec.n > spec.n_limit)
    throw BoundExceeded("graph enumeration limited to n <= " + std::to_string(spec.n_limit));
  if (spec.shard.count < 1 || spec.shard.index < 0 || spec.shard.index >= spec.shard.count)
    throw InputError("invalid shard");
  return detail::SimpleGenerator(spec, visit).run();
}

/// Loopless multigraphs with edge multiplicities up to spec.max_multiplicity.
inline long enumerate_multigraphs(const EnumSpec& spec, const std::function<void(const MultiGraph&)>& visit) {
  if (spec.n < 0 || spec.n > std::min(spec.n_limit, 7))
    throw BoundExceeded("multigraph enumeration limited to n <= 7");
  if (spec.max_multiplicity < 1 || spec.max_multiplicity > 3)
    throw BoundExceeded("multigraph enumeration limited to multiplicity <= 3");
  EnumSpec underlying = spec;
  underlying.filters.clear();
  std::vector<Filter> on_multigraph;
  for (const Filter& f : spec.filters) {
    switch (f.kind) {
      case Filter::Kind::Connected:
      case Filter::Kind::VertexConnected:
      case Filter::Kind::ClawFree:
      case Filter::Kind::TriangleFree:
      case Filter::Kind::DominationAtMost:
        underlying.filters.push_back(f);
        break;
      case Filter::Kind::MaxDegree:
        underlying.filters.push_back(f);
        on_multigraph.push_back(f);
        break;
      case Filter::Kind::EssentiallyEdgeConnected:
      case Filter::Kind::EdgeConnected:
        // Either implies a connected underlying graph (for more than one vertex).
        if (spec.n > 1) underlying.filters.push_back(Filter::connected());
        on_multigraph.push_back(f);
        break;
      default:
        on_multigraph.push_back(f);
        break;
    }
  }
  long emitted = 0;
  enumerate_graphs(underlying, [&](const SimpleGraph& g) {
    const auto edges = g.edges();
    const int e = static_cast<int>(edges.size());
    std::vector<int> mult(e, 1);
    std::set<std::string> seen;
    while (true) {
      const int total = std::accumulate(mult.begin(), mult.end(), 0);
      if (spec.max_edges < 0 || total <= spec.max_edges) {
        MultiGraph h = MultiGraph::with_vertices(g.n());
        for (int i = 0; i < e; ++i)
          for (int r = 0; r < mult[i]; ++r) h.add_edge(edges[i].first, edges[i].second);
        bool ok = true;
        for (const Filter& f : on_multigraph)
          if (!(ok = detail::multigraph_filter(h, f))) break;
        if (ok && seen.insert(canonical_form(h)).second) {
          ++emitted;
          visit(h);
        }
      }
      int i = 0;
      while (i < e && mult[i] == spec.max_multiplicity) mult[i++] = 1;
      if (i == e) break;
      ++mult[i];
    }
  });
  return emitted;
}

struct HyperEnumSpec {
  int n = 0;
  int min_hyperedges = 1;
  int max_hyperedges = 1;
  int max_multiplicity = 2;
  bool no_isolated = false;  // every vertex lies in some hyperedge
};

/// One representative per isomorphism class of 3-hypergraphs on n vertices.
inline long enumerate_3hypergraphs(const HyperEnumSpec& spec, const std::function<void(const Hypergraph3&)>& visit) {
  if (spec.n < 0 || spec.n > 6) throw BoundExceeded("hypergraph enumeration limited to n <= 6");
  if (spec.max_hyperedges > 8) throw BoundExceeded("hypergraph enumeration limited to 8 hyperedges");
  std::vector<std::vector<int>> candidates;
  for (int a = 0; a < spec.n; ++a)
    for (int b = a + 1; b < spec.n; ++b) candidates.push_back({a, b});
  for (int a = 0; a < spec.n; ++a)
    for (int b = a + 1; b < spec.n; ++b)
      for (int c = b + 1; c < spec.n; ++c) candidates.push_back({a, b, c});
  const int pairs = spec.n * (spec.n - 1) / 2;

  long emitted = 0;
  std::unordered_set<std::string> seen;
  std::vector<int> pick;
  auto consider = [&] {
    if (static_cast<int>(pick.size()) < spec.min_hyperedges) return;
    Hypergraph3 hg(spec.n);
    Mask used = 0;
    for (int c : pick) {
      hg.add(candidates[c]);
      for (int v : candidates[c]) used |= bit(v);
    }
    if (spec.no_isolated && popcount(used) != spec.n) return;
    if (seen.insert(canonical_form(hg)).second) {
      ++emitted;
      visit(hg);
    }
  };
  auto rec = [&](auto&& self, int start) -> void {
    consider();
    if (static_cast<int>(pick.size()) == spec.max_hyperedges) return;
    for (int c = start; c < static_cast<int>(candidates.size()); ++c) {
      const int repeats = static_cast<int>(std::count(pick.begin(), pick.end(), c));
      if (repeats >= spec.max_multiplicity) continue;
      pick.push_back(c);
      self(self, c);
      pick.pop_back();
    }
  };
  if (spec.min_hyperedges <= 0) {
    Hypergraph3 empty(spec.n);
    if (!spec.no_isolated || spec.n == 0) {
      ++emitted;
      visit(empty);
    }
    seen.insert(canonical_form(empty));
  }
  if (spec.max_hyperedges > 0 && !candidates.empty()) {
    // Up to relabeling, the smallest hyperedge is {0,1} or {0,1,2}.
    for (int c : {0, pairs}) {
      if (c >= static_cast<int>(candidates.size())) continue;
      pick.push_back(c);
      rec(rec, c);
      pick.pop_back();
    }
  }
  return emitted;
}

inline long enumerate_3hypergraphs(int n, int max_hyperedges, const std::function<void(const Hypergraph3&)>& visit) {
  HyperEnumSpec spec;
  spec.n = n;
  spec.max_hyperedges = max_hyperedges;
  return enumerate_3hypergraphs(spec, visit);
}

}  // namespace hamlab
