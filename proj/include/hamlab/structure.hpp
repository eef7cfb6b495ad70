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

// Structural predicates and local transforms: neighborhoods, vertex and
// (essential) edge connectivity, claws, subdivision, suppression, pendants.

#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

// ---------------------------------------------------------------------------
// Neighborhoods and components

/// Distinct neighbors of x; a loop does not make x its own neighbor.
inline std::set<VertexId> neighbors(const MultiGraph& g, VertexId x) {
  g.require_vertex(x);
  std::set<VertexId> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u == x) out.insert(e.v);
    if (e.v == x) out.insert(e.u);
  }
  return out;
}

/// Vertices reachable from `start` inside `allowed`.
inline Mask reach(const SimpleGraph& g, int start, Mask allowed) {
  Mask seen = bit(start) & allowed;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected(const SimpleGraph& g, Mask within) {
  if (within == 0) return true;
  return reach(g, lowest_bit(within), within) == within;
}
inline bool is_connected(const SimpleGraph& g) { return is_connected(g, g.all()); }

/// Connected components as vertex masks, ordered by smallest member.
inline std::vector<Mask> components(const SimpleGraph& g, Mask within) {
  std::vector<Mask> out;
  while (within != 0) {
    const Mask c = reach(g, lowest_bit(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

/// Component label per dense vertex, ignoring edges flagged in `removed`.
inline std::vector<int> component_labels(const DenseMultigraph& d, const std::vector<char>& removed) {
  std::vector<int> label(d.n(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < d.n(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& inc : d.inc[v]) {
        if (!removed.empty() && removed[inc.edge]) continue;
        if (label[inc.other] < 0) {
          label[inc.other] = next;
          stack.push_back(inc.other);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const MultiGraph& g) {
  const DenseMultigraph d(g);
  if (d.n() == 0) return true;
  const auto label = component_labels(d, {});
  return std::all_of(label.begin(), label.end(), [](int c) { return c == 0; });
}

// ---------------------------------------------------------------------------
// Vertex connectivity

struct ConnectivityReport {
  bool holds = false;
  /// A minimum vertex cut when `holds` is false and one exists (empty for
  /// disconnected graphs and for graphs with too few vertices).
  std::vector<int> cut;
  bool too_few_vertices = false;
};

/// True iff g has more than k vertices and no vertex cut of size < k.
inline ConnectivityReport vertex_connectivity_at_least(const SimpleGraph& g, int k) {
  if (k < 1) throw InputError("connectivity order must be positive");
  ConnectivityReport report;
  if (g.n() <= k) {
    report.too_few_vertices = true;
    return report;
  }
  // Cuts of increasing size; the first one found is minimum.
  std::vector<int> chosen;
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, int start, int size, Mask removed) -> void {
    if (found) return;
    if (static_cast<int>(chosen.size()) == size) {
      if (!is_connected(g, g.all() & ~removed)) found = chosen;
      return;
    }
    for (int v = start; v < g.n() && !found; ++v) {
      chosen.push_back(v);
      self(self, v + 1, size, removed | bit(v));
      chosen.pop_back();
    }
  };
  for (int size = 0; size < k && !found; ++size) rec(rec, 0, size, 0);
  if (found) {
    report.cut = *found;
    return report;
  }
  report.holds = true;
  return report;
}

// ---------------------------------------------------------------------------
// Edge connectivity via unit-capacity flows

namespace detail {

/// Max flow between vertex sets `sources` and `sinks` (dense indices) in the
/// undirected multigraph, capped at `cap`. Loops carry no flow. On return
/// `source_side` holds the residual-reachable vertices.
inline int capped_flow(const DenseMultigraph& d, Mask sources, Mask sinks, int cap,
                       std::vector<char>* source_side) {
  // flow[e] in {-1,0,1}: direction relative to (ends.first -> ends.second).
  std::vector<int> flow(d.m(), 0);
  const int n = d.n();
  auto in = [](Mask m, int v) { return ((m >> v) & 1) != 0; };
  int total = 0;
  std::vector<int> parent_edge(n), parent_vertex(n);
  std::vector<char> seen(n);
  while (total < cap) {
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
      if (in(sources, v)) {
        seen[v] = 1;
        parent_edge[v] = -1;
        queue.push_back(v);
      }
    int reached = -1;
    for (std::size_t qi = 0; qi < queue.size() && reached < 0; ++qi) {
      const int v = queue[qi];
      for (const auto& inc : d.inc[v]) {
        if (inc.other == v) continue;
        const int dir = d.ends[inc.edge].first == v ? 1 : -1;
        // residual capacity from v to other: 1 - dir*flow
        if (1 - dir * flow[inc.edge] <= 0) continue;
        if (seen[inc.other]) continue;
        seen[inc.other] = 1;
        parent_edge[inc.other] = inc.edge;
        parent_vertex[inc.other] = v;
        if (in(sinks, inc.other)) {
          reached = inc.other;
          break;
        }
        queue.push_back(inc.other);
      }
    }
    if (reached < 0) {
      if (source_side) source_side->assign(seen.begin(), seen.end());
      return total;
    }
    for (int v = reached; parent_edge[v] >= 0; v = parent_vertex[v]) {
      const int e = parent_edge[v];
      const int from = parent_vertex[v];
      flow[e] += d.ends[e].first == from ? 1 : -1;
    }
    ++total;
  }
  if (source_side) source_side->clear();
  return total;
}

inline std::vector<EdgeId> cut_edges(const DenseMultigraph& d, const std::vector<char>& side) {
  std::vector<EdgeId> out;
  for (int e = 0; e < d.m(); ++e)
    if (side[d.ends[e].first] != side[d.ends[e].second]) out.push_back(d.edge_id[e]);
  return out;
}

}  // namespace detail

struct EdgeCutReport {
  bool holds = false;
  std::vector<EdgeId> cut;  // witness when !holds
};

/// True iff every edge cut R of h leaving at least two nontrivial components
/// (components with at least one edge) has |R| >= k. Requires |E(h)| >= k+1.
///
/// An essential cut separates two edges with disjoint end sets, so the check
/// runs a capped max-flow between the end sets of every such edge pair.
inline EdgeCutReport is_essentially_k_edge_connected(const MultiGraph& h, int k) {
  if (k < 1) throw InputError("edge connectivity order must be positive");
  if (h.num_edges() < k + 1)
    throw InputError("essential edge connectivity needs at least k+1 edges");
  const DenseMultigraph d(h);
  d.require_mask_width();
  EdgeCutReport report;
  std::vector<char> side;
  for (int e = 0; e < d.m(); ++e) {
    const Mask a = d.edge_ends_mask(e);
    for (int f = e + 1; f < d.m(); ++f) {
      const Mask b = d.edge_ends_mask(f);
      if ((a & b) != 0) continue;
      if (detail::capped_flow(d, a, b, k, &side) < k) {
        report.cut = detail::cut_edges(d, side);
        return report;
      }
    }
  }
  report.holds = true;
  return report;
}

/// True iff h is connected and every edge cut has at least k edges.
inline EdgeCutReport edge_connectivity_at_least(const MultiGraph& h, int k) {
  const DenseMultigraph d(h);
  d.require_mask_width();
  EdgeCutReport report;
  if (d.n() <= 1) {
    report.holds = true;
    return report;
  }
  std::vector<char> side;
  for (int t = 1; t < d.n(); ++t) {
    if (detail::capped_flow(d, bit(0), bit(t), k, &side) < k) {
      report.cut = detail::cut_edges(d, side);
      return report;
    }
  }
  report.holds = true;
  return report;
}

// ---------------------------------------------------------------------------
// Claws

struct Claw {
  int center = -1;
  std::array<int, 3> leaves{};
};

inline std::optional<Claw> find_induced_claw(const SimpleGraph& g) {
  for (int c = 0; c < g.n(); ++c) {
    const Mask nb = g.neighbors(c);
    std::optional<Claw> found;
    for_each_bit(nb, [&](int a) {
      if (found) return;
      for_each_bit(nb & above(a) & ~g.neighbors(a), [&](int b) {
        if (found) return;
        const Mask rest = nb & above(b) & ~g.neighbors(a) & ~g.neighbors(b);
        if (rest != 0) found = Claw{c, {a, b, lowest_bit(rest)}};
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

inline bool is_claw_free(const SimpleGraph& g) { return !find_induced_claw(g).has_value(); }

inline bool has_triangle(const SimpleGraph& g) {
  for (int u = 0; u < g.n(); ++u) {
    bool hit = false;
    for_each_bit(g.neighbors(u) & above(u), [&](int v) {
      if (g.neighbors(u) & g.neighbors(v) & above(v)) hit = true;
    });
    if (hit) return true;
  }
  return false;
}

/// Three pairwise adjacent distinct vertices.
inline bool has_triangle(const MultiGraph& h) {
  std::set<std::pair<VertexId, VertexId>> adj;
  for (const Edge& e : h.edges())
    if (!e.is_loop()) adj.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  for (auto [a, b] : adj)
    for (VertexId c : h.vertices())
      if (c > b && adj.count({a, c}) && adj.count({b, c})) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Local transforms. Each returns a new graph; ids of untouched items persist.

struct Subdivision {
  MultiGraph graph;
  VertexId vertex = -1;
  EdgeId first = -1;   // edge (u, vertex)
  EdgeId second = -1;  // edge (vertex, v)
};

inline Subdivision subdivide_edge(const MultiGraph& h, EdgeId e) {
  const Edge ed = h.edge(e);
  if (ed.is_loop()) throw InputError("cannot subdivide a loop");
  Subdivision out{h};
  out.graph.remove_edge(e);
  out.vertex = out.graph.add_vertex("subdivision");
  out.first = out.graph.add_edge(ed.u, out.vertex);
  out.second = out.graph.add_edge(out.vertex, ed.v);
  return out;
}

struct Suppression {
  MultiGraph graph;
  EdgeId merged = -1;
  EdgeId first = -1;  // removed edges, in increasing id order
  EdgeId second = -1;
};

/// Replaces the degree-2 vertex v and its two edges by one edge between its
/// neighbors (a loop when both edges go to the same neighbor).
inline Suppression suppress_vertex(const MultiGraph& h, VertexId v) {
  h.require_vertex(v);
  const auto inc = h.incident_edges(v);
  if (h.degree(v) != 2 || inc.size() != 2)
    throw InputError("suppression needs a loopless vertex of degree 2");
  const VertexId a = h.edge(inc[0]).other(v);
  const VertexId b = h.edge(inc[1]).other(v);
  Suppression out{h};
  out.first = inc[0];
  out.second = inc[1];
  out.graph.remove_vertex(v);
  out.merged = out.graph.add_edge(a, b);
  return out;
}

struct PendantAttachment {
  MultiGraph graph;
  VertexId vertex = -1;
  std::vector<EdgeId> edges;
};

inline PendantAttachment attach_pendant(const MultiGraph& h, VertexId v, int multiplicity = 1) {
  h.require_vertex(v);
  if (multiplicity != 1 && multiplicity != 2)
    throw InputError("pendant multiplicity must be 1 or 2");
  PendantAttachment out{h};
  out.vertex = out.graph.add_vertex("pendant");
  for (int i = 0; i < multiplicity; ++i) out.edges.push_back(out.graph.add_edge(v, out.vertex));
  return out;
}

}  // namespace hamlab
