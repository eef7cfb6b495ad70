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

// Rank-3 hypergraphs, their incidence graphs IG, the reduced graph IG' and
// the surgery that makes IG' essentially 3-edge-connected.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamlab/canonical.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/search.hpp"
#include "hamlab/structure.hpp"

namespace hamlab {

/// Hypergraph on vertices 0..n-1 whose hyperedges have 2 or 3 distinct
/// vertices. Repeated hyperedges are allowed.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  explicit Hypergraph3(int n) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
  }
  Hypergraph3(int n, const std::vector<std::vector<int>>& hyperedges) : Hypergraph3(n) {
    for (const auto& e : hyperedges) add(e);
  }

  int add(std::vector<int> e) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2 || e.size() > 3) throw InputError("hyperedges must have 2 or 3 vertices");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) throw InputError("repeated vertex in hyperedge");
    for (int v : e)
      if (v < 0 || v >= n_) throw InputError("hyperedge vertex " + std::to_string(v) + " out of range");
    hyperedges_.push_back(std::move(e));
    return static_cast<int>(hyperedges_.size()) - 1;
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(hyperedges_.size()); }
  const std::vector<int>& hyperedge(int i) const { return hyperedges_.at(i); }
  const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }
  int rank() const {
    int r = 0;
    for (const auto& e : hyperedges_) r = std::max(r, static_cast<int>(e.size()));
    return r;
  }
  bool intersects(int i, int j) const {
    for (int v : hyperedges_[i])
      if (std::binary_search(hyperedges_[j].begin(), hyperedges_[j].end(), v)) return true;
    return false;
  }

  /// Every multigraph is a 2-hypergraph; vertices are renumbered in id order.
  static Hypergraph3 from_multigraph(const MultiGraph& h) {
    const DenseMultigraph d(h);
    Hypergraph3 out(d.n());
    for (auto [a, b] : d.ends) {
      if (a == b) throw InputError("loops are not hyperedges");
      out.add({a, b});
    }
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> hyperedges_;
};

/// IG(H): black vertex i for each hypergraph vertex (id i), white vertex
/// n + j (labeled "white") for hyperedge j, adjacent to its members.
struct IncidenceGraph {
  MultiGraph graph;
  int blacks = 0;
  std::vector<VertexId> white_for;

  bool is_white(VertexId v) const { return v >= blacks; }
  int hyperedge_of(VertexId white) const { return white - blacks; }
  std::vector<VertexId> whites() const { return white_for; }
};

inline IncidenceGraph incidence_graph(const Hypergraph3& hg) {
  IncidenceGraph ig;
  ig.blacks = hg.n();
  ig.graph = MultiGraph::with_vertices(hg.n());
  for (int j = 0; j < hg.size(); ++j) {
    const VertexId w = ig.graph.add_vertex("white");
    ig.white_for.push_back(w);
    for (int v : hg.hyperedge(j)) ig.graph.add_edge(w, v);
  }
  return ig;
}

/// Isomorphism-invariant form of a hypergraph (colored incidence graph).
inline std::string canonical_form(const Hypergraph3& hg) {
  const IncidenceGraph ig = incidence_graph(hg);
  std::vector<int> colors(ig.graph.num_vertices(), 0);
  for (int j = 0; j < hg.size(); ++j) colors[hg.n() + j] = 1;
  return canonical_form(ig.graph, colors);
}

/// IG' : every degree-2 white vertex suppressed. Vertex ids persist, so
/// black vertex i is still i and kept whites are n + j.
struct ReducedIncidence {
  MultiGraph graph;
  int blacks = 0;
  std::map<EdgeId, int> hyperedge_of;  // every edge of IG' -> the hyperedge it belongs to
  struct Restored {
    VertexId white;
    EdgeId first, second;  // IG edges
  };
  std::map<EdgeId, Restored> restored;  // restored black-black edge -> its IG path

  bool is_white(VertexId v) const { return v >= blacks; }
};

inline ReducedIncidence reduce_incidence(const IncidenceGraph& ig) {
  ReducedIncidence out{ig.graph, ig.blacks, {}, {}};
  for (std::size_t j = 0; j < ig.white_for.size(); ++j) {
    const VertexId w = ig.white_for[j];
    const auto inc = ig.graph.incident_edges(w);
    if (inc.size() == 2) {
      const Suppression s = suppress_vertex(out.graph, w);
      out.graph = s.graph;
      out.hyperedge_of[s.merged] = static_cast<int>(j);
      out.restored[s.merged] = {w, s.first, s.second};
    } else {
      for (EdgeId e : inc) out.hyperedge_of[e] = static_cast<int>(j);
    }
  }
  return out;
}

/// Expands restored edges of a walk in IG' back into black-white-black steps.
inline WalkCert lift_reduced_walk(const IncidenceGraph& ig, const ReducedIncidence& r, const WalkCert& w) {
  WalkCert out{w.kind, {w.vertices.front()}, {}};
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const auto it = r.restored.find(w.edges[i]);
    if (it == r.restored.end()) {
      out.edges.push_back(w.edges[i]);
      out.vertices.push_back(w.vertices[i + 1]);
      continue;
    }
    const auto& [white, first, second] = it->second;
    const bool forward = ig.graph.edge(first).touches(w.vertices[i]);
    out.edges.push_back(forward ? first : second);
    out.vertices.push_back(white);
    out.edges.push_back(forward ? second : first);
    out.vertices.push_back(w.vertices[i + 1]);
  }
  return out;
}

struct SurgeryRound {
  std::vector<EdgeId> cut;          // X'
  std::vector<VertexId> deleted;    // S1
  VertexId v1 = -1, v2 = -1;        // attachment vertices on the surviving side
  std::optional<EdgeId> added;      // v1 v2 when v1 != v2
  MultiGraph before;                // graph the round started from
};

struct SurgeryTrace {
  std::vector<SurgeryRound> rounds;
  std::map<EdgeId, EdgeId> edge_remap;  // deleted edge -> e0 in the final graph
};

struct Essentialized {
  MultiGraph graph;
  SurgeryTrace trace;
  std::map<EdgeId, int> hyperedge_of;
};

namespace detail {

inline std::vector<std::vector<VertexId>> components_without(const MultiGraph& g, const std::set<EdgeId>& cut) {
  std::map<VertexId, int> comp;
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : g.vertices()) {
    if (comp.count(s)) continue;
    const int c = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (EdgeId e : g.incident_edges(v)) {
        if (cut.count(e)) continue;
        const VertexId w = g.edge(e).other(v);
        if (!comp.count(w)) {
          comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

inline MultiGraph induced(const MultiGraph& g, const std::set<VertexId>& keep) {
  MultiGraph out;
  for (VertexId v : keep) out.add_vertex_with_id(v);
  for (const Edge& e : g.edges())
    if (keep.count(e.u) && keep.count(e.v)) out.add_edge_with_id(e.id, e.u, e.v);
  return out;
}

}  // namespace detail

/// Repeatedly removes a side S1 of an essential edge cut X' with |X'| < 3
/// whose edges all belong to hyperedges of X', joining the two attachment
/// vertices on the other side. When both sides qualify the smaller one goes
/// (ties: lower canonical form). Throws StructuralViolation when no side
/// qualifies.
inline Essentialized essentialize(const ReducedIncidence& r) {
  Essentialized out{r.graph, {}, r.hyperedge_of};
  MultiGraph& g = out.graph;
  while (g.num_edges() >= 4) {
    const EdgeCutReport rep = is_essentially_k_edge_connected(g, 3);
    if (rep.holds) break;
    const std::set<EdgeId> cut(rep.cut.begin(), rep.cut.end());
    std::set<int> x;
    for (EdgeId e : cut) x.insert(out.hyperedge_of.at(e));
    std::vector<std::vector<VertexId>> candidates;
    for (const auto& comp : detail::components_without(g, cut)) {
      const std::set<VertexId> in(comp.begin(), comp.end());
      bool nontrivial = false, inside_x = true;
      for (const Edge& e : g.edges()) {
        if (cut.count(e.id) || !in.count(e.u) || !in.count(e.v)) continue;
        nontrivial = true;
        inside_x = inside_x && x.count(out.hyperedge_of.at(e.id));
      }
      if (nontrivial && inside_x) candidates.push_back(comp);
    }
    if (candidates.empty()) {
      std::string ids;
      for (EdgeId e : cut) ids += (ids.empty() ? "" : ",") + std::to_string(e);
      throw StructuralViolation("no side of the essential cut {" + ids + "} lies inside its hyperedges");
    }
    std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return canonical_form(detail::induced(g, {a.begin(), a.end()})) <
             canonical_form(detail::induced(g, {b.begin(), b.end()}));
    });
    const std::set<VertexId> s1(candidates.front().begin(), candidates.front().end());
    SurgeryRound round;
    round.cut.assign(cut.begin(), cut.end());
    round.deleted = candidates.front();
    round.before = g;
    std::vector<VertexId> attach;
    EdgeId first_cut = -1;
    for (EdgeId e : cut) {
      const Edge& ed = g.edge(e);
      if (s1.count(ed.u) == s1.count(ed.v)) continue;
      attach.push_back(s1.count(ed.u) ? ed.v : ed.u);
      if (first_cut < 0) first_cut = e;
    }
    std::set<EdgeId> removed;
    for (const Edge& e : g.edges())
      if (s1.count(e.u) || s1.count(e.v)) removed.insert(e.id);
    for (VertexId v : s1) g.remove_vertex(v);
    if (!attach.empty()) {
      round.v1 = attach.front();
      round.v2 = attach.back();
    }
    EdgeId e0 = -1;
    if (round.v1 >= 0 && round.v1 != round.v2) {
      e0 = g.add_edge(round.v1, round.v2);
      round.added = e0;
      out.hyperedge_of[e0] = out.hyperedge_of.at(first_cut);
    } else if (round.v1 >= 0) {
      const auto inc = g.incident_edges(round.v1);
      if (!inc.empty()) e0 = inc.front();
    }
    for (auto& [from, to] : out.trace.edge_remap)
      if (removed.count(to)) to = e0;
    for (EdgeId e : removed) out.trace.edge_remap[e] = e0;
    out.trace.rounds.push_back(std::move(round));
  }
  if (g.num_edges() >= 4 && !is_essentially_k_edge_connected(g, 3).holds)
    throw StructuralViolation("surgery ended without essential 3-edge-connectivity");
  return out;
}

/// Undoes the surgery on a trail of the final graph: an added edge v1 v2 is
/// replaced by a path through the deleted side of its round.
inline WalkCert lift_surgery_walk(const Essentialized& ess, const WalkCert& w) {
  WalkCert cur = w;
  for (auto it = ess.trace.rounds.rbegin(); it != ess.trace.rounds.rend(); ++it) {
    const SurgeryRound& round = *it;
    if (!round.added) continue;
    const auto pos = std::find(cur.edges.begin(), cur.edges.end(), *round.added);
    if (pos == cur.edges.end()) continue;
    const std::size_t i = pos - cur.edges.begin();
    const VertexId from = cur.vertices[i], to = cur.vertices[i + 1];
    // BFS from `from` through S1 to `to`, entering and leaving by cut edges.
    const std::set<VertexId> s1(round.deleted.begin(), round.deleted.end());
    const MultiGraph& g = round.before;
    std::map<VertexId, std::pair<VertexId, EdgeId>> parent;
    std::vector<VertexId> queue{from};
    parent[from] = {-1, -1};
    for (std::size_t q = 0; q < queue.size() && !parent.count(to); ++q) {
      const VertexId v = queue[q];
      for (EdgeId e : g.incident_edges(v)) {
        const VertexId x = g.edge(e).other(v);
        if (parent.count(x) || (!s1.count(x) && x != to) || (v != from && !s1.count(v))) continue;
        if (v == from && !s1.count(x)) continue;
        parent[x] = {v, e};
        queue.push_back(x);
      }
    }
    if (!parent.count(to)) throw StructuralViolation("deleted side does not connect its attachment vertices");
    std::vector<VertexId> vs;
    std::vector<EdgeId> es;
    for (VertexId v = to; v != from; v = parent[v].first) {
      vs.push_back(v);
      es.push_back(parent[v].second);
    }
    std::reverse(vs.begin(), vs.end());
    std::reverse(es.begin(), es.end());
    cur.edges.erase(cur.edges.begin() + i);
    cur.edges.insert(cur.edges.begin() + i, es.begin(), es.end());
    cur.vertices.erase(cur.vertices.begin() + i + 1);
    cur.vertices.insert(cur.vertices.begin() + i + 1, vs.begin(), vs.end());
  }
  return cur;
}

}  // namespace hamlab
