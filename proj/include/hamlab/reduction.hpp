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

// The core co(H): pendant edges removed and degree-2 vertices suppressed
// until neither applies, with the induced map from E(H) to E(co(H)).

#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/search.hpp"
#include "hamlab/structure.hpp"
#include "hamlab/trails.hpp"

namespace hamlab {

struct ReductionOp {
  enum class Kind { DeletePendant, DeleteLoop, Suppress };
  Kind kind = Kind::Suppress;
  VertexId vertex = -1;   // suppressed vertex, pendant leaf, or loop vertex
  VertexId support = -1;  // pendant support; for Suppress the far end of `first`
  VertexId far = -1;      // Suppress only: the far end of `second`
  EdgeId first = -1;      // the removed edge (pendant / loop) or first merged edge
  EdgeId second = -1;
  EdgeId merged = -1;     // Suppress only: the new edge support--far
};

inline std::string to_string(ReductionOp::Kind k) {
  switch (k) {
    case ReductionOp::Kind::DeletePendant: return "delete_pendant";
    case ReductionOp::Kind::DeleteLoop: return "delete_loop";
    case ReductionOp::Kind::Suppress: return "suppress";
  }
  return "?";
}

struct ReductionTrace {
  std::vector<ReductionOp> ops;
  std::map<EdgeId, EdgeId> edge_map;        // E(H) -> E(co(H)); absent only when co(H) has no edges
  std::map<VertexId, VertexId> vertex_map;  // surviving vertices (ids persist)
};

struct Core {
  MultiGraph graph;
  ReductionTrace trace;
};

/// How the next operation is picked. The default deletes the lowest-id loop,
/// then the lowest-id pendant edge, then suppresses the lowest-id degree-2
/// vertex; a seed instead picks uniformly among all applicable operations.
struct ReductionOrder {
  std::optional<unsigned> seed;
};

namespace detail {

struct PendingOp {
  ReductionOp::Kind kind;
  EdgeId edge;      // loop or pendant edge
  VertexId vertex;  // vertex to suppress
};

inline std::vector<PendingOp> applicable_ops(const MultiGraph& g, bool all) {
  std::vector<PendingOp> out;
  for (const Edge& e : g.edges()) {
    if (e.is_loop() && g.degree(e.u) > 2) {
      out.push_back({ReductionOp::Kind::DeleteLoop, e.id, -1});
      if (!all) return out;
    }
  }
  for (const Edge& e : g.edges()) {
    if (!e.is_loop() && (g.degree(e.u) == 1 || g.degree(e.v) == 1)) {
      out.push_back({ReductionOp::Kind::DeletePendant, e.id, -1});
      if (!all) return out;
    }
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 2) continue;
    if (g.incident_edges(v).size() == 1) throw DegenerateCore("vertex " + std::to_string(v) + " carries only a loop");
    out.push_back({ReductionOp::Kind::Suppress, -1, v});
    if (!all) return out;
  }
  return out;
}

}  // namespace detail

/// co(h) with its trace. Throws InputError for empty or disconnected input
/// and DegenerateCore when a cycle collapses onto a single looped vertex.
inline Core core(const MultiGraph& h, ReductionOrder order = {}) {
  if (h.num_vertices() == 0) throw InputError("core of the empty graph");
  if (!is_connected(h)) throw InputError("core needs a connected multigraph");
  Core out{h, {}};
  MultiGraph& g = out.graph;
  std::optional<std::mt19937> rng;
  if (order.seed) rng.emplace(*order.seed);

  // Each original edge tracks either a current edge or an anchor vertex; an
  // anchored edge ends up at the smallest-id core edge at that vertex.
  struct Token {
    bool anchored = false;
    int id = -1;
    bool operator==(const Token&) const = default;
  };
  std::map<EdgeId, Token> token;
  for (const Edge& e : h.edges()) token[e.id] = {false, e.id};
  auto retarget = [&](Token from, Token to) {
    for (auto& [orig, t] : token)
      if (t == from) t = to;
  };
  auto edge_tok = [](EdgeId e) { return Token{false, e}; };
  auto vertex_tok = [](VertexId v) { return Token{true, v}; };

  while (true) {
    std::vector<detail::PendingOp> ops;
    try {
      ops = detail::applicable_ops(g, rng.has_value());
    } catch (const DegenerateCore& e) {
      throw DegenerateCore(std::string(e.what()) + " after " + std::to_string(out.trace.ops.size()) + " operations");
    }
    if (ops.empty()) break;
    const detail::PendingOp pick = rng ? ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(*rng)] : ops[0];
    ReductionOp op;
    op.kind = pick.kind;
    switch (pick.kind) {
      case ReductionOp::Kind::DeleteLoop: {
        op.vertex = op.support = g.edge(pick.edge).u;
        op.first = pick.edge;
        g.remove_edge(pick.edge);
        retarget(edge_tok(pick.edge), vertex_tok(op.vertex));
        break;
      }
      case ReductionOp::Kind::DeletePendant: {
        const Edge e = g.edge(pick.edge);
        // When both ends are leaves the higher id goes.
        const bool u_leaf = g.degree(e.u) == 1, v_leaf = g.degree(e.v) == 1;
        op.vertex = (u_leaf && v_leaf) ? std::max(e.u, e.v) : (u_leaf ? e.u : e.v);
        op.support = e.other(op.vertex);
        op.first = e.id;
        g.remove_vertex(op.vertex);
        retarget(edge_tok(e.id), vertex_tok(op.support));
        retarget(vertex_tok(op.vertex), vertex_tok(op.support));
        break;
      }
      case ReductionOp::Kind::Suppress: {
        const auto inc = g.incident_edges(pick.vertex);
        op.vertex = pick.vertex;
        op.first = inc[0];
        op.second = inc[1];
        op.support = g.edge(inc[0]).other(op.vertex);
        op.far = g.edge(inc[1]).other(op.vertex);
        Suppression s = suppress_vertex(g, op.vertex);
        g = std::move(s.graph);
        op.merged = s.merged;
        retarget(edge_tok(op.first), edge_tok(op.merged));
        retarget(edge_tok(op.second), edge_tok(op.merged));
        retarget(vertex_tok(op.vertex), edge_tok(op.merged));
        break;
      }
    }
    out.trace.ops.push_back(op);
  }

  for (VertexId v : g.vertices()) out.trace.vertex_map[v] = v;
  for (const auto& [orig, t] : token) {
    if (!t.anchored) {
      out.trace.edge_map[orig] = t.id;
    } else {
      const auto inc = g.incident_edges(t.id);
      if (!inc.empty()) out.trace.edge_map[orig] = inc.front();
    }
  }
  if (g.num_vertices() > 1 && h.num_edges() >= 4 && h.num_edges() <= kMaskBits && h.num_vertices() <= kMaskBits &&
      !edge_connectivity_at_least(g, 3).holds &&
      is_essentially_k_edge_connected(h, 3).holds)
    throw StructuralViolation("core of an essentially 3-edge-connected multigraph has a small edge cut");
  return out;
}

/// Image e' of an edge of H in co(H).
inline EdgeId map_edge_to_core(const ReductionTrace& trace, EdgeId e) {
  const auto it = trace.edge_map.find(e);
  if (it == trace.edge_map.end()) throw InputError("edge " + std::to_string(e) + " has no image in the core");
  return it->second;
}

namespace detail {

/// Walk in H realizing the traversal of working-graph edge `e` starting at
/// `from`; appends (edge, vertex) steps.
inline void expand_edge(const std::map<EdgeId, const ReductionOp*>& made_by, const MultiGraph& h, EdgeId e,
                        VertexId from, std::vector<EdgeId>& edges, std::vector<VertexId>& verts) {
  const auto it = made_by.find(e);
  if (it == made_by.end()) {
    const Edge& ed = h.edge(e);
    edges.push_back(e);
    verts.push_back(ed.other(from));
    return;
  }
  const ReductionOp& op = *it->second;
  if (from == op.support) {
    expand_edge(made_by, h, op.first, from, edges, verts);
    expand_edge(made_by, h, op.second, op.vertex, edges, verts);
  } else {
    expand_edge(made_by, h, op.second, from, edges, verts);
    expand_edge(made_by, h, op.first, op.vertex, edges, verts);
  }
}

}  // namespace detail

/// Expands every suppressed edge of a closed trail of co(H) back into its
/// path in H.
inline WalkCert lift_core_trail(const MultiGraph& h, const Core& c, const WalkCert& t) {
  if (!is_closed_trail(c.graph, t)) throw InputError("lift_core_trail needs a closed trail of the core");
  std::map<EdgeId, const ReductionOp*> made_by;
  for (const ReductionOp& op : c.trace.ops)
    if (op.kind == ReductionOp::Kind::Suppress) made_by[op.merged] = &op;
  WalkCert out{WalkCert::Kind::ClosedTrail, {t.vertices.front()}, {}};
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    detail::expand_edge(made_by, h, t.edges[i], t.vertices[i], out.edges, out.vertices);
  return out;
}

/// Lifts an open trail of co(H) the same way (used for the IDT pipeline).
inline WalkCert lift_core_walk(const MultiGraph& h, const Core& c, const WalkCert& t) {
  if (!is_trail(c.graph, t)) throw InputError("lift_core_walk needs a trail of the core");
  std::map<EdgeId, const ReductionOp*> made_by;
  for (const ReductionOp& op : c.trace.ops)
    if (op.kind == ReductionOp::Kind::Suppress) made_by[op.merged] = &op;
  WalkCert out{t.kind, {t.vertices.front()}, {}};
  for (std::size_t i = 0; i < t.edges.size(); ++i)
    detail::expand_edge(made_by, h, t.edges[i], t.vertices[i], out.edges, out.vertices);
  return out;
}

struct JoinSubdivision {
  MultiGraph graph;
  EdgeId tilde = -1;
  VertexId s1 = -1, s2 = -1;            // fresh vertices (-1 when f1 == f2)
  std::map<EdgeId, EdgeId> provenance;  // edge of the result -> edge of M (tilde excluded)
};

/// f1 == f2: M itself with tilde = f1. Otherwise both edges are subdivided
/// and the two new vertices joined by tilde.
inline JoinSubdivision join_subdivision(const MultiGraph& m, EdgeId f1, EdgeId f2) {
  if (!m.has_edge(f1) || !m.has_edge(f2)) throw InputError("join_subdivision: unknown edge");
  JoinSubdivision out{m, f1, -1, -1, {}};
  for (const Edge& e : m.edges()) out.provenance[e.id] = e.id;
  if (f1 == f2) return out;
  const Subdivision a = subdivide_edge(m, f1);
  const Subdivision b = subdivide_edge(a.graph, f2);
  out.graph = b.graph;
  out.s1 = a.vertex;
  out.s2 = b.vertex;
  out.provenance.erase(f1);
  out.provenance.erase(f2);
  out.provenance[a.first] = out.provenance[a.second] = f1;
  out.provenance[b.first] = out.provenance[b.second] = f2;
  out.tilde = out.graph.add_edge(a.vertex, b.vertex);
  return out;
}

}  // namespace hamlab
