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

// Trail searches in multigraphs: closed trails through prescribed vertices,
// dominating closed trails, internally dominating trails and quasitrails.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/hypergraph.hpp"
#include "hamlab/search.hpp"

namespace hamlab {

namespace detail {

/// Edge-space DFS. A requirement is a vertex mask that the visited set (or
/// the interior set, for open trails) has to meet.
class TrailEngine {
 public:
  TrailEngine(const DenseMultigraph& d, BudgetMeter& meter) : d_(d), meter_(meter) {
    d.require_mask_width();
    inc_mask_.assign(d.n(), 0);
    for (int e = 0; e < d.m(); ++e) {
      ends_mask_.push_back(d.edge_ends_mask(e));
      inc_mask_[d.ends[e].first] |= bit(e);
      inc_mask_[d.ends[e].second] |= bit(e);
    }
  }

  /// Closed trail through `start` using only `allowed` vertices. 1 found,
  /// 0 absent, -1 budget spent.
  int closed(int start, Mask allowed, const std::vector<Mask>& reqs, Mask req_edges) {
    start_ = start;
    reqs_ = &reqs;
    req_edges_ = req_edges;
    allowed_edges_ = 0;
    for (int e = 0; e < d_.m(); ++e)
      if ((ends_mask_[e] & allowed) == ends_mask_[e]) allowed_edges_ |= bit(e);
    if ((req_edges & allowed_edges_) != req_edges) return 0;
    used_ = 0;
    seen_ = bit(start);
    verts_.assign(1, start);
    edges_.clear();
    return closed_dfs(start);
  }

  /// Trail starting with e1 (entered from `first`) and ending with e2.
  int open(int e1, int first, int e2, const std::vector<Mask>& reqs) {
    reqs_ = &reqs;
    e2_ = e2;
    used_ = bit(e1);
    const int v1 = d_.other_end(e1, first);
    seen_ = bit(v1);
    verts_ = {first, v1};
    edges_ = {e1};
    return open_dfs(v1);
  }

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<int>& edges() const { return edges_; }

  Mask reach(int from, Mask usable) const {
    Mask seen = bit(from), frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) {
        for_each_bit(inc_mask_[v] & usable, [&](int e) { next |= ends_mask_[e]; });
      });
      next &= ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

 private:
  bool satisfied(Mask seen) const {
    for (Mask q : *reqs_)
      if ((q & seen) == 0) return false;
    return true;
  }
  bool reachable(Mask seen, Mask r) const {
    for (Mask q : *reqs_)
      if ((q & seen) == 0 && (q & r) == 0) return false;
    return true;
  }

  int closed_dfs(int cur) {
    if (!meter_.tick()) return -1;
    if (cur == start_ && used_ != 0 && (used_ & req_edges_) == req_edges_ && satisfied(seen_)) return 1;
    const Mask free = allowed_edges_ & ~used_;
    const Mask r = reach(cur, free);
    if (((r >> start_) & 1) == 0 || !reachable(seen_, r)) return 0;
    for (Mask pending = req_edges_ & ~used_; pending != 0; pending &= pending - 1)
      if ((ends_mask_[lowest_bit(pending)] & r) == 0) return 0;
    for (const auto& [e, w] : d_.inc[cur]) {
      if (((free >> e) & 1) == 0) continue;
      const Mask saved = seen_;
      used_ |= bit(e);
      seen_ |= bit(w);
      verts_.push_back(w);
      edges_.push_back(e);
      const int res = closed_dfs(w);
      if (res == 1) return 1;
      verts_.pop_back();
      edges_.pop_back();
      seen_ = saved;
      used_ &= ~bit(e);
      if (res < 0) return -1;
    }
    return 0;
  }

  int open_dfs(int cur) {
    if (!meter_.tick()) return -1;
    if (((inc_mask_[cur] >> e2_) & 1) && satisfied(seen_)) {
      verts_.push_back(d_.other_end(e2_, cur));
      edges_.push_back(e2_);
      return 1;
    }
    const Mask free = ~used_ & ~bit(e2_) & (d_.m() == kMaskBits ? ~Mask{0} : bit(d_.m()) - 1);
    const Mask r = reach(cur, free);
    if ((ends_mask_[e2_] & r) == 0 || !reachable(seen_, r)) return 0;
    for (const auto& [e, w] : d_.inc[cur]) {
      if (((free >> e) & 1) == 0) continue;
      const Mask saved = seen_;
      used_ |= bit(e);
      seen_ |= bit(w);
      verts_.push_back(w);
      edges_.push_back(e);
      const int res = open_dfs(w);
      if (res == 1) return 1;
      verts_.pop_back();
      edges_.pop_back();
      seen_ = saved;
      used_ &= ~bit(e);
      if (res < 0) return -1;
    }
    return 0;
  }

  const DenseMultigraph& d_;
  BudgetMeter& meter_;
  std::vector<Mask> inc_mask_, ends_mask_;
  const std::vector<Mask>* reqs_ = nullptr;
  Mask req_edges_ = 0, allowed_edges_ = 0, used_ = 0, seen_ = 0;
  int start_ = 0, e2_ = 0;
  std::vector<int> verts_, edges_;
};

inline WalkCert to_cert(const DenseMultigraph& d, const std::vector<int>& verts, const std::vector<int>& edges,
                        WalkCert::Kind kind) {
  WalkCert c{kind, {}, {}};
  for (int v : verts) c.vertices.push_back(d.vertex_id[v]);
  for (int e : edges) c.edges.push_back(d.edge_id[e]);
  return c;
}

/// Closed trail meeting every requirement, or the trivial trail at the lowest
/// vertex lying in all of them when no edge is required.
inline WalkResult closed_trail_search(const DenseMultigraph& d, const std::vector<Mask>& reqs, Mask req_edges,
                                      Budget budget) {
  BudgetMeter meter(budget);
  WalkResult out;
  auto finish = [&](SearchStatus s) {
    out.status = s;
    out.nodes = meter.nodes();
    return out;
  };
  if (d.n() == 0) return finish(SearchStatus::Absent);
  const Mask everything = d.n() == kMaskBits ? ~Mask{0} : bit(d.n()) - 1;
  if (req_edges == 0) {
    Mask common = everything;
    for (Mask q : reqs) common &= q;
    if (common != 0) {
      out.cert = to_cert(d, {lowest_bit(common)}, {}, WalkCert::Kind::ClosedTrail);
      return finish(SearchStatus::Found);
    }
  }
  // Starts come from the tightest requirement; a start that failed is then
  // excluded, since a trail through it would have been found from it.
  Mask starts = everything;
  if (req_edges != 0) {
    starts = d.edge_ends_mask(lowest_bit(req_edges));
  } else {
    for (Mask q : reqs)
      if (popcount(q) < popcount(starts)) starts = q;
  }
  TrailEngine engine(d, meter);
  Mask allowed = everything;
  bool indeterminate = false;
  for (Mask s = starts; s != 0; s &= s - 1) {
    const int v = lowest_bit(s);
    const int r = engine.closed(v, allowed, reqs, req_edges);
    if (r == 1) {
      out.cert = to_cert(d, engine.vertices(), engine.edges(), WalkCert::Kind::ClosedTrail);
      return finish(SearchStatus::Found);
    }
    if (r < 0) indeterminate = true;
    allowed &= ~bit(v);
  }
  return finish(indeterminate ? SearchStatus::Indeterminate : SearchStatus::Absent);
}

inline std::vector<Mask> edge_requirements(const DenseMultigraph& d) {
  std::vector<Mask> reqs;
  for (int e = 0; e < d.m(); ++e) reqs.push_back(d.edge_ends_mask(e));
  return reqs;
}

}  // namespace detail

/// Closed trail T with A ⊆ V(T), containing `required` when given.
inline WalkResult closed_trail_through(const MultiGraph& h, const std::vector<VertexId>& a,
                                       std::optional<EdgeId> required = std::nullopt, Budget budget = {}) {
  const DenseMultigraph d(h);
  d.require_mask_width();
  std::vector<Mask> reqs;
  for (VertexId v : std::set<VertexId>(a.begin(), a.end())) reqs.push_back(bit(d.index_of(v)));
  const Mask req_edges = required ? bit(d.edge_index_of(*required)) : 0;
  return detail::closed_trail_search(d, reqs, req_edges, budget);
}

/// Closed trail whose vertex set meets every edge of h.
inline WalkResult dominating_closed_trail(const MultiGraph& h, Budget budget = {}) {
  const DenseMultigraph d(h);
  d.require_mask_width();
  return detail::closed_trail_search(d, detail::edge_requirements(d), 0, budget);
}

/// (e1,e2)-trail whose interior vertices (positions 1..k-1) meet every edge.
inline WalkResult idt(const MultiGraph& h, EdgeId e1, EdgeId e2, Budget budget = {}) {
  if (e1 == e2) throw InputError("idt needs two distinct edges");
  const DenseMultigraph d(h);
  d.require_mask_width();
  const int i1 = d.edge_index_of(e1), i2 = d.edge_index_of(e2);
  const std::vector<Mask> reqs = detail::edge_requirements(d);
  BudgetMeter meter(budget);
  detail::TrailEngine engine(d, meter);
  WalkResult out;
  bool indeterminate = false;
  const auto [a, b] = d.ends[i1];
  for (int first : a == b ? std::vector<int>{a} : std::vector<int>{a, b}) {
    const int r = engine.open(i1, first, i2, reqs);
    if (r == 1) {
      out.status = SearchStatus::Found;
      out.cert = detail::to_cert(d, engine.vertices(), engine.edges(), WalkCert::Kind::OpenTrail);
      out.nodes = meter.nodes();
      return out;
    }
    if (r < 0) indeterminate = true;
  }
  out.status = indeterminate ? SearchStatus::Indeterminate : SearchStatus::Absent;
  out.nodes = meter.nodes();
  return out;
}

// ---- validation -----------------------------------------------------------

/// Consecutive triples are incident in h.
inline bool is_walk(const MultiGraph& h, const WalkCert& w) {
  if (w.vertices.empty() || w.edges.size() + 1 != w.vertices.size()) return false;
  for (VertexId v : w.vertices)
    if (!h.has_vertex(v)) return false;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (!h.has_edge(w.edges[i])) return false;
    const Edge& e = h.edge(w.edges[i]);
    const VertexId x = w.vertices[i], y = w.vertices[i + 1];
    if (!((e.u == x && e.v == y) || (e.u == y && e.v == x))) return false;
  }
  return true;
}

inline std::map<EdgeId, int> edge_use(const WalkCert& w) {
  std::map<EdgeId, int> use;
  for (EdgeId e : w.edges) ++use[e];
  return use;
}

inline bool is_trail(const MultiGraph& h, const WalkCert& w) {
  if (!is_walk(h, w)) return false;
  for (const auto& [e, k] : edge_use(w))
    if (k > 1) return false;
  return true;
}

inline bool is_closed_trail(const MultiGraph& h, const WalkCert& w) { return is_trail(h, w) && w.closed(); }

/// Every edge of h has an endvertex among `vs`.
inline bool dominates_edges(const MultiGraph& h, const std::set<VertexId>& vs) {
  for (const Edge& e : h.edges())
    if (!vs.count(e.u) && !vs.count(e.v)) return false;
  return true;
}

inline bool is_dominating(const MultiGraph& h, const WalkCert& w) {
  return dominates_edges(h, std::set<VertexId>(w.vertices.begin(), w.vertices.end()));
}

inline bool is_dominating(const IncidenceGraph& ig, const WalkCert& w) { return is_dominating(ig.graph, w); }

inline bool is_dominating_closed_trail(const MultiGraph& h, const WalkCert& w) {
  return is_closed_trail(h, w) && is_dominating(h, w);
}

inline bool is_idt(const MultiGraph& h, EdgeId e1, EdgeId e2, const WalkCert& w) {
  if (e1 == e2 || !is_trail(h, w) || w.edges.size() < 2) return false;
  if (w.edges.front() != e1 || w.edges.back() != e2) return false;
  return dominates_edges(h, std::set<VertexId>(w.vertices.begin() + 1, w.vertices.end() - 1));
}

/// Closed walk using each edge at most twice, where a twice-used edge e has
/// an endvertex in W that is visited once with e as its predecessor and
/// successor edge.
inline bool validate_quasitrail(const MultiGraph& g, const std::set<VertexId>& white, const WalkCert& w) {
  if (!is_walk(g, w) || !w.closed()) return false;
  const int k = static_cast<int>(w.edges.size());
  std::map<VertexId, int> visits;
  for (int i = 0; i < std::max(k, 1); ++i) ++visits[w.vertices[i]];
  for (const auto& [e, uses] : edge_use(w)) {
    if (uses == 1) continue;
    if (uses > 2) return false;
    bool pivot = false;
    for (int i = 0; i < k && !pivot; ++i) {
      const VertexId v = w.vertices[i];
      pivot = white.count(v) && visits[v] == 1 && w.edges[(i + k - 1) % k] == e && w.edges[i] == e;
    }
    if (!pivot) return false;
  }
  return true;
}

inline bool validate_quasitrail(const IncidenceGraph& ig, const std::set<VertexId>& white, const WalkCert& w) {
  return validate_quasitrail(ig.graph, white, w);
}

inline std::set<VertexId> white_set(const IncidenceGraph& ig) {
  return std::set<VertexId>(ig.white_for.begin(), ig.white_for.end());
}

/// Inserts a detour anchor, e, w, e, anchor after the first occurrence of
/// each anchor; detours sharing an anchor keep the order of `targets`.
inline WalkCert extend_with_detours(const MultiGraph& g, const WalkCert& walk, const std::vector<VertexId>& targets,
                                    const std::map<VertexId, VertexId>& anchors) {
  const std::set<VertexId> on_walk(walk.vertices.begin(), walk.vertices.end());
  std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> at;
  for (VertexId t : targets) {
    if (on_walk.count(t)) throw InputError("detour target " + std::to_string(t) + " is already visited");
    const auto it = anchors.find(t);
    if (it == anchors.end()) throw InputError("no anchor for detour target " + std::to_string(t));
    const VertexId a = it->second;
    if (!on_walk.count(a)) throw InputError("anchor " + std::to_string(a) + " is not on the walk");
    std::optional<EdgeId> link;
    for (EdgeId e : g.incident_edges(a))
      if (g.edge(e).other(a) == t && (!link || e < *link)) link = e;
    if (!link) throw InputError("anchor " + std::to_string(a) + " is not adjacent to " + std::to_string(t));
    at[a].emplace_back(*link, t);
  }
  if (targets.empty()) return walk;
  WalkCert out{WalkCert::Kind::Quasitrail, {}, {}};
  std::set<VertexId> done;
  for (std::size_t i = 0; i < walk.vertices.size(); ++i) {
    const VertexId v = walk.vertices[i];
    out.vertices.push_back(v);
    if (!done.count(v) && at.count(v)) {
      done.insert(v);
      for (auto [e, t] : at[v]) {
        out.edges.insert(out.edges.end(), {e, e});
        out.vertices.insert(out.vertices.end(), {t, v});
      }
    }
    if (i < walk.edges.size()) out.edges.push_back(walk.edges[i]);
  }
  return out;
}

/// Dominating closed W-quasitrail of g: a closed trail T such that every
/// white vertex has a closed neighbour on T, then one detour per white
/// vertex missed by T.
inline WalkResult dominating_quasitrail(const MultiGraph& g, const std::set<VertexId>& white, Budget budget = {}) {
  const DenseMultigraph d(g);
  d.require_mask_width();
  auto closed_nbhd = [&](int v) {
    Mask m = bit(v);
    for (const auto& i : d.inc[v]) m |= bit(i.other);
    return m;
  };
  std::vector<Mask> reqs;
  for (int e = 0; e < d.m(); ++e) {
    const auto [a, b] = d.ends[e];
    const bool wa = white.count(d.vertex_id[a]) > 0, wb = white.count(d.vertex_id[b]) > 0;
    if (a != b && (wa || wb))
      reqs.push_back((wa ? closed_nbhd(a) : 0) | (wb ? closed_nbhd(b) : 0));
    else
      reqs.push_back(d.edge_ends_mask(e));
  }
  std::sort(reqs.begin(), reqs.end());
  reqs.erase(std::unique(reqs.begin(), reqs.end()), reqs.end());
  WalkResult r = detail::closed_trail_search(d, reqs, 0, budget);
  if (!r.found()) return r;
  const WalkCert& t = *r.cert;
  std::vector<VertexId> targets;
  std::map<VertexId, VertexId> anchors;
  const std::set<VertexId> on(t.vertices.begin(), t.vertices.end());
  auto anchor_of = [&](VertexId w) -> std::optional<VertexId> {
    if (!white.count(w)) return std::nullopt;
    for (VertexId a : t.vertices)
      if (g.multiplicity(a, w) > 0) return a;
    return std::nullopt;
  };
  for (const Edge& e : g.edges()) {
    if (on.count(e.u) || on.count(e.v) || anchors.count(e.u) || anchors.count(e.v)) continue;
    for (VertexId w : {e.u, e.v}) {
      if (const auto a = anchor_of(w)) {
        anchors[w] = *a;
        targets.push_back(w);
        break;
      }
    }
  }
  r.cert = extend_with_detours(g, t, targets, anchors);
  r.cert->kind = WalkCert::Kind::Quasitrail;
  return r;
}

inline WalkResult dominating_quasitrail(const IncidenceGraph& ig, Budget budget = {}) {
  return dominating_quasitrail(ig.graph, white_set(ig), budget);
}

inline bool is_dominating_quasitrail(const IncidenceGraph& ig, const WalkCert& w) {
  return validate_quasitrail(ig, white_set(ig), w) && is_dominating(ig, w);
}

}  // namespace hamlab
