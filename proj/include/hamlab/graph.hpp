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

// Graph carriers.
//
//  * MultiGraph: labeled multigraph with stable integer vertex/edge ids,
//    parallel edges and loops. Used for preimages, cores, incidence graphs.
//  * SimpleGraph: dense simple graph on vertices 0..n-1 (n <= 64) with
//    bitmask adjacency. Used for line graphs and claw-free graphs.
//  * DenseMultigraph: a compacted, index-based view of a MultiGraph for
//    the search routines.
//
// Loops count twice towards the degree of their vertex.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/error.hpp"

namespace hamlab {

using VertexId = int;
using EdgeId = int;
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline constexpr Mask bit(int i) { return Mask{1} << i; }
/// Bits strictly above position i.
inline constexpr Mask above(int i) { return i >= kMaskBits - 1 ? Mask{0} : ~((Mask{1} << (i + 1)) - 1); }

/// Calls f(i) for every set bit i of m, in increasing order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int i = std::countr_zero(m);
    m &= m - 1;
    f(i);
  }
}

struct Edge {
  EdgeId id = -1;
  VertexId u = -1;
  VertexId v = -1;

  bool is_loop() const { return u == v; }
  bool touches(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

class MultiGraph {
 public:
  MultiGraph() = default;

  /// Graph with vertices 0..n-1 and no edges.
  static MultiGraph with_vertices(int n) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    return g;
  }

  VertexId add_vertex(const std::string& label = {}) {
    const VertexId id = next_vertex_id_;
    add_vertex_with_id(id);
    if (!label.empty()) vertex_labels_[id] = label;
    return id;
  }

  void add_vertex_with_id(VertexId id) {
    if (id < 0) throw InputError("negative vertex id");
    if (has_vertex(id)) throw InputError("duplicate vertex id " + std::to_string(id));
    vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), id), id);
    next_vertex_id_ = std::max(next_vertex_id_, id + 1);
  }

  EdgeId add_edge(VertexId u, VertexId v, const std::string& label = {}) {
    require_vertex(u);
    require_vertex(v);
    const EdgeId id = next_edge_id_++;
    edges_.push_back(Edge{id, u, v});
    if (!label.empty()) edge_labels_[id] = label;
    return id;
  }

  /// Adds an edge with a caller-chosen id (must be fresh).
  void add_edge_with_id(EdgeId id, VertexId u, VertexId v) {
    require_vertex(u);
    require_vertex(v);
    if (has_edge(id)) throw InputError("duplicate edge id " + std::to_string(id));
    const Edge e{id, u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& a, EdgeId b) { return a.id < b; });
    edges_.insert(it, e);
    next_edge_id_ = std::max(next_edge_id_, id + 1);
  }

  void remove_edge(EdgeId id) {
    auto it = find_edge(id);
    if (it == edges_.end()) throw InputError("unknown edge id " + std::to_string(id));
    edges_.erase(it);
    edge_labels_.erase(id);
  }

  /// Removes a vertex together with all incident edges.
  void remove_vertex(VertexId v) {
    require_vertex(v);
    std::erase_if(edges_, [&](const Edge& e) {
      if (!e.touches(v)) return false;
      edge_labels_.erase(e.id);
      return true;
    });
    vertices_.erase(std::lower_bound(vertices_.begin(), vertices_.end(), v));
    vertex_labels_.erase(v);
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  /// Edges in increasing id order.
  const std::vector<Edge>& edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool has_edge(EdgeId e) const { return find_edge(e) != edges_.end(); }

  const Edge& edge(EdgeId id) const {
    auto it = find_edge(id);
    if (it == edges_.end()) throw InputError("unknown edge id " + std::to_string(id));
    return *it;
  }

  void require_vertex(VertexId v) const {
    if (!has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
  }

  int degree(VertexId v) const {
    require_vertex(v);
    int d = 0;
    for (const Edge& e : edges_) d += (e.u == v) + (e.v == v);
    return d;
  }

  std::vector<EdgeId> incident_edges(VertexId v) const {
    std::vector<EdgeId> out;
    for (const Edge& e : edges_)
      if (e.touches(v)) out.push_back(e.id);
    return out;
  }

  int multiplicity(VertexId a, VertexId b) const {
    int k = 0;
    for (const Edge& e : edges_)
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) ++k;
    return k;
  }

  bool has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
  }

  bool is_simple() const {
    if (has_loops()) return false;
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const Edge& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
  }

  VertexId next_vertex_id() const { return next_vertex_id_; }
  EdgeId next_edge_id() const { return next_edge_id_; }

  void set_vertex_label(VertexId v, const std::string& label) {
    require_vertex(v);
    vertex_labels_[v] = label;
  }
  void set_edge_label(EdgeId e, const std::string& label) {
    if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
    edge_labels_[e] = label;
  }
  std::string vertex_label(VertexId v) const {
    auto it = vertex_labels_.find(v);
    return it == vertex_labels_.end() ? std::string{} : it->second;
  }
  std::string edge_label(EdgeId e) const {
    auto it = edge_labels_.find(e);
    return it == edge_labels_.end() ? std::string{} : it->second;
  }
  const std::map<VertexId, std::string>& vertex_labels() const { return vertex_labels_; }
  const std::map<EdgeId, std::string>& edge_labels() const { return edge_labels_; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const Edge& x = a.edges_[i];
      const Edge& y = b.edges_[i];
      if (x.id != y.id || std::minmax(x.u, x.v) != std::minmax(y.u, y.v)) return false;
    }
    return true;
  }

 private:
  std::vector<Edge>::const_iterator find_edge(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& a, EdgeId b) { return a.id < b; });
    return (it != edges_.end() && it->id == id) ? it : edges_.end();
  }
  std::vector<Edge>::iterator find_edge(EdgeId id) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& a, EdgeId b) { return a.id < b; });
    return (it != edges_.end() && it->id == id) ? it : edges_.end();
  }

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::string> vertex_labels_;
  std::map<EdgeId, std::string> edge_labels_;
  VertexId next_vertex_id_ = 0;
  EdgeId next_edge_id_ = 0;
};

/// Simple graph on vertices 0..n-1 with bitmask adjacency.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : adj_(check_order(n), 0) {}

  static SimpleGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Rejects loops and parallel edges; vertices are renumbered in increasing id order.
  static SimpleGraph from_multigraph(const MultiGraph& h) {
    if (!h.is_simple()) throw InputError("simple graph view rejects loops and parallel edges");
    const auto& vs = h.vertices();
    SimpleGraph g(static_cast<int>(vs.size()));
    auto index = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Edge& e : h.edges()) g.add_edge(index(e.u), index(e.v));
    return g;
  }

  MultiGraph to_multigraph() const {
    MultiGraph h = MultiGraph::with_vertices(n());
    for (auto [u, v] : edges()) h.add_edge(u, v);
    return h;
  }

  int n() const { return static_cast<int>(adj_.size()); }
  Mask all() const { return n() == kMaskBits ? ~Mask{0} : bit(n()) - 1; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("simple graph rejects loops");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  void remove_edge(int u, int v) {
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  Mask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int num_edges() const {
    int total = 0;
    for (Mask m : adj_) total += popcount(m);
    return total / 2;
  }

  /// Edge list with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
      for_each_bit(adj_[u] & above(u), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  bool is_clique(Mask set) const {
    bool ok = true;
    for_each_bit(set, [&](int v) {
      if ((adj_[v] & set) != (set & ~bit(v))) ok = false;
    });
    return ok;
  }

  /// Subgraph induced by `keep`, renumbered in increasing order.
  SimpleGraph induced(Mask keep) const {
    std::vector<int> index(n(), -1);
    int k = 0;
    for_each_bit(keep, [&](int v) { index[v] = k++; });
    SimpleGraph g(k);
    for_each_bit(keep, [&](int v) {
      for_each_bit(adj_[v] & keep, [&](int w) {
        if (v < w) g.add_edge(index[v], index[w]);
      });
    });
    return g;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaskBits)
      throw BoundExceeded("simple graphs are limited to 64 vertices, got " + std::to_string(n));
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= n()) throw InputError("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<Mask> adj_;
};

/// Index-based view of a MultiGraph: vertices 0..n-1 and edges 0..m-1 in
/// increasing id order.
struct DenseMultigraph {
  struct Incidence {
    int edge;
    int other;
  };

  std::vector<VertexId> vertex_id;
  std::vector<EdgeId> edge_id;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<Incidence>> inc;  // a loop appears once, with other == self

  DenseMultigraph() = default;
  explicit DenseMultigraph(const MultiGraph& h) : vertex_id(h.vertices()) {
    inc.resize(vertex_id.size());
    for (const Edge& e : h.edges()) {
      const int a = index_of(e.u);
      const int b = index_of(e.v);
      const int k = static_cast<int>(edge_id.size());
      edge_id.push_back(e.id);
      ends.emplace_back(a, b);
      inc[a].push_back({k, b});
      if (a != b) inc[b].push_back({k, a});
    }
  }

  int n() const { return static_cast<int>(vertex_id.size()); }
  int m() const { return static_cast<int>(edge_id.size()); }

  int index_of(VertexId v) const {
    auto it = std::lower_bound(vertex_id.begin(), vertex_id.end(), v);
    if (it == vertex_id.end() || *it != v) throw InputError("unknown vertex id " + std::to_string(v));
    return static_cast<int>(it - vertex_id.begin());
  }
  int edge_index_of(EdgeId e) const {
    auto it = std::lower_bound(edge_id.begin(), edge_id.end(), e);
    if (it == edge_id.end() || *it != e) throw InputError("unknown edge id " + std::to_string(e));
    return static_cast<int>(it - edge_id.begin());
  }
  int degree(int v) const {
    int d = 0;
    for (const Incidence& i : inc[v]) d += (i.other == v) ? 2 : 1;
    return d;
  }
  int other_end(int edge, int v) const {
    return ends[edge].first == v ? ends[edge].second : ends[edge].first;
  }
  Mask edge_ends_mask(int edge) const { return bit(ends[edge].first) | bit(ends[edge].second); }

  void require_mask_width() const {
    if (n() > kMaskBits || m() > kMaskBits)
      throw BoundExceeded("search routines are limited to 64 vertices and 64 edges");
  }
};

}  // namespace hamlab
