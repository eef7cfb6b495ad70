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

// Contraction H/R by a vertex partition, and the search for a contraction
// onto a small target (Petersen or Wagner) with mark constraints on parts.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/canonical.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/named.hpp"
#include "hamlab/search.hpp"

namespace hamlab {

struct ContractionCert {
  std::map<VertexId, int> partition;  // vertex of H -> vertex index of target
  MultiGraph target;
  std::map<int, VertexId> marks;      // target vertex -> a mark in its part
  std::optional<EdgeId> constrained_edge;
  std::optional<std::pair<int, int>> edge_image;
};

/// Quotient multigraph on part labels 0..k-1, one edge per crossing edge.
/// Labels must be exactly 0..k-1 and every part connected.
inline MultiGraph contract(const MultiGraph& h, const std::map<VertexId, int>& partition) {
  if (partition.size() != static_cast<std::size_t>(h.num_vertices()))
    throw InputError("partition must label every vertex");
  int k = 0;
  for (const auto& [v, p] : partition) {
    h.require_vertex(v);
    if (p < 0) throw InputError("negative part label");
    k = std::max(k, p + 1);
  }
  std::vector<std::vector<VertexId>> parts(k);
  for (const auto& [v, p] : partition) parts[p].push_back(v);
  for (int p = 0; p < k; ++p) {
    if (parts[p].empty()) throw InputError("part " + std::to_string(p) + " is empty");
    std::set<VertexId> seen{parts[p][0]};
    std::vector<VertexId> stack{parts[p][0]};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : h.incident_edges(v)) {
        const VertexId w = h.edge(e).other(v);
        if (partition.at(w) == p && seen.insert(w).second) stack.push_back(w);
      }
    }
    if (seen.size() != parts[p].size()) throw InputError("part " + std::to_string(p) + " is disconnected");
  }
  MultiGraph out = MultiGraph::with_vertices(k);
  for (const Edge& e : h.edges()) {
    const int a = partition.at(e.u), b = partition.at(e.v);
    if (a != b) out.add_edge(a, b);
  }
  return out;
}

struct ContractionQuery {
  std::vector<VertexId> marks;            // empty: no mark constraint
  std::optional<EdgeId> constrained_edge; // edge whose image must be a target edge xy with mark-free ends
  int vertex_bound = 16;
};

namespace detail {

/// Labels H's vertices in BFS order with target vertices; a new vertex must
/// take a label equal or adjacent to those of its labelled neighbours.
class ContractionSearch {
 public:
  ContractionSearch(const MultiGraph& h, const MultiGraph& target, const ContractionQuery& q, BudgetMeter& meter)
      : d_(h), meter_(meter) {
    n_ = d_.n();
    k_ = target.num_vertices();
    for (int x = 0; x < k_; ++x)
      if (!target.has_vertex(x)) throw InputError("contraction targets must use vertex ids 0..k-1");
    const DenseMultigraph dt(target);
    mult_.assign(k_, std::vector<int>(k_, 0));
    for (const auto& [a, b] : dt.ends) {
      if (a == b) throw InputError("contraction targets must be loopless");
      ++mult_[a][b];
      ++mult_[b][a];
    }
    cross_.assign(k_, std::vector<int>(k_, 0));
    for (VertexId m : q.marks) marks_ |= bit(d_.index_of(m));
    if (q.constrained_edge) {
      const auto [a, b] = d_.ends[d_.edge_index_of(*q.constrained_edge)];
      if (a == b) throw InputError("the constrained edge is a loop");
      tilde_ = {a, b};
    }
    adj_.assign(n_, 0);
    for (const auto& [a, b] : d_.ends) {
      adj_[a] |= bit(b);
      adj_[b] |= bit(a);
    }
    order_ = bfs_order(tilde_ ? tilde_->first : 0);
    label_.assign(n_, -1);
    part_.assign(k_, 0);
    // Labels for the first vertex: one per orbit of the target.
    std::set<std::string> orbit_forms;
    for (int x = 0; x < k_; ++x) {
      std::vector<int> colors(k_, 0);
      colors[x] = 1;
      if (orbit_forms.insert(canonical_form(target, colors)).second) first_labels_.push_back(x);
    }
  }

  SearchStatus run(std::map<VertexId, int>& out) {
    if (n_ < k_) return SearchStatus::Absent;
    int r = 0;
    for (int x : first_labels_) {
      r = place(0, x);
      if (r != 0) break;
    }
    if (r == 1)
      for (int i = 0; i < n_; ++i) out[d_.vertex_id[i]] = solution_[i];
    return r == 1 ? SearchStatus::Found : r == 0 ? SearchStatus::Absent : SearchStatus::Indeterminate;
  }

 private:
  std::vector<int> bfs_order(int start) const {
    std::vector<int> order{start};
    Mask seen = bit(start);
    for (std::size_t i = 0; i < order.size(); ++i)
      for_each_bit(adj_[order[i]] & ~seen, [&](int w) {
        seen |= bit(w);
        order.push_back(w);
      });
    if (static_cast<int>(order.size()) != n_) throw InputError("contraction search needs a connected multigraph");
    return order;
  }

  // Assigns label x to order_[pos]; returns 1 found, 0 exhausted, -1 budget.
  int place(int pos, int x) {
    if (!meter_.tick()) return -1;
    const int v = order_[pos];
    // Crossing counts with already labelled neighbours.
    std::vector<std::pair<int, int>> added;
    bool ok = true;
    for (const auto& inc : d_.inc[v]) {
      const int y = label_[inc.other];
      if (inc.other == v || y < 0 || y == x) continue;
      if (++cross_[x][y] > mult_[x][y]) ok = false;
      ++cross_[y][x];
      added.emplace_back(x, y);
    }
    label_[v] = x;
    part_[x] |= bit(v);
    int r = 0;
    if (ok && feasible(pos + 1)) {
      if (pos + 1 == n_) {
        if (complete()) {
          solution_ = label_;
          r = 1;
        }
      } else {
        const int w = order_[pos + 1];
        for (int y = 0; y < k_ && r == 0; ++y)
          if (allowed(w, y)) r = place(pos + 1, y);
      }
    }
    for (auto [a, b] : added) {
      --cross_[a][b];
      --cross_[b][a];
    }
    label_[v] = -1;
    part_[x] &= ~bit(v);
    return r;
  }

  bool allowed(int w, int y) const {
    bool has_labelled = false;
    bool ok = true;
    for_each_bit(adj_[w], [&](int u) {
      const int z = label_[u];
      if (z < 0) return;
      has_labelled = true;
      if (z != y && mult_[y][z] == 0) ok = false;
    });
    return ok && has_labelled;
  }

  bool feasible(int next) const {
    Mask unassigned = 0;
    for (int i = next; i < n_; ++i) unassigned |= bit(order_[i]);
    int empty = 0;
    for (int x = 0; x < k_; ++x) {
      if (part_[x] == 0) {
        ++empty;
        continue;
      }
      // The part must still be connectable through unassigned vertices.
      const Mask within = part_[x] | unassigned;
      Mask seen = bit(lowest_bit(part_[x])), frontier = seen;
      while (frontier != 0) {
        Mask nxt = 0;
        for_each_bit(frontier, [&](int u) { nxt |= adj_[u]; });
        nxt &= within & ~seen;
        seen |= nxt;
        frontier = nxt;
      }
      if ((part_[x] & ~seen) != 0) return false;
      // A part with no unassigned neighbours is final: its crossings must be exact.
      Mask boundary = 0;
      for_each_bit(part_[x], [&](int u) { boundary |= adj_[u]; });
      if ((boundary & unassigned) == 0) {
        for (int y = 0; y < k_; ++y)
          if (y != x && part_[y] != 0 && cross_[x][y] != mult_[x][y]) return false;
        if (!marks_ok_final(x)) return false;
      }
    }
    if (empty > popcount(unassigned)) return false;
    if (tilde_ && label_[tilde_->first] >= 0 && label_[tilde_->second] >= 0) {
      const int a = label_[tilde_->first], b = label_[tilde_->second];
      if (a == b || mult_[a][b] == 0) return false;
    }
    return true;
  }

  bool marks_ok_final(int x) const {
    if (marks_ == 0) return true;
    const bool has = (part_[x] & marks_) != 0;
    if (!tilde_) return has;
    const int a = label_[tilde_->first], b = label_[tilde_->second];
    if (x == a || x == b) return !has;
    if (a >= 0 && b >= 0) return has;
    return true;
  }

  bool complete() const {
    for (int x = 0; x < k_; ++x) {
      if (part_[x] == 0) return false;
      for (int y = x + 1; y < k_; ++y)
        if (cross_[x][y] != mult_[x][y]) return false;
    }
    if (tilde_) {
      const int a = label_[tilde_->first], b = label_[tilde_->second];
      if (a == b || mult_[a][b] == 0) return false;
      if (marks_ != 0)
        for (int x = 0; x < k_; ++x)
          if (((part_[x] & marks_) != 0) == (x == a || x == b)) return false;
    } else if (marks_ != 0) {
      for (int x = 0; x < k_; ++x)
        if ((part_[x] & marks_) == 0) return false;
    }
    return true;
  }

  DenseMultigraph d_;
  BudgetMeter& meter_;
  int n_ = 0, k_ = 0;
  std::vector<std::vector<int>> mult_, cross_;
  Mask marks_ = 0;
  std::optional<std::pair<int, int>> tilde_;
  std::vector<Mask> adj_;
  std::vector<int> order_, label_, solution_, first_labels_;
  std::vector<Mask> part_;
};

}  // namespace detail

/// Searches for a contraction of h onto target. With marks and no
/// constrained edge every part must contain a mark; with a constrained edge
/// its image must be a target edge xy, the parts of x and y mark-free and
/// every other part marked.
inline SearchResult<ContractionCert> find_contraction(const MultiGraph& h, const MultiGraph& target,
                                                      const ContractionQuery& q = {}, Budget budget = {}) {
  if (target.num_vertices() > 10) throw InputError("contraction targets are limited to 10 vertices");
  if (h.num_vertices() > q.vertex_bound)
    throw BoundExceeded("contraction search is limited to " + std::to_string(q.vertex_bound) + " vertices");
  if (h.num_vertices() == 0) throw InputError("contraction of the empty graph");
  SearchResult<ContractionCert> out;
  BudgetMeter meter(budget);
  std::map<VertexId, int> partition;
  out.status = detail::ContractionSearch(h, target, q, meter).run(partition);
  out.nodes = meter.nodes();
  if (!out.found()) return out;
  ContractionCert cert;
  cert.partition = partition;
  cert.target = target;
  for (VertexId m : q.marks) {
    const int x = partition.at(m);
    if (!cert.marks.count(x)) cert.marks[x] = m;
  }
  if (q.constrained_edge) {
    cert.constrained_edge = q.constrained_edge;
    const Edge& e = h.edge(*q.constrained_edge);
    cert.edge_image = std::minmax(partition.at(e.u), partition.at(e.v));
  }
  out.cert = std::move(cert);
  return out;
}

/// Re-checks a certificate: connected parts, quotient equal to the target
/// under the labelling, and the mark conditions of the query.
inline bool is_valid_contraction(const MultiGraph& h, const ContractionCert& c, const ContractionQuery& q = {}) {
  MultiGraph quotient;
  try {
    quotient = contract(h, c.partition);
  } catch (const InputError&) {
    return false;
  }
  const int k = c.target.num_vertices();
  if (quotient.num_vertices() != k || quotient.num_edges() != c.target.num_edges()) return false;
  std::vector<std::vector<int>> a(k, std::vector<int>(k, 0)), b = a;
  const DenseMultigraph dt(c.target);
  for (const Edge& e : quotient.edges()) ++a[std::min(e.u, e.v)][std::max(e.u, e.v)];
  for (const auto& [x, y] : dt.ends) ++b[std::min(x, y)][std::max(x, y)];
  if (a != b) return false;
  std::vector<bool> marked(k, false);
  for (VertexId m : q.marks) marked[c.partition.at(m)] = true;
  if (q.constrained_edge) {
    const Edge& e = h.edge(*q.constrained_edge);
    const int x = c.partition.at(e.u), y = c.partition.at(e.v);
    if (x == y || b[std::min(x, y)][std::max(x, y)] == 0) return false;
    if (!q.marks.empty())
      for (int z = 0; z < k; ++z)
        if (marked[z] == (z == x || z == y)) return false;
  } else if (!q.marks.empty()) {
    for (int z = 0; z < k; ++z)
      if (!marked[z]) return false;
  }
  return true;
}

}  // namespace hamlab
