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

// Exact minimum dominating sets and edge dominating sets.
//
// Both reduce to a small set-cover instance: item i is covered by candidate c
// when bit i of cover[c] is set. The solver first finds the optimum by
// branch-and-bound, then the lexicographically smallest optimal set.

#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "hamlab/graph.hpp"

namespace hamlab {

struct DominationWitness {
  enum class Kind { Vertex, Edge };
  Kind kind = Kind::Vertex;
  std::vector<int> members;  // vertex indices or edge ids, increasing
  int size = 0;
};

struct DominationResult {
  int number = 0;
  DominationWitness witness;
};

namespace detail {

class CoverSolver {
 public:
  CoverSolver(std::vector<Mask> cover, Mask universe) : cover_(std::move(cover)), universe_(universe) {
    for (Mask c : cover_) max_cover_ = std::max(max_cover_, popcount(c));
    for (int i = 0; i < kMaskBits; ++i) {
      if (!((universe_ >> i) & 1)) continue;
      std::vector<int> by;
      for (int c = 0; c < static_cast<int>(cover_.size()); ++c)
        if ((cover_[c] >> i) & 1) by.push_back(c);
      if (by.empty()) throw InputError("cover instance has an uncoverable item");
      covering_[i] = std::move(by);
    }
  }

  /// Lexicographically smallest minimum cover (candidate indices, increasing).
  std::vector<int> solve() {
    if (universe_ == 0) return {};
    best_ = greedy();
    optimum(0, 0);
    std::vector<int> picked;
    lex(0, 0, picked);
    return picked;
  }

 private:
  int lower_bound(Mask uncovered) const {
    return max_cover_ == 0 ? 0 : (popcount(uncovered) + max_cover_ - 1) / max_cover_;
  }

  int greedy() const {
    Mask covered = 0;
    int count = 0;
    while ((covered & universe_) != universe_) {
      int best = -1, gain = -1;
      for (int c = 0; c < static_cast<int>(cover_.size()); ++c) {
        const int g = popcount(cover_[c] & universe_ & ~covered);
        if (g > gain) gain = g, best = c;
      }
      covered |= cover_[best];
      ++count;
    }
    return count;
  }

  void optimum(Mask covered, int count) {
    const Mask uncovered = universe_ & ~covered;
    if (uncovered == 0) {
      best_ = std::min(best_, count);
      return;
    }
    if (count + lower_bound(uncovered) >= best_) return;
    const auto& options = covering_.at(lowest_bit(uncovered));
    std::vector<int> order(options);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return popcount(cover_[a] & uncovered) > popcount(cover_[b] & uncovered);
    });
    for (int c : order) optimum(covered | cover_[c], count + 1);
  }

  bool lex(int start, Mask covered, std::vector<int>& picked) {
    const Mask uncovered = universe_ & ~covered;
    if (uncovered == 0) return true;
    const int count = static_cast<int>(picked.size());
    if (count + lower_bound(uncovered) > best_ || count == best_) return false;
    // The lowest uncovered item must be covered by a later pick.
    const auto& options = covering_.at(lowest_bit(uncovered));
    const int last = options.back();
    for (int c = start; c <= last; ++c) {
      picked.push_back(c);
      if (lex(c + 1, covered | cover_[c], picked)) return true;
      picked.pop_back();
    }
    return false;
  }

  std::vector<Mask> cover_;
  Mask universe_;
  int max_cover_ = 0;
  int best_ = 0;
  std::vector<std::vector<int>> covering_ = std::vector<std::vector<int>>(kMaskBits);
};

}  // namespace detail

inline bool is_dominating_set(const SimpleGraph& g, Mask s) {
  Mask dom = s;
  for_each_bit(s, [&](int v) { dom |= g.neighbors(v); });
  return dom == g.all();
}

inline bool is_dominating_set(const SimpleGraph& g, const std::vector<int>& s) {
  Mask m = 0;
  for (int v : s) m |= bit(v);
  return is_dominating_set(g, m);
}

/// γ(G) together with the lexicographically smallest minimum dominating set.
inline DominationResult domination_number(const SimpleGraph& g) {
  if (g.n() == 0) throw InputError("domination number of the empty graph");
  std::vector<Mask> cover(g.n());
  for (int v = 0; v < g.n(); ++v) cover[v] = g.neighbors(v) | bit(v);
  DominationResult r;
  r.witness.kind = DominationWitness::Kind::Vertex;
  r.witness.members = detail::CoverSolver(cover, g.all()).solve();
  r.witness.size = r.number = static_cast<int>(r.witness.members.size());
  if (!is_dominating_set(g, r.witness.members))
    throw StructuralViolation("domination solver returned a non-dominating set");
  return r;
}

/// Edges of h with at least one endpoint in s (increasing id).
inline std::vector<EdgeId> dominated_edges(const MultiGraph& h, const std::set<VertexId>& s) {
  std::vector<EdgeId> out;
  for (const Edge& e : h.edges())
    if (s.count(e.u) || s.count(e.v)) out.push_back(e.id);
  return out;
}

inline bool dominates_all_edges(const MultiGraph& h, const std::set<VertexId>& s) {
  return static_cast<int>(dominated_edges(h, s).size()) == h.num_edges();
}

inline bool is_edge_dominating_set(const MultiGraph& h, const std::vector<EdgeId>& d) {
  std::set<VertexId> touched;
  for (EdgeId e : d) {
    touched.insert(h.edge(e).u);
    touched.insert(h.edge(e).v);
  }
  return dominates_all_edges(h, touched);
}

/// Edge domination number with the smallest minimum edge dominating set in
/// lexicographic edge-id order.
inline DominationResult edge_domination_number(const MultiGraph& h) {
  if (h.num_edges() == 0) throw InputError("edge domination needs at least one edge");
  const DenseMultigraph d(h);
  d.require_mask_width();
  std::vector<Mask> cover(d.m(), 0);
  for (int e = 0; e < d.m(); ++e)
    for (int f = 0; f < d.m(); ++f)
      if (d.edge_ends_mask(e) & d.edge_ends_mask(f)) cover[e] |= bit(f);
  const Mask universe = d.m() == kMaskBits ? ~Mask{0} : bit(d.m()) - 1;
  DominationResult r;
  r.witness.kind = DominationWitness::Kind::Edge;
  for (int i : detail::CoverSolver(cover, universe).solve()) r.witness.members.push_back(d.edge_id[i]);
  r.witness.size = r.number = static_cast<int>(r.witness.members.size());
  if (!is_edge_dominating_set(h, r.witness.members))
    throw StructuralViolation("edge domination solver returned a non-dominating set");
  return r;
}

/// All minimum edge dominating sets, capped at `limit` (lexicographic order).
inline std::vector<std::vector<EdgeId>> minimum_edge_dominating_sets(const MultiGraph& h, int limit) {
  const int k = edge_domination_number(h).number;
  const auto& es = h.edges();
  const int m = static_cast<int>(es.size());
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(out.size()) >= limit) return;
    if (static_cast<int>(pick.size()) == k) {
      if (is_edge_dominating_set(h, pick)) out.push_back(pick);
      return;
    }
    for (int i = start; i < m; ++i) {
      pick.push_back(es[i].id);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace hamlab
