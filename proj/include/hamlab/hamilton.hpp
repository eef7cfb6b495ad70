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

// Exact Hamilton cycle and path search on simple graphs.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/parallel.hpp"
#include "hamlab/search.hpp"

namespace hamlab {

namespace detail {

/// Bitset DFS for a path from `from` that covers every vertex and ends at
/// `to`, or, when to == from, returns to it along a final edge.
class HamiltonSearch {
 public:
  HamiltonSearch(const SimpleGraph& g, BudgetMeter& meter) : g_(g), meter_(meter) {}

  SearchStatus run(int from, int to, std::vector<int>& out) {
    from_ = from;
    to_ = to;
    path_.assign(1, from);
    const int r = dfs(from, g_.all() & ~bit(from));
    if (r == 1) out = path_;
    return r == 1 ? SearchStatus::Found : r == 0 ? SearchStatus::Absent : SearchStatus::Indeterminate;
  }

 private:
  bool cycle() const { return from_ == to_; }

  int dfs(int cur, Mask rest) {
    if (!meter_.tick()) return -1;
    if (rest == 0) {
      if (cycle() ? g_.has_edge(cur, from_) : cur == to_) return 1;
      return 0;
    }
    // Interior candidates: everything unvisited except the path terminal.
    const Mask inner = cycle() ? rest : rest & ~bit(to_);
    const Mask open = rest | bit(cur) | bit(to_);
    if ((g_.neighbors(to_) & (rest | bit(cur)) & ~bit(to_)) == 0) return 0;
    Mask forced = 0;
    int forced_count = 0;
    bool dead = false;
    for_each_bit(inner, [&](int x) {
      const Mask avail = g_.neighbors(x) & open;
      const int d = popcount(avail);
      if (d < 2) dead = true;
      else if (d == 2 && cur != to_ && ((avail >> cur) & 1)) {
        forced = bit(x);
        ++forced_count;
      }
    });
    if (dead || forced_count > 1) return 0;
    if (!connected_from(cur, rest)) return 0;
    Mask moves = g_.neighbors(cur) & rest;
    if (!cycle() && rest != bit(to_)) moves &= ~bit(to_);
    if (forced != 0) moves &= forced;
    int result = 0;
    for_each_bit(moves, [&](int x) {
      if (result != 0) return;
      path_.push_back(x);
      result = dfs(x, rest & ~bit(x));
      if (result != 1) path_.pop_back();
    });
    return result;
  }

  bool connected_from(int cur, Mask rest) const {
    Mask seen = bit(cur), frontier = seen;
    const Mask within = rest | bit(cur);
    while (frontier != 0) {
      Mask next = 0;
      for_each_bit(frontier, [&](int v) { next |= g_.neighbors(v); });
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return (rest & ~seen) == 0;
  }

  const SimpleGraph& g_;
  BudgetMeter& meter_;
  int from_ = 0, to_ = 0;
  std::vector<int> path_;
};

}  // namespace detail

/// Hamilton cycle of g (n >= 3). The certificate lists n + 1 vertices with
/// the start repeated at the end.
inline WalkResult hamilton_cycle(const SimpleGraph& g, Budget budget = {}) {
  if (g.n() < 3) throw InputError("hamilton_cycle needs at least 3 vertices");
  BudgetMeter meter(budget);
  int start = 0;
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) < g.degree(start)) start = v;
  std::vector<int> path;
  WalkResult out;
  out.status = detail::HamiltonSearch(g, meter).run(start, start, path);
  out.nodes = meter.nodes();
  if (out.found()) {
    path.push_back(start);
    out.cert = WalkCert{WalkCert::Kind::Cycle, {path.begin(), path.end()}, {}};
  }
  return out;
}

inline WalkResult hamilton_path(const SimpleGraph& g, int a, int b, Budget budget = {}) {
  if (a < 0 || b < 0 || a >= g.n() || b >= g.n()) throw InputError("hamilton_path endpoint out of range");
  if (a == b) throw InputError("hamilton_path needs distinct endpoints");
  BudgetMeter meter(budget);
  std::vector<int> path;
  WalkResult out;
  out.status = detail::HamiltonSearch(g, meter).run(a, b, path);
  out.nodes = meter.nodes();
  if (out.found()) out.cert = WalkCert{WalkCert::Kind::Path, {path.begin(), path.end()}, {}};
  return out;
}

struct HamiltonConnectedReport {
  SearchStatus status = SearchStatus::Found;  // Found = every pair has a path
  std::optional<std::pair<int, int>> failing_pair;

  bool holds() const { return status == SearchStatus::Found; }
};

/// Sweeps all unordered pairs (in parallel); the reported failing pair is the
/// first in lexicographic pair order regardless of scheduling.
inline HamiltonConnectedReport is_hamilton_connected(const SimpleGraph& g, Budget per_pair = {},
                                                     int threads = thread_count()) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b) pairs.emplace_back(a, b);
  std::vector<SearchStatus> status(pairs.size());
  parallel_for(
      static_cast<long>(pairs.size()),
      [&](long i) { status[i] = hamilton_path(g, pairs[i].first, pairs[i].second, per_pair).status; }, threads);
  HamiltonConnectedReport report;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (status[i] == SearchStatus::Absent) {
      report.status = SearchStatus::Absent;
      report.failing_pair = pairs[i];
      return report;
    }
    if (status[i] == SearchStatus::Indeterminate) report.status = SearchStatus::Indeterminate;
  }
  return report;
}

inline bool is_hamilton_cycle(const SimpleGraph& g, const WalkCert& c) {
  if (g.n() < 3 || c.length() != g.n() || !c.closed()) return false;
  Mask seen = 0;
  for (int i = 0; i < g.n(); ++i) {
    const int v = c.vertices[i];
    if (v < 0 || v >= g.n() || ((seen >> v) & 1) || !g.has_edge(v, c.vertices[i + 1])) return false;
    seen |= bit(v);
  }
  return seen == g.all();
}

inline bool is_hamilton_path(const SimpleGraph& g, int a, int b, const WalkCert& c) {
  if (static_cast<int>(c.vertices.size()) != g.n() || c.vertices.front() != a || c.vertices.back() != b)
    return false;
  Mask seen = 0;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    const int v = c.vertices[i];
    if (v < 0 || v >= g.n() || ((seen >> v) & 1)) return false;
    if (i > 0 && !g.has_edge(c.vertices[i - 1], v)) return false;
    seen |= bit(v);
  }
  return seen == g.all();
}

}  // namespace hamlab
