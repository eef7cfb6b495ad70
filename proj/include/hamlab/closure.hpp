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

// Local completion closure of claw-free graphs and the M-closedness test.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/graph.hpp"
#include "hamlab/linegraph.hpp"
#include "hamlab/structure.hpp"
#include "hamlab/subgraph.hpp"

namespace hamlab {

/// x is eligible when G[N(x)] is connected and not complete.
inline bool is_eligible(const SimpleGraph& g, int x) {
  const Mask nb = g.neighbors(x);
  if (nb == 0 || g.is_clique(nb)) return false;
  return reach(g, lowest_bit(nb), nb) == nb;
}

inline Mask eligible_vertices(const SimpleGraph& g) {
  Mask out = 0;
  for (int x = 0; x < g.n(); ++x)
    if (is_eligible(g, x)) out |= bit(x);
  return out;
}

struct ClosureStep {
  int vertex = -1;
  std::vector<std::pair<int, int>> added;
};

struct ClosureTrace {
  std::vector<ClosureStep> steps;
  SimpleGraph result;
};

enum class CompletionOrder { LowestFirst, HighestFirst };

/// Repeats local completion at an eligible vertex until none is left.
inline ClosureTrace ryjacek_closure(const SimpleGraph& g, CompletionOrder order = CompletionOrder::LowestFirst) {
  if (const auto claw = find_induced_claw(g))
    throw InputError("closure needs a claw-free graph (claw centered at " + std::to_string(claw->center) + ")");
  ClosureTrace trace{{}, g};
  SimpleGraph& c = trace.result;
  while (true) {
    const Mask elig = eligible_vertices(c);
    if (elig == 0) break;
    const int x = order == CompletionOrder::LowestFirst ? lowest_bit(elig) : 63 - std::countl_zero(elig);
    ClosureStep step{x, {}};
    const Mask nb = c.neighbors(x);
    for_each_bit(nb, [&](int a) {
      for_each_bit(nb & above(a) & ~c.neighbors(a), [&](int b) { step.added.emplace_back(a, b); });
    });
    for (auto [a, b] : step.added) c.add_edge(a, b);
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

inline SimpleGraph closure(const SimpleGraph& g) { return ryjacek_closure(g).result; }

struct MClosedReport {
  bool holds = false;
  bool line_graph = false;
  std::optional<MultiGraph> preimage;
  std::string pattern;              // name of the first pattern found
  std::optional<Embedding> embedding;
};

/// G is M-closed iff it is the line graph of a multigraph whose preimage
/// contains none of T1, T2, T3 as a subgraph.
inline MClosedReport is_m_closed(const SimpleGraph& g) {
  MClosedReport report;
  try {
    report.preimage = preimage(g);
  } catch (const NotLineGraph&) {
    return report;
  }
  report.line_graph = true;
  for (const PatternGraph& p : {patterns::diamond(), patterns::multitriangle(), patterns::triple_edge()}) {
    if (auto emb = find_subgraph(*report.preimage, p)) {
      report.pattern = p.name;
      report.embedding = std::move(emb);
      return report;
    }
  }
  report.holds = true;
  return report;
}

}  // namespace hamlab
