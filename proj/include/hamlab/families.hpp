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

// Decorated Petersen and Wagner graphs (the exceptional classes P' and W')
// and the small sharpness graphs built from K_{1,2,3} and K_{1,1,3}.

#pragma once

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hamlab/canonical.hpp"
#include "hamlab/domination.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/named.hpp"
#include "hamlab/reduction.hpp"
#include "hamlab/structure.hpp"

namespace hamlab {

struct VertexDecoration {
  int pendants = 0;
  int double_pendants = 0;                   // Wagner only
  std::vector<EdgeId> subdivide;             // incident base edges
  std::vector<EdgeId> double_to_subdivision; // Wagner only: subdivided incident edges
};

struct DecorationConfig {
  std::map<VertexId, VertexDecoration> at;
};

enum class DecorationBase { Petersen, Wagner };

inline std::string to_string(DecorationBase b) { return b == DecorationBase::Petersen ? "petersen" : "wagner"; }

inline MultiGraph base_graph(DecorationBase b) { return b == DecorationBase::Petersen ? petersen() : wagner(); }

/// Applies a configuration to the base graph. Every requested edge is
/// subdivided once, however many of its ends ask for it. Base vertex ids
/// persist; new vertices follow.
inline MultiGraph decorate(DecorationBase which, const DecorationConfig& cfg) {
  const MultiGraph base = base_graph(which);
  const bool wagner_ops = which == DecorationBase::Wagner;
  std::set<EdgeId> to_subdivide;
  std::map<EdgeId, VertexId> doubled_by;
  for (const auto& [v, d] : cfg.at) {
    if (!base.has_vertex(v)) throw InputError("decoration at unknown vertex " + std::to_string(v));
    if (d.pendants < 0 || d.double_pendants < 0) throw InputError("negative pendant count");
    if (!wagner_ops && (d.double_pendants > 0 || !d.double_to_subdivision.empty()))
      throw InputError("double edges are only available on the Wagner base");
    for (EdgeId e : d.subdivide) {
      if (!base.has_edge(e) || !base.edge(e).touches(v))
        throw InputError("edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(v));
      to_subdivide.insert(e);
    }
  }
  for (const auto& [v, d] : cfg.at)
    for (EdgeId e : d.double_to_subdivision) {
      if (!to_subdivide.count(e) || !base.edge(e).touches(v))
        throw InputError("double edge from " + std::to_string(v) + " needs a subdivided incident edge");
      if (doubled_by.count(e) && doubled_by[e] != v)
        throw InputError("both ends of edge " + std::to_string(e) + " ask for a double edge to its subdivision");
      doubled_by[e] = v;
    }
  MultiGraph h = base;
  for (EdgeId e : to_subdivide) {
    const Subdivision s = subdivide_edge(h, e);
    h = s.graph;
    if (doubled_by.count(e)) h.add_edge(doubled_by[e], s.vertex);
  }
  for (const auto& [v, d] : cfg.at) {
    for (int i = 0; i < d.pendants; ++i) h = attach_pendant(h, v).graph;
    for (int i = 0; i < d.double_pendants; ++i) h = attach_pendant(h, v, 2).graph;
  }
  return h;
}

inline std::vector<VertexId> unmodified_vertices(DecorationBase which, const DecorationConfig& cfg) {
  std::vector<VertexId> out;
  const MultiGraph base = base_graph(which);
  for (VertexId v : base.vertices()) {
    const auto it = cfg.at.find(v);
    if (it == cfg.at.end()) {
      out.push_back(v);
      continue;
    }
    const VertexDecoration& d = it->second;
    if (d.pendants + d.double_pendants == 0 && d.subdivide.empty() && d.double_to_subdivision.empty())
      out.push_back(v);
  }
  return out;
}

inline MultiGraph checked_member(DecorationBase which, const DecorationConfig& cfg) {
  const auto missing = unmodified_vertices(which, cfg);
  if (!missing.empty())
    throw InputError("each base vertex must be modified; vertex " + std::to_string(missing.front()) + " is not");
  return decorate(which, cfg);
}

inline MultiGraph p_prime_member(const DecorationConfig& cfg) { return checked_member(DecorationBase::Petersen, cfg); }
inline MultiGraph w_prime_member(const DecorationConfig& cfg) { return checked_member(DecorationBase::Wagner, cfg); }

struct MembershipReport {
  bool member = false;
  std::string reason;       // first failed condition, empty for members
  int edge_domination = -1; // computed once the structure matches
};

namespace detail {

/// Removes each vertex s joined to v by exactly two edges and to u != v by
/// one (a double edge to a subdivision vertex), reconnecting u to v. Both
/// ends count as modified, as for a plain subdivision.
inline MultiGraph absorb_doubled_subdivisions(const MultiGraph& h, std::set<VertexId>& absorbed_into) {
  MultiGraph g = h;
  for (VertexId s : h.vertices()) {
    const auto inc = h.incident_edges(s);
    if (h.degree(s) != 3 || inc.size() != 3) continue;
    std::map<VertexId, int> mult;
    for (EdgeId e : inc) ++mult[h.edge(e).other(s)];
    if (mult.size() != 2 || mult.count(s)) continue;
    VertexId v = -1, u = -1;
    for (auto [w, k] : mult) (k == 2 ? v : u) = w;
    if (v < 0 || u < 0 || !g.has_vertex(v) || !g.has_vertex(u)) continue;
    g.remove_vertex(s);
    g.add_edge(u, v);
    absorbed_into.insert(v);
    absorbed_into.insert(u);
  }
  return g;
}

inline MembershipReport check_decorated(const MultiGraph& h, DecorationBase which) {
  MembershipReport r;
  const bool wagner_ops = which == DecorationBase::Wagner;
  if (h.num_edges() == 0 || !is_connected(h)) {
    r.reason = "not a connected multigraph with edges";
    return r;
  }
  for (const Edge& e : h.edges())
    if (e.is_loop()) {
      r.reason = "has a loop";
      return r;
    }
  std::set<VertexId> absorbed;
  const MultiGraph g = wagner_ops ? absorb_doubled_subdivisions(h, absorbed) : h;
  Core c;
  try {
    c = core(g);
  } catch (const Error& e) {
    r.reason = std::string("core failed: ") + e.what();
    return r;
  }
  if (!is_isomorphic(c.graph, base_graph(which))) {
    r.reason = "core is not the " + to_string(which) + " graph";
    return r;
  }
  std::set<VertexId> modified = absorbed;
  for (VertexId x : g.vertices()) {
    if (c.graph.has_vertex(x)) continue;
    const auto inc = g.incident_edges(x);
    std::set<VertexId> nbrs;
    for (EdgeId e : inc) nbrs.insert(g.edge(e).other(x));
    const bool leaf = g.degree(x) == 1;
    const bool double_leaf = wagner_ops && g.degree(x) == 2 && nbrs.size() == 1;
    const bool subdivision = g.degree(x) == 2 && nbrs.size() == 2;
    if (leaf || double_leaf) {
      if (!c.graph.has_vertex(*nbrs.begin())) {
        r.reason = "pendant at vertex " + std::to_string(x) + " hangs off a non-base vertex";
        return r;
      }
    } else if (subdivision) {
      for (VertexId w : nbrs)
        if (g.degree(w) == 1) {
          r.reason = "pendant attached to subdivision vertex " + std::to_string(x);
          return r;
        }
    } else {
      r.reason = "vertex " + std::to_string(x) + " is neither a pendant nor a subdivision vertex";
      return r;
    }
    for (VertexId w : nbrs)
      if (c.graph.has_vertex(w)) modified.insert(w);
  }
  if (!wagner_ops) {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : h.edges())
      if (!seen.insert(std::minmax(e.u, e.v)).second) {
        r.reason = "has a parallel edge";
        return r;
      }
  }
  for (VertexId v : c.graph.vertices())
    if (!modified.count(v)) {
      r.reason = "base vertex " + std::to_string(v) + " is not modified";
      return r;
    }
  r.edge_domination = edge_domination_number(h).number;
  const int bound = wagner_ops ? 4 : 5;
  if (r.edge_domination > bound) {
    r.reason = "edge domination number " + std::to_string(r.edge_domination) + " exceeds " + std::to_string(bound);
    return r;
  }
  r.member = true;
  return r;
}

}  // namespace detail

/// Structural membership: core is Petersen, every Petersen vertex carries a
/// pendant or an incident subdivision, nothing else hangs off, and the edge
/// domination number is at most 5.
inline MembershipReport is_in_P_prime(const MultiGraph& h) {
  return detail::check_decorated(h, DecorationBase::Petersen);
}

/// As above for Wagner, additionally allowing pendant double edges and double
/// edges to subdivision vertices, with edge domination number at most 4.
inline MembershipReport is_in_W_prime(const MultiGraph& h) {
  return detail::check_decorated(h, DecorationBase::Wagner);
}

/// A random configuration in which every vertex gets at least one operation.
/// `spread` in [0, 1] raises the chance of extra operations.
inline DecorationConfig random_decoration(DecorationBase which, std::mt19937& rng, double spread = 0.3) {
  const MultiGraph base = base_graph(which);
  const bool wagner_ops = which == DecorationBase::Wagner;
  std::bernoulli_distribution extra(spread);
  DecorationConfig cfg;
  std::map<EdgeId, VertexId> doubled;
  for (VertexId v : base.vertices()) {
    VertexDecoration& d = cfg.at[v];
    const auto inc = base.incident_edges(v);
    do {
      if (extra(rng) || (d.pendants + d.double_pendants == 0 && d.subdivide.empty() && rng() % 2 == 0)) {
        if (wagner_ops && rng() % 3 == 0) ++d.double_pendants;
        else ++d.pendants;
      }
      for (EdgeId e : inc)
        if (extra(rng)) d.subdivide.push_back(e);
    } while (d.pendants + d.double_pendants == 0 && d.subdivide.empty());
    if (wagner_ops)
      for (EdgeId e : d.subdivide)
        if (!doubled.count(e) && extra(rng)) {
          d.double_to_subdivision.push_back(e);
          doubled[e] = v;
        }
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// Sharpness graphs. K_{1,2,3}: part {0}, {1,2}, {3,4,5}; K_{1,1,3}: {0}, {1},
// {2,3,4}. The replaced vertex is the first vertex of the size-3 part.

enum class SharpnessBase { K123, K113 };

inline SimpleGraph k123() { return SimpleGraph::from_multigraph(complete_multipartite({1, 2, 3})); }
inline SimpleGraph k113() { return SimpleGraph::from_multigraph(complete_multipartite({1, 1, 3})); }

/// Replaces the first size-3-part vertex by a k-clique joined to every vertex
/// of the two smaller parts.
inline SimpleGraph blowup(SharpnessBase base, int k) {
  if (k < 1) throw InputError("blow-up needs k >= 1");
  const int small = base == SharpnessBase::K123 ? 3 : 2;  // vertices in the two smaller parts
  const int n = small + 2 + k;
  SimpleGraph g(n);
  const SimpleGraph b = base == SharpnessBase::K123 ? k123() : k113();
  // Smaller parts keep their ids; the other two size-3 vertices move to
  // small, small + 1; the clique takes the rest.
  for (int u = 0; u < small; ++u)
    for (int v = u + 1; v < small; ++v)
      if (b.has_edge(u, v)) g.add_edge(u, v);
  for (int u = 0; u < small; ++u)
    for (int c = small; c < n; ++c) g.add_edge(u, c);
  for (int a = small + 2; a < n; ++a)
    for (int c = a + 1; c < n; ++c) g.add_edge(a, c);
  return g;
}

}  // namespace hamlab
