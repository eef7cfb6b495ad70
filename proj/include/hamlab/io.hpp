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

// Text formats, DOT export and JSON serializers.
//
// Edge list:   first line `n m [multi]`, then `u v [mult]` per edge (m counts
//              multiplicities), `label u name` lines anywhere after the header,
//              `#` starts a comment.
// Hypergraph:  first line `n`, then one hyperedge per line (2 or 3 ids).

#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamlab/contraction.hpp"
#include "hamlab/domination.hpp"
#include "hamlab/families.hpp"
#include "hamlab/graph.hpp"
#include "hamlab/hypergraph.hpp"
#include "hamlab/pipeline.hpp"
#include "hamlab/reduction.hpp"
#include "hamlab/search.hpp"

namespace hamlab {

using json = nlohmann::json;

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline long parse_int(const std::string& s, int line, const char* what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw ParseError(line, std::string("expected an integer ") + what + ", got '" + s + "'");
  return v;
}

// Yields (line number, tokens) for every non-blank line.
template <class Visit>
void for_each_line(std::istream& in, Visit&& visit) {
  std::string raw;
  for (int line = 1; std::getline(in, raw); ++line) {
    const auto t = tokens(strip_comment(raw));
    if (!t.empty()) visit(line, raw, t);
  }
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace detail

inline MultiGraph read_edge_list(std::istream& in) {
  MultiGraph h;
  long n = -1, m = 0, seen = 0;
  bool multi = false;
  int last_line = 0;
  detail::for_each_line(in, [&](int line, const std::string& raw, const std::vector<std::string>& t) {
    last_line = line;
    if (n < 0) {
      if (t.size() < 2 || t.size() > 3) throw ParseError(line, "header must be `n m [multi]`");
      n = detail::parse_int(t[0], line, "vertex count");
      m = detail::parse_int(t[1], line, "edge count");
      if (n < 0 || m < 0) throw ParseError(line, "negative count in header");
      if (n > kMaskBits) throw ParseError(line, "at most " + std::to_string(kMaskBits) + " vertices supported");
      if (t.size() == 3) {
        if (t[2] != "multi") throw ParseError(line, "unknown header flag '" + t[2] + "'");
        multi = true;
      }
      h = MultiGraph::with_vertices(static_cast<int>(n));
      return;
    }
    if (t[0] == "label") {
      if (t.size() < 3) throw ParseError(line, "expected `label u name`");
      const long u = detail::parse_int(t[1], line, "vertex");
      if (u < 0 || u >= n) throw ParseError(line, "vertex " + t[1] + " out of range");
      // The name is the rest of the line, so it may contain spaces.
      std::istringstream fields(detail::strip_comment(raw));
      std::string skip, rest;
      fields >> skip >> skip;
      std::getline(fields, rest);
      h.set_vertex_label(static_cast<VertexId>(u), detail::trim(rest));
      return;
    }
    if (t.size() < 2 || t.size() > 3) throw ParseError(line, "expected `u v [mult]`");
    const long u = detail::parse_int(t[0], line, "vertex");
    const long v = detail::parse_int(t[1], line, "vertex");
    const long k = t.size() == 3 ? detail::parse_int(t[2], line, "multiplicity") : 1;
    if (u < 0 || u >= n) throw ParseError(line, "vertex " + t[0] + " out of range");
    if (v < 0 || v >= n) throw ParseError(line, "vertex " + t[1] + " out of range");
    if (u == v) throw ParseError(line, "loops are not allowed");
    if (k < 1) throw ParseError(line, "multiplicity must be positive");
    if (!multi && (k > 1 || h.multiplicity(u, v) > 0))
      throw ParseError(line, "parallel edge " + t[0] + " " + t[1] + " needs the `multi` header flag");
    for (long i = 0; i < k; ++i) h.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    seen += k;
    if (seen > m) throw ParseError(line, "more than the declared " + std::to_string(m) + " edges");
  });
  if (n < 0) throw ParseError(std::max(last_line, 1), "missing header");
  if (seen != m)
    throw ParseError(last_line, "declared " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return h;
}

inline MultiGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline MultiGraph load_edge_list(const std::string& path) { return parse_edge_list(detail::read_file(path)); }

/// Vertices are renumbered 0..n-1 in id order; parallel edges are grouped.
inline std::string write_edge_list(const MultiGraph& h) {
  if (h.has_loops()) throw InputError("loops cannot be written as an edge list");
  const DenseMultigraph d(h);
  std::map<std::pair<int, int>, int> mult;
  for (auto [a, b] : d.ends) ++mult[{std::min(a, b), std::max(a, b)}];
  std::ostringstream out;
  out << d.n() << ' ' << d.m() << (h.is_simple() ? "" : " multi") << '\n';
  for (auto [ab, k] : mult) {
    out << ab.first << ' ' << ab.second;
    if (k > 1) out << ' ' << k;
    out << '\n';
  }
  for (const auto& [v, name] : h.vertex_labels()) out << "label " << d.index_of(v) << ' ' << name << '\n';
  return out.str();
}

inline Hypergraph3 read_hypergraph(std::istream& in) {
  std::optional<Hypergraph3> hg;
  int last_line = 0;
  detail::for_each_line(in, [&](int line, const std::string&, const std::vector<std::string>& t) {
    last_line = line;
    if (!hg) {
      if (t.size() != 1) throw ParseError(line, "header must be the vertex count");
      const long n = detail::parse_int(t[0], line, "vertex count");
      if (n < 0) throw ParseError(line, "negative vertex count");
      hg.emplace(static_cast<int>(n));
      return;
    }
    std::vector<int> e;
    for (const auto& s : t) e.push_back(static_cast<int>(detail::parse_int(s, line, "vertex")));
    try {
      hg->add(e);
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& err) {
      throw ParseError(line, err.what());
    }
  });
  if (!hg) throw ParseError(std::max(last_line, 1), "missing header");
  return *hg;
}

inline Hypergraph3 parse_hypergraph(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

inline Hypergraph3 load_hypergraph(const std::string& path) { return parse_hypergraph(detail::read_file(path)); }

inline std::string write_hypergraph(const Hypergraph3& hg) {
  std::ostringstream out;
  out << hg.n() << '\n';
  for (const auto& e : hg.hyperedges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

/// One-line instance name, e.g. "n4:0-1,0-1,1-2" (dense renumbering).
inline std::string describe(const MultiGraph& h) {
  const DenseMultigraph d(h);
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : d.ends) es.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(es.begin(), es.end());
  std::string out = "n" + std::to_string(d.n()) + ":";
  for (std::size_t i = 0; i < es.size(); ++i)
    out += (i ? "," : "") + std::to_string(es[i].first) + "-" + std::to_string(es[i].second);
  return out;
}

inline std::string describe(const SimpleGraph& g) { return describe(g.to_multigraph()); }

inline std::string describe(const Hypergraph3& hg) {
  std::string out = "n" + std::to_string(hg.n()) + ":";
  for (int i = 0; i < hg.size(); ++i) {
    if (i) out += ",";
    for (int v : hg.hyperedge(i)) out += std::to_string(v) + (hg.n() > 10 ? "." : "");
  }
  return out;
}

// ---- DOT ----

/// Undirected DOT; edges in `bold` are drawn thick and red.
inline std::string to_dot(const MultiGraph& h, const std::set<EdgeId>& bold = {}, const std::string& name = "H") {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (VertexId v : h.vertices()) {
    out << "  " << v;
    if (const std::string l = h.vertex_label(v); !l.empty()) out << " [xlabel=\"" << l << "\"]";
    out << ";\n";
  }
  for (const Edge& e : h.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (bold.count(e.id)) out << " [color=red, penwidth=2.5]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const SimpleGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle];\n";
  for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const MultiGraph& h, const WalkCert& w) {
  return to_dot(h, std::set<EdgeId>(w.edges.begin(), w.edges.end()));
}

// ---- JSON ----

inline void to_json(json& j, const MultiGraph& h) {
  j = {{"n", h.num_vertices()}, {"m", h.num_edges()}, {"vertices", h.vertices()}, {"edges", json::array()}};
  for (const Edge& e : h.edges()) j["edges"].push_back({e.id, e.u, e.v});
  if (!h.vertex_labels().empty()) {
    json labels = json::object();
    for (const auto& [v, l] : h.vertex_labels()) labels[std::to_string(v)] = l;
    j["labels"] = labels;
  }
}

inline void to_json(json& j, const SimpleGraph& g) {
  j = {{"n", g.n()}, {"m", g.num_edges()}, {"edges", json::array()}};
  for (auto [a, b] : g.edges()) j["edges"].push_back({a, b});
}

inline void to_json(json& j, const Hypergraph3& hg) { j = {{"n", hg.n()}, {"hyperedges", hg.hyperedges()}}; }

inline void to_json(json& j, const WalkCert& w) {
  j = {{"kind", to_string(w.kind)}, {"vertices", w.vertices}, {"length", w.length()}};
  if (!w.edges.empty()) j["edges"] = w.edges;
}

inline void to_json(json& j, const ContractionCert& c) {
  json parts = json::object();
  for (const auto& [v, x] : c.partition) parts[std::to_string(v)] = x;
  j = {{"partition", parts}, {"target", c.target}};
  json marks = json::object();
  for (const auto& [x, v] : c.marks) marks[std::to_string(x)] = v;
  j["marks"] = marks;
  if (c.constrained_edge) j["constrained_edge"] = *c.constrained_edge;
  if (c.edge_image) j["edge_image"] = {c.edge_image->first, c.edge_image->second};
}

inline void to_json(json& j, const ReductionOp& op) {
  j = {{"op", to_string(op.kind)}, {"vertex", op.vertex}, {"edge", op.first}};
  if (op.kind == ReductionOp::Kind::Suppress)
    j.update({{"ends", {op.support, op.far}}, {"merged", {op.first, op.second}}, {"into", op.merged}});
  else if (op.kind == ReductionOp::Kind::DeletePendant)
    j["support"] = op.support;
}

inline void to_json(json& j, const ReductionTrace& t) {
  j = {{"ops", t.ops}, {"edge_map", json::array()}};
  for (auto [a, b] : t.edge_map) j["edge_map"].push_back({a, b});
}

inline void to_json(json& j, const DominationResult& d) {
  j = {{"number", d.number},
       {"kind", d.witness.kind == DominationWitness::Kind::Vertex ? "vertex" : "edge"},
       {"witness", d.witness.members}};
}

inline void to_json(json& j, const MembershipReport& r) {
  j = {{"member", r.member}, {"edge_domination", r.edge_domination}};
  if (!r.reason.empty()) j["reason"] = r.reason;
}

inline void to_json(json& j, const VerdictReport& r) {
  j = {{"instance", r.instance},
       {"claim", to_string(r.claim)},
       {"branch", to_string(r.branch)},
       {"marks", r.marks},
       {"millis", r.millis}};
  if (r.walk) j["walk"] = *r.walk;
  if (r.contraction) j["contraction"] = *r.contraction;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
}

}  // namespace hamlab
