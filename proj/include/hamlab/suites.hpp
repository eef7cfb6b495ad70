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

// Verification suites over exhaustive small populations. A suite expands into
// cases (one per instance); each case yields one or more checks. Cases are
// sharded by index and run in parallel, results are merged in case order so
// reports do not depend on scheduling.

#pragma once

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hamlab/atlas.hpp"
#include "hamlab/canonical.hpp"
#include "hamlab/closure.hpp"
#include "hamlab/contraction.hpp"
#include "hamlab/domination.hpp"
#include "hamlab/families.hpp"
#include "hamlab/hamilton.hpp"
#include "hamlab/io.hpp"
#include "hamlab/linegraph.hpp"
#include "hamlab/named.hpp"
#include "hamlab/parallel.hpp"
#include "hamlab/pipeline.hpp"
#include "hamlab/reduction.hpp"
#include "hamlab/structure.hpp"
#include "hamlab/subgraph.hpp"
#include "hamlab/trails.hpp"

namespace hamlab {

enum class Verdict { Pass, Violation, Indeterminate };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Violation: return "violation";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

struct Check {
  std::string instance;
  Verdict verdict = Verdict::Pass;
  std::string branch;  // outcome class counted in the summary
  std::string detail;
  json payload;        // certificate or witness, may be null
};

struct SuiteConfig {
  std::string suite;
  int n_max = -1;       // -1: suite default
  int edges_max = -1;   // edges (hyperedges for pipeline-hyper); -1: suite default
  Budget budget{.nodes = -1, .milliseconds = 60'000};  // per search
  Shard shard;
  bool fail_fast = false;
  bool keep_checks = false;  // retain every check (for certificate emission)
  int threads = thread_count();
};

struct SuiteReport {
  std::string suite;
  long cases = 0;
  long checks = 0;
  std::map<std::string, long> branches;
  long violations = 0;
  long indeterminate = 0;
  bool stopped_early = false;
  std::vector<Check> failures;  // violations and indeterminate checks
  std::vector<Check> all;       // every check when keep_checks is set
  double millis = 0;

  bool ok() const { return violations == 0 && indeterminate == 0 && !stopped_early; }
  int exit_code() const { return violations ? 2 : indeterminate ? 3 : 0; }
};

inline void to_json(json& j, const Check& c) {
  j = {{"instance", c.instance}, {"verdict", to_string(c.verdict)}, {"branch", c.branch}};
  if (!c.detail.empty()) j["detail"] = c.detail;
  if (!c.payload.is_null()) j["payload"] = c.payload;
}

inline void to_json(json& j, const SuiteReport& r) {
  j = {{"suite", r.suite},     {"cases", r.cases},
       {"checks", r.checks},   {"branches", r.branches},
       {"violations", r.violations}, {"indeterminate", r.indeterminate},
       {"stopped_early", r.stopped_early}, {"millis", r.millis},
       {"failures", r.failures}};
}

using Case = std::function<std::vector<Check>()>;

namespace detail {

inline Check pass(std::string instance, std::string branch, json payload = nullptr) {
  return {std::move(instance), Verdict::Pass, std::move(branch), {}, std::move(payload)};
}

inline Check violation(std::string instance, std::string branch, std::string detail, json payload = nullptr) {
  return {std::move(instance), Verdict::Violation, std::move(branch), std::move(detail), std::move(payload)};
}

inline Check indeterminate(std::string instance, std::string detail) {
  return {std::move(instance), Verdict::Indeterminate, "indeterminate", std::move(detail), nullptr};
}

inline Check expect(std::string instance, std::string what, bool holds, std::string detail = {}) {
  if (holds) return pass(std::move(instance), std::move(what));
  return violation(std::move(instance), std::move(what), detail.empty() ? what + " failed" : std::move(detail));
}

inline int pick(int given, int fallback) { return given < 0 ? fallback : given; }

inline SimpleGraph simple(const MultiGraph& h) { return SimpleGraph::from_multigraph(h); }

// ---- populations ----

/// Connected multigraphs with at least three edges (multiplicity <= 2).
inline std::vector<MultiGraph> small_connected_multigraphs(int n_max, int edges_max) {
  std::vector<MultiGraph> out;
  for (int n = 2; n <= n_max; ++n)
    enumerate_multigraphs({.n = n, .max_multiplicity = 2, .max_edges = edges_max,
                           .filters = {Filter::connected(), Filter::min_edges(3)}},
                          [&](const MultiGraph& h) { out.push_back(h); });
  return out;
}

/// Essentially 3-edge-connected multigraphs with at most edges_max edges,
/// each also taken with up to two decorations (a pendant edge at an original
/// vertex or a subdivision of an original edge), deduplicated up to
/// isomorphism and filtered again for essential 3-edge-connectivity.
inline std::vector<MultiGraph> decorated_population(int n_max, int edges_max) {
  std::vector<MultiGraph> out;
  std::set<std::string> seen;
  auto keep = [&](const MultiGraph& h) {
    if (!seen.insert(canonical_form(h)).second) return;
    if (h.num_edges() < 4 || !is_connected(h) || !is_essentially_k_edge_connected(h, 3).holds) return;
    out.push_back(h);
  };
  for (int n = 2; n <= n_max; ++n)
    enumerate_multigraphs(
        {.n = n, .max_multiplicity = 3, .max_edges = edges_max,
         .filters = {Filter::connected(), Filter::min_edges(4), Filter::essentially_k_edge_connected(3)}},
        [&](const MultiGraph& base) {
          // Operation i < n is a pendant at vertex i, otherwise a subdivision
          // of edge i - n (its first half when already subdivided).
          const auto vs = base.vertices();
          const auto& es0 = base.edges();
          std::vector<EdgeId> es;
          for (const Edge& e : es0) es.push_back(e.id);
          const int ops = static_cast<int>(vs.size() + es.size());
          auto apply = [&](MultiGraph h, std::map<EdgeId, EdgeId>& moved, int op) {
            if (op < static_cast<int>(vs.size())) return attach_pendant(h, vs[op]).graph;
            EdgeId e = es[op - vs.size()];
            while (moved.count(e)) e = moved.at(e);
            const Subdivision s = subdivide_edge(h, e);
            moved[e] = s.first;
            return s.graph;
          };
          keep(base);
          for (int a = 0; a < ops; ++a) {
            std::map<EdgeId, EdgeId> moved_a;
            const MultiGraph ha = apply(base, moved_a, a);
            keep(ha);
            for (int b = a; b < ops; ++b) {
              std::map<EdgeId, EdgeId> moved_b = moved_a;
              keep(apply(ha, moved_b, b));
            }
          }
        });
  return out;
}

/// Appends the decorated base graph with one pendant per vertex and a fixed
/// set of random decorations, so the exception branches are exercised.
inline std::vector<MultiGraph> with_family_members(std::vector<MultiGraph> population, DecorationBase which,
                                                   int random_members = 12) {
  const MultiGraph base = base_graph(which);
  DecorationConfig each;
  for (VertexId v : base.vertices()) each.at[v].pendants = 1;
  population.push_back(decorate(which, each));
  std::mt19937 rng(which == DecorationBase::Petersen ? 15 : 16);
  for (int i = 0; i < random_members; ++i) population.push_back(decorate(which, random_decoration(which, rng, 0.15)));
  return population;
}

inline bool t_free(const MultiGraph& h) {
  return !find_subgraph(h, patterns::diamond()) && !find_subgraph(h, patterns::multitriangle()) &&
         !find_subgraph(h, patterns::triple_edge());
}

// ---- individual suites ----

inline std::vector<Case> dct_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (const MultiGraph& h : small_connected_multigraphs(pick(cfg.n_max, 6), pick(cfg.edges_max, 7)))
    cases.push_back([h, b = cfg.budget]() -> std::vector<Check> {
      const std::string id = describe(h);
      const SimpleGraph l = line_graph(h).graph;
      const WalkResult hc = hamilton_cycle(l, b);
      const WalkResult t = dominating_closed_trail(h, b);
      if (hc.status == SearchStatus::Indeterminate || t.status == SearchStatus::Indeterminate)
        return {indeterminate(id, "search budget exhausted")};
      if (hc.found() != t.found())
        return {violation(id, "mismatch", "hamilton cycle " + to_string(hc.status) + ", dominating closed trail " +
                                              to_string(t.status))};
      if (t.found() && (!is_dominating_closed_trail(h, *t.cert) ||
                        !is_hamilton_cycle(l, hamilton_cycle_from_dct(h, *t.cert))))
        return {violation(id, "certificate", "trail certificate does not re-validate", *t.cert)};
      return {pass(id, t.found() ? "hamiltonian" : "non-hamiltonian", t.found() ? json(*t.cert) : json())};
    });
  return cases;
}

inline std::vector<Case> idt_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (const MultiGraph& h : small_connected_multigraphs(pick(cfg.n_max, 6), pick(cfg.edges_max, 7)))
    cases.push_back([h, b = cfg.budget]() {
      const std::string id = describe(h);
      const LineGraph l = line_graph(h);
      std::vector<Check> out;
      for (const Edge& e1 : h.edges())
        for (const Edge& e2 : h.edges()) {
          if (e1.id == e2.id) continue;
          const std::string pid = id + " e" + std::to_string(e1.id) + ",e" + std::to_string(e2.id);
          const int a1 = l.map.forward.at(e1.id), a2 = l.map.forward.at(e2.id);
          const WalkResult p = hamilton_path(l.graph, a1, a2, b);
          const WalkResult t = idt(h, e1.id, e2.id, b);
          if (p.status == SearchStatus::Indeterminate || t.status == SearchStatus::Indeterminate) {
            out.push_back(indeterminate(pid, "search budget exhausted"));
          } else if (p.found() != t.found()) {
            out.push_back(violation(pid, "mismatch",
                                    "hamilton path " + to_string(p.status) + ", idt " + to_string(t.status)));
          } else if (t.found() && (!is_idt(h, e1.id, e2.id, *t.cert) ||
                                   !is_hamilton_path(l.graph, a1, a2, hamilton_path_from_idt(h, *t.cert)))) {
            out.push_back(violation(pid, "certificate", "trail certificate does not re-validate", *t.cert));
          } else {
            out.push_back(pass(pid, t.found() ? "path" : "no-path"));
          }
        }
      return out;
    });
  return cases;
}

/// Claw-free graphs with the given connectivity and domination bound must be
/// Hamiltonian (or Hamilton-connected).
inline std::vector<Case> domination_cases(const SuiteConfig& cfg, int connectivity, int gamma, int n_default,
                                          bool hamilton_connected) {
  std::vector<Case> cases;
  const int n_max = pick(cfg.n_max, n_default);
  for (int n = connectivity + 1; n <= n_max; ++n)
    enumerate_graphs({.n = n,
                      .filters = {Filter::k_connected(connectivity), Filter::claw_free(),
                                  Filter::domination_at_most(gamma)}},
                     [&](const SimpleGraph& g) {
                       cases.push_back([g, b = cfg.budget, hamilton_connected]() -> std::vector<Check> {
                         const std::string id = describe(g);
                         if (hamilton_connected) {
                           const HamiltonConnectedReport r = is_hamilton_connected(g, b, 1);
                           if (r.status == SearchStatus::Indeterminate) return {indeterminate(id, "budget")};
                           if (!r.holds())
                             return {violation(id, "not-hamilton-connected",
                                               "no hamilton path between " + std::to_string(r.failing_pair->first) +
                                                   " and " + std::to_string(r.failing_pair->second))};
                           return {pass(id, "hamilton-connected")};
                         }
                         const WalkResult c = hamilton_cycle(g, b);
                         if (c.status == SearchStatus::Indeterminate) return {indeterminate(id, "budget")};
                         if (!c.found()) return {violation(id, "non-hamiltonian", "no hamilton cycle")};
                         if (!is_hamilton_cycle(g, *c.cert))
                           return {violation(id, "certificate", "cycle does not re-validate", *c.cert)};
                         return {pass(id, "hamiltonian", *c.cert)};
                       });
                     });
  return cases;
}

inline std::vector<Case> petersen_sharp_cases(const SuiteConfig& cfg) {
  return {[b = cfg.budget]() {
    DecorationConfig dc;
    const MultiGraph p = petersen();
    for (VertexId v : p.vertices()) dc.at[v].pendants = 1;
    const MultiGraph h = p_prime_member(dc);
    const std::string id = "petersen+pendants";
    const SimpleGraph l = line_graph(h).graph;
    const MembershipReport m = is_in_P_prime(h);
    const DominationResult ed = edge_domination_number(h);
    const DominationResult vd = domination_number(l);
    const WalkResult t = dominating_closed_trail(h, b);
    std::vector<Check> out{
        expect(id, "in-P-prime", m.member, m.reason),
        expect(id, "edge-domination-5", ed.number == 5, "edge domination " + std::to_string(ed.number)),
        expect(id, "line-domination-5", vd.number == 5, "domination " + std::to_string(vd.number)),
        expect(id, "line-3-connected", vertex_connectivity_at_least(l, 3).holds),
        expect(id, "line-claw-free", is_claw_free(l)),
    };
    if (t.status == SearchStatus::Indeterminate)
      out.push_back(indeterminate(id, "dominating closed trail search exhausted its budget"));
    else
      out.push_back(expect(id, "no-dominating-closed-trail", t.absent()));
    out.back().payload = json{{"graph", h}, {"edge_dominating_set", ed.witness.members}};
    return out;
  }};
}

inline Check pipeline_check(const MultiGraph& h, const VerdictReport& r) {
  const std::string& id = r.instance;
  switch (r.branch) {
    case Branch::Indeterminate: return indeterminate(id, r.diagnostic);
    case Branch::Violation: return violation(id, "violation", r.diagnostic, r);
    case Branch::Exception: {
      // Membership includes the core shape (after absorbing double edges to
      // subdivision vertices in the Wagner case).
      const bool shape = r.claim == Claim::Hamiltonian ? is_in_P_prime(h).member && is_isomorphic(core(h).graph, petersen())
                                                       : is_in_W_prime(h).member;
      if (!shape)
        return violation(id, "exception", "exception without the decorated base shape", r);
      return pass(id, "exception", r);
    }
    case Branch::Certificate: break;
  }
  return pass(id, "certificate", r);
}

inline std::vector<Case> pipeline_five_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (const MultiGraph& h : with_family_members(decorated_population(pick(cfg.n_max, 7), pick(cfg.edges_max, 10)),
                                                  DecorationBase::Petersen))
    cases.push_back([h, b = cfg.budget]() -> std::vector<Check> {
      const std::string id = describe(h);
      const auto dom = edge_domination_number(h).witness.members;
      if (dom.size() > 5) return {pass(id, "skipped: edge domination > 5")};
      const VerdictReport r = verify_hamiltonian_instance(h, dom, b, id);
      Check c = pipeline_check(h, r);
      if (r.branch == Branch::Exception && c.verdict == Verdict::Pass)
        c.branch = dominating_closed_trail(h, b).found() ? "exception (a dominating closed trail exists)"
                                                         : "exception (no dominating closed trail)";
      if (r.branch == Branch::Certificate) {
        const SimpleGraph l = line_graph(h).graph;
        if (!is_dominating_closed_trail(h, *r.walk) || !is_hamilton_cycle(l, hamilton_cycle_from_dct(h, *r.walk)))
          return {violation(id, "certificate", "dominating closed trail does not re-validate", r)};
        if (l.n() <= 20) {
          const WalkResult direct = hamilton_cycle(l, b);
          if (direct.absent()) return {violation(id, "certificate", "direct search finds no hamilton cycle", r)};
        }
      }
      return {c};
    });
  return cases;
}

inline std::vector<Case> pipeline_four_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (const MultiGraph& h : with_family_members(decorated_population(pick(cfg.n_max, 7), pick(cfg.edges_max, 10)),
                                                  DecorationBase::Wagner))
    cases.push_back([h, b = cfg.budget]() -> std::vector<Check> {
      const std::string id = describe(h);
      const auto dom = edge_domination_number(h).witness.members;
      if (dom.size() > 4) return {pass(id, "skipped: edge domination > 4")};
      if (!t_free(h)) return {pass(id, "skipped: contains T1/T2/T3")};
      const LineGraph l = line_graph(h);
      std::vector<Check> out;
      for (const Edge& e1 : h.edges())
        for (const Edge& e2 : h.edges()) {
          if (e1.id >= e2.id) continue;
          const std::string pid = id + " e" + std::to_string(e1.id) + ",e" + std::to_string(e2.id);
          const VerdictReport r = verify_hamilton_connected_instance(h, e1.id, e2.id, dom, b, pid);
          out.push_back(pipeline_check(h, r));
          if (r.branch == Branch::Exception && out.back().verdict == Verdict::Pass)
            out.back().branch = idt(h, e1.id, e2.id, b).found() ? "exception (an idt exists)" : "exception (no idt)";
          if (r.branch == Branch::Certificate &&
              (!is_idt(h, e1.id, e2.id, *r.walk) ||
               !is_hamilton_path(l.graph, l.map.forward.at(e1.id), l.map.forward.at(e2.id),
                                 hamilton_path_from_idt(h, *r.walk))))
            out.back() = violation(pid, "certificate", "trail does not re-validate", r);
        }
      return out;
    });
  return cases;
}

inline std::vector<Case> pipeline_hyper_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  const int n_max = std::min(pick(cfg.n_max, 6), 6);
  for (int n = 3; n <= n_max; ++n)
    enumerate_3hypergraphs({.n = n, .min_hyperedges = 4, .max_hyperedges = pick(cfg.edges_max, 5)},
                           [&](const Hypergraph3& hg) {
                             cases.push_back([hg, b = cfg.budget]() -> std::vector<Check> {
                               const std::string id = describe(hg);
                               const SimpleGraph l = line_graph_h3(hg);
                               if (!vertex_connectivity_at_least(l, 3).holds)
                                 return {pass(id, "skipped: line graph not 3-connected")};
                               const DominationResult d = domination_number(l);
                               if (d.number > 4) return {pass(id, "skipped: domination > 4")};
                               const VerdictReport r = verify_hypergraph_instance(hg, d.witness.members, b, id);
                               if (r.branch == Branch::Exception)
                                 return {violation(id, "exception", "no exceptions exist for hypergraphs", r)};
                               Check c = pipeline_check(MultiGraph{}, r);
                               if (r.branch == Branch::Certificate) {
                                 if (!is_dominating_quasitrail(incidence_graph(hg), *r.walk))
                                   return {violation(id, "certificate", "quasitrail does not re-validate", r)};
                                 if (l.n() <= 20 && hamilton_cycle(l, b).absent())
                                   return {violation(id, "certificate", "direct search finds no hamilton cycle", r)};
                               }
                               return {c};
                             });
                           });
  return cases;
}

// A reduction that collapses a cycle onto a single vertex counts as the
// one-vertex core.
inline MultiGraph core_or_point(const MultiGraph& h, ReductionOrder order = {}) {
  try {
    return core(h, order).graph;
  } catch (const DegenerateCore&) {
    return MultiGraph::with_vertices(1);
  }
}

inline std::vector<Case> core_unique_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (const MultiGraph& h : decorated_population(pick(cfg.n_max, 7), pick(cfg.edges_max, 10)))
    cases.push_back([h]() -> std::vector<Check> {
      const std::string id = describe(h);
      const MultiGraph c0 = core_or_point(h);
      for (unsigned seed = 1; seed <= 10; ++seed) {
        const MultiGraph c = core_or_point(h, {seed});
        if (!is_isomorphic(c, c0))
          return {violation(id, "non-unique", "reduction order " + std::to_string(seed) + " gives " + describe(c) +
                                                  ", default order gives " + describe(c0))};
      }
      if (c0.num_vertices() > 1 && !edge_connectivity_at_least(c0, 3).holds)
        return {violation(id, "not-3-edge-connected", "core " + describe(c0))};
      return {pass(id, c0.num_vertices() > 1 ? "unique" : "unique (one-vertex core)")};
    });
  return cases;
}

inline std::vector<Case> dichotomy_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  auto add = [&](const MultiGraph& h, unsigned seed) {
    cases.push_back([h, seed, b = cfg.budget]() {
      const std::string id = describe(h);
      std::mt19937 rng(seed);
      std::vector<Check> out;
      const auto vs = h.vertices();
      for (int sample = 0; sample < 20; ++sample) {
        std::vector<VertexId> a;
        for (VertexId v : vs)
          if (rng() % 2) a.push_back(v);
        const std::string sid = id + " #" + std::to_string(sample);
        const WalkResult t = closed_trail_through(h, a, std::nullopt, b);
        if (t.found()) {
          out.push_back(pass(sid, "trail"));
          continue;
        }
        const ContractionQuery q{a};
        const auto c = find_contraction(h, petersen(), q, b);
        if (t.status == SearchStatus::Indeterminate && !c.found()) {
          out.push_back(indeterminate(sid, "budget"));
        } else if (c.found() && is_valid_contraction(h, *c.cert, q)) {
          out.push_back(pass(sid, "contraction", *c.cert));
        } else {
          out.push_back(violation(sid, "neither", "no closed trail through A and no Petersen contraction",
                                  json{{"marks", a}}));
        }
      }
      return out;
    });
  };
  unsigned seed = 1;
  for (int n = 2; n <= pick(cfg.n_max, 7); ++n)
    enumerate_multigraphs({.n = n, .max_multiplicity = 3, .max_edges = pick(cfg.edges_max, 12),
                           .filters = {Filter::k_edge_connected(3)}},
                          [&](const MultiGraph& h) { add(h, seed++); });
  enumerate_graphs({.n = 10, .filters = {Filter::regular(3), Filter::connected()}}, [&](const SimpleGraph& g) {
    const MultiGraph h = g.to_multigraph();
    if (edge_connectivity_at_least(h, 3).holds) add(h, seed++);
  });
  // Petersen with every vertex marked, and with an edge forced and its ends unmarked.
  cases.push_back([b = cfg.budget]() {
    const MultiGraph p = petersen();
    std::vector<Check> out;
    const std::vector<VertexId> all = p.vertices();
    const ContractionQuery q{all};
    const auto c = find_contraction(p, p, q, b);
    out.push_back(expect("petersen A=V", "petersen-contraction",
                         closed_trail_through(p, all, std::nullopt, b).absent() && c.found() &&
                             is_valid_contraction(p, *c.cert, q)));
    for (const Edge& e : p.edges()) {
      std::vector<VertexId> a;
      for (VertexId v : all)
        if (!e.touches(v)) a.push_back(v);
      const ContractionQuery qe{a, e.id};
      const auto ce = find_contraction(p, p, qe, b);
      out.push_back(expect("petersen A=V-e" + std::to_string(e.id), "petersen-edge-contraction",
                           closed_trail_through(p, a, e.id, b).absent() && ce.found() &&
                               is_valid_contraction(p, *ce.cert, qe) && ce.cert->edge_image.has_value()));
    }
    return out;
  });
  return cases;
}

inline std::vector<Case> closure_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (int n = 1; n <= pick(cfg.n_max, 8); ++n)
    enumerate_graphs({.n = n, .filters = {Filter::claw_free()}}, [&](const SimpleGraph& g) {
      cases.push_back([g, b = cfg.budget]() -> std::vector<Check> {
        const std::string id = describe(g);
        const SimpleGraph cl = closure(g);
        if (!(closure(cl) == cl)) return {violation(id, "not-idempotent", "cl(cl(G)) != cl(G)")};
        if (!(ryjacek_closure(g, CompletionOrder::HighestFirst).result == cl))
          return {violation(id, "order-dependent", "completion orders disagree")};
        if (!is_claw_free(cl)) return {violation(id, "closure-not-claw-free", describe(cl))};
        MultiGraph pre;
        try {
          pre = preimage(cl);
        } catch (const NotLineGraph& e) {
          return {violation(id, "closure-not-line-graph", e.what())};
        }
        if (has_triangle(pre)) return {violation(id, "preimage-has-triangle", describe(pre))};
        if (g.n() >= 3) {
          const WalkResult hg = hamilton_cycle(g, b), hc = hamilton_cycle(cl, b);
          if (hg.status == SearchStatus::Indeterminate || hc.status == SearchStatus::Indeterminate)
            return {indeterminate(id, "budget")};
          if (hg.found() != hc.found())
            return {violation(id, "hamiltonicity-changed",
                              "G " + to_string(hg.status) + ", closure " + to_string(hc.status))};
        }
        return {pass(id, cl == g ? "closed" : "completed")};
      });
    });
  return cases;
}

inline std::vector<Case> witnesses_cases(const SuiteConfig& cfg) {
  std::vector<Case> cases;
  for (int k : {1, 2, 3}) {
    cases.push_back([k, b = cfg.budget]() {
      const SimpleGraph g = blowup(SharpnessBase::K123, k);
      const std::string id = "K1,2,3 blow-up k=" + std::to_string(k);
      const HamiltonConnectedReport hc = is_hamilton_connected(g, b, 1);
      std::vector<Check> out{
          expect(id, "3-connected", vertex_connectivity_at_least(g, 3).holds),
          expect(id, "domination-1", domination_number(g).number == 1),
          expect(id, "krausz-3", krausz_cover(g, 3).has_value()),
      };
      if (hc.status == SearchStatus::Indeterminate)
        out.push_back(indeterminate(id, "budget"));
      else
        out.push_back(expect(id, "not-hamilton-connected", !hc.holds()));
      if (hc.failing_pair) out.back().payload = {{"pair", {hc.failing_pair->first, hc.failing_pair->second}}};
      return out;
    });
    cases.push_back([k, b = cfg.budget]() {
      const SimpleGraph g = blowup(SharpnessBase::K113, k);
      const std::string id = "K1,1,3 blow-up k=" + std::to_string(k);
      const WalkResult c = hamilton_cycle(g, b);
      std::vector<Check> out{
          expect(id, "2-connected", vertex_connectivity_at_least(g, 2).holds),
          expect(id, "domination-1", domination_number(g).number == 1),
      };
      if (c.status == SearchStatus::Indeterminate)
        out.push_back(indeterminate(id, "budget"));
      else
        out.push_back(expect(id, "non-hamiltonian", c.absent()));
      return out;
    });
  }
  return cases;
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "dct",           "idt",           "dom2",           "dom3-ham",    "dom3-hc",   "petersen-sharp", "pipeline-five",
      "pipeline-four", "pipeline-hyper", "core-unique",   "dichotomy",   "closure",   "witnesses"};
  return names;
}

inline std::vector<Case> suite_cases(const SuiteConfig& cfg) {
  const std::string& s = cfg.suite;
  if (s == "dct") return detail::dct_cases(cfg);
  if (s == "idt") return detail::idt_cases(cfg);
  if (s == "dom2") return detail::domination_cases(cfg, 2, 2, 8, false);
  if (s == "dom3-ham") return detail::domination_cases(cfg, 3, 3, 9, false);
  if (s == "dom3-hc") return detail::domination_cases(cfg, 3, 3, 8, true);
  if (s == "petersen-sharp") return detail::petersen_sharp_cases(cfg);
  if (s == "pipeline-five") return detail::pipeline_five_cases(cfg);
  if (s == "pipeline-four") return detail::pipeline_four_cases(cfg);
  if (s == "pipeline-hyper") return detail::pipeline_hyper_cases(cfg);
  if (s == "core-unique") return detail::core_unique_cases(cfg);
  if (s == "dichotomy") return detail::dichotomy_cases(cfg);
  if (s == "closure") return detail::closure_cases(cfg);
  if (s == "witnesses") return detail::witnesses_cases(cfg);
  throw InputError("unknown suite '" + s + "'");
}

inline SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.shard.count < 1 || cfg.shard.index < 0 || cfg.shard.index >= cfg.shard.count)
    throw InputError("invalid shard " + std::to_string(cfg.shard.index) + "/" + std::to_string(cfg.shard.count));
  const detail::Stopwatch clock;
  const std::vector<Case> all = suite_cases(cfg);
  std::vector<const Case*> mine;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (static_cast<int>(i % cfg.shard.count) == cfg.shard.index) mine.push_back(&all[i]);

  std::vector<std::vector<Check>> results(mine.size());
  std::vector<char> ran(mine.size(), 0);
  std::atomic<bool> stop{false};
  parallel_for(
      static_cast<long>(mine.size()),
      [&](long i) {
        if (stop) return;
        try {
          results[i] = (*mine[i])();
        } catch (const Error& e) {
          // Preconditions are checked by the populations; anything thrown here is a defect.
          results[i] = {detail::violation("case " + std::to_string(i), "error", e.what())};
        }
        ran[i] = 1;
        for (Check& c : results[i]) {
          if (c.verdict == Verdict::Violation && cfg.fail_fast) stop = true;
          if (c.verdict == Verdict::Pass && !cfg.keep_checks) c.payload = nullptr;
        }
      },
      cfg.threads);

  SuiteReport report;
  report.suite = cfg.suite;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (!ran[i]) {
      report.stopped_early = true;
      continue;
    }
    ++report.cases;
    for (Check& c : results[i]) {
      ++report.checks;
      ++report.branches[c.branch];
      if (c.verdict == Verdict::Violation) ++report.violations;
      if (c.verdict == Verdict::Indeterminate) ++report.indeterminate;
      if (c.verdict != Verdict::Pass) report.failures.push_back(c);
      if (cfg.keep_checks) report.all.push_back(std::move(c));
    }
  }
  report.millis = clock.millis();
  return report;
}

}  // namespace hamlab
