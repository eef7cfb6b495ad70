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

// hamlab command-line driver. Exit codes: 0 success, 2 violation,
// 3 indeterminate or budget/size bound, 4 input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "hamlab.hpp"

namespace {

using namespace hamlab;

constexpr int kOk = 0, kViolation = 2, kIndeterminate = 3, kInputError = 4;

struct Options {
  std::string file;
  bool hypergraph = false;
  long budget_ms = 60'000;
  long budget_nodes = -1;
  std::string format = "json";
  std::vector<int> marks;
  std::vector<int> dom;
  int edge = -1, e1 = -1, e2 = -1, from = -1, to = -1;
  bool edges = false;
  // suite
  std::string suite;
  int n_max = -1, edges_max = -1;
  std::string shard = "0/1";
  std::string emit;
  std::string out;
  bool fail_fast = false;
  // family / contract / pipeline
  std::string which;
  std::string config;
  bool pendant_each = false;
  int seed = -1;
  int k = 1;
  std::string target = "petersen";
};

Budget budget_of(const Options& o) { return {.nodes = o.budget_nodes, .milliseconds = o.budget_ms}; }

int status_code(SearchStatus s) { return s == SearchStatus::Indeterminate ? kIndeterminate : kOk; }

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

SimpleGraph require_simple(const MultiGraph& h) {
  if (!h.is_simple()) throw InputError("this command needs a simple graph");
  return SimpleGraph::from_multigraph(h);
}

std::string status_of(const WalkResult& r) { return to_string(r.status); }

// Emits a graph in the requested format.
void emit_graph(const MultiGraph& h, const std::string& format, const json& extra = nullptr) {
  if (format == "dot") {
    std::cout << to_dot(h);
  } else if (format == "edges") {
    std::cout << write_edge_list(h);
  } else {
    json j{{"graph", h}, {"edge_list", write_edge_list(h)}};
    if (!extra.is_null()) j.update(extra);
    print(j);
  }
}

// ---- analyze ----

json analyze_simple(const SimpleGraph& g, Budget b) {
  json j;
  j["connected"] = is_connected(g);
  for (int k = 2; k <= 3; ++k) j[std::to_string(k) + "_connected"] = vertex_connectivity_at_least(g, k).holds;
  const auto claw = find_induced_claw(g);
  j["claw_free"] = !claw;
  if (claw) j["claw"] = {claw->center, claw->leaves[0], claw->leaves[1], claw->leaves[2]};
  j["domination"] = domination_number(g);
  if (g.n() >= 3) {
    const WalkResult c = hamilton_cycle(g, b);
    j["hamiltonian"] = c.found() ? json(true) : c.absent() ? json(false) : json("indeterminate");
    if (c.found()) j["hamilton_cycle"] = *c.cert;
    if (g.n() <= 12) {
      const HamiltonConnectedReport hc = is_hamilton_connected(g, b);
      j["hamilton_connected"] = hc.holds() ? json(true) : hc.status == SearchStatus::Absent ? json(false)
                                                                                            : json("indeterminate");
      if (hc.failing_pair) j["hamilton_connected_failing_pair"] = {hc.failing_pair->first, hc.failing_pair->second};
    } else {
      j["hamilton_connected"] = "skipped (more than 12 vertices)";
    }
  }
  if (!claw) {
    const ClosureTrace t = ryjacek_closure(g);
    j["closure"] = {{"is_closed", t.result == g}, {"steps", t.steps.size()},
                    {"edges_added", t.result.num_edges() - g.num_edges()}};
  }
  const MClosedReport mc = is_m_closed(g);
  j["line_graph"] = mc.line_graph;
  j["m_closed"] = mc.holds;
  if (!mc.pattern.empty()) j["m_closed_obstruction"] = mc.pattern;
  return j;
}

json analyze_multigraph(const MultiGraph& h, Budget b) {
  json j;
  if (h.num_edges() > 0 && !h.has_loops()) j["edge_domination"] = edge_domination_number(h);
  if (h.num_edges() >= 4 && is_connected(h)) {
    const EdgeCutReport r = is_essentially_k_edge_connected(h, 3);
    j["essentially_3_edge_connected"] = r.holds;
    if (!r.holds) j["essential_cut"] = r.cut;
  }
  try {
    const Core c = core(h);
    j["core"] = {{"n", c.graph.num_vertices()},
                 {"m", c.graph.num_edges()},
                 {"operations", c.trace.ops.size()},
                 {"petersen", is_isomorphic(c.graph, petersen())},
                 {"wagner", is_isomorphic(c.graph, wagner())},
                 {"edges", describe(c.graph)}};
  } catch (const DegenerateCore& e) {
    j["core"] = {{"degenerate", e.what()}};
  }
  if (h.num_edges() > 0 && is_connected(h)) j["dominating_closed_trail"] = status_of(dominating_closed_trail(h, b));
  return j;
}

int cmd_analyze(const Options& o) {
  const Budget b = budget_of(o);
  if (o.hypergraph) {
    const Hypergraph3 hg = load_hypergraph(o.file);
    const SimpleGraph l = line_graph_h3(hg);
    json j{{"n", hg.n()}, {"hyperedges", hg.size()}, {"rank", hg.rank()}};
    j["line_graph"] = analyze_simple(l, b);
    j["line_graph"]["n"] = l.n();
    const IncidenceGraph ig = incidence_graph(hg);
    if (is_connected(ig.graph)) j["dominating_quasitrail"] = status_of(dominating_quasitrail(ig, b));
    print(j);
    return kOk;
  }
  const MultiGraph h = load_edge_list(o.file);
  json j{{"n", h.num_vertices()}, {"m", h.num_edges()}, {"simple", h.is_simple()}};
  if (h.is_simple()) j.update(analyze_simple(SimpleGraph::from_multigraph(h), b));
  j.update(analyze_multigraph(h, b));
  if (!h.is_simple() && h.num_edges() <= kMaskBits) j["line_graph_of_input"] = analyze_simple(line_graph(h).graph, b);
  print(j);
  return kOk;
}

// ---- suite ----

Shard parse_shard(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) throw InputError("shard must look like i/k");
  try {
    return {std::stoi(s.substr(0, slash)), std::stoi(s.substr(slash + 1))};
  } catch (const std::exception&) {
    throw InputError("shard must look like i/k");
  }
}

int cmd_suite(const Options& o) {
  if (o.format != "json" && o.format != "csv") throw InputError("suite reports are json or csv");
  SuiteConfig cfg;
  cfg.suite = o.suite;
  cfg.n_max = o.n_max;
  cfg.edges_max = o.edges_max;
  cfg.budget = budget_of(o);
  cfg.shard = parse_shard(o.shard);
  cfg.fail_fast = o.fail_fast;
  cfg.keep_checks = !o.emit.empty();
  const SuiteReport r = run_suite(cfg);

  if (!o.emit.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(o.emit);
    long written = 0;
    for (std::size_t i = 0; i < r.all.size(); ++i) {
      if (r.all[i].payload.is_null()) continue;
      std::ofstream f(fs::path(o.emit) / (o.suite + "-" + std::to_string(cfg.shard.index) + "-" +
                                          std::to_string(i) + ".json"));
      f << json(r.all[i]).dump(2) << '\n';
      ++written;
    }
    std::cerr << "wrote " << written << " certificates to " << o.emit << '\n';
  }

  std::ostringstream text;
  if (o.format == "csv") {
    text << "suite,shard,cases,checks,violations,indeterminate,millis\n"
         << r.suite << ',' << o.shard << ',' << r.cases << ',' << r.checks << ',' << r.violations << ','
         << r.indeterminate << ',' << r.millis << "\nbranch,count\n";
    for (const auto& [branch, count] : r.branches) text << '"' << branch << "\"," << count << '\n';
  } else {
    text << json(r).dump(2) << '\n';
  }
  if (o.out.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream(o.out) << text.str();
  }
  std::cerr << r.suite << ": " << r.cases << " cases, " << r.checks << " checks, " << r.violations
            << " violations, " << r.indeterminate << " indeterminate (" << static_cast<long>(r.millis) << " ms)\n";
  if (r.violations) return kViolation;
  if (r.indeterminate || r.stopped_early) return kIndeterminate;
  return kOk;
}

// ---- family ----

DecorationConfig read_decoration(const Options& o, DecorationBase base) {
  if (!o.config.empty()) {
    // {"0": {"pendants": 1, "double_pendants": 0, "subdivide": [..], "double_to_subdivision": [..]}, ...}
    const json j = json::parse(detail::read_file(o.config), nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InputError("config must be a JSON object keyed by vertex");
    DecorationConfig cfg;
    for (const auto& [key, val] : j.items()) {
      VertexDecoration& d = cfg.at[std::stoi(key)];
      d.pendants = val.value("pendants", 0);
      d.double_pendants = val.value("double_pendants", 0);
      d.subdivide = val.value("subdivide", std::vector<EdgeId>{});
      d.double_to_subdivision = val.value("double_to_subdivision", std::vector<EdgeId>{});
    }
    return cfg;
  }
  if (o.seed >= 0) {
    std::mt19937 rng(static_cast<unsigned>(o.seed));
    return random_decoration(base, rng);
  }
  if (!o.pendant_each) throw InputError("family needs --config, --seed or --pendant-each");
  DecorationConfig cfg;
  const MultiGraph g = base_graph(base);
  for (VertexId v : g.vertices()) cfg.at[v].pendants = 1;
  return cfg;
}

int cmd_family(const Options& o) {
  if (o.which == "pprime" || o.which == "wprime") {
    const DecorationBase base = o.which == "pprime" ? DecorationBase::Petersen : DecorationBase::Wagner;
    const MultiGraph h = decorate(base, read_decoration(o, base));
    const MembershipReport r = base == DecorationBase::Petersen ? is_in_P_prime(h) : is_in_W_prime(h);
    emit_graph(h, o.format, json{{"membership", r}});
    return kOk;
  }
  if (o.which == "k123" || o.which == "k113") {
    const SimpleGraph g = blowup(o.which == "k123" ? SharpnessBase::K123 : SharpnessBase::K113, o.k);
    emit_graph(g.to_multigraph(), o.format, json{{"k", o.k}});
    return kOk;
  }
  throw InputError("family must be pprime, wprime, k123 or k113");
}

// ---- single-instance commands ----

MultiGraph named_or_file(const std::string& s) {
  if (s == "petersen") return petersen();
  if (s == "wagner") return wagner();
  return load_edge_list(s);
}

int cmd_contract(const Options& o) {
  const MultiGraph h = load_edge_list(o.file);
  ContractionQuery q{std::vector<VertexId>(o.marks.begin(), o.marks.end())};
  if (o.edge >= 0) q.constrained_edge = o.edge;
  const auto r = find_contraction(h, named_or_file(o.target), q, budget_of(o));
  json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
  if (r.found()) j["contraction"] = *r.cert;
  print(j);
  return status_code(r.status);
}

int cmd_linegraph(const Options& o) {
  const SimpleGraph l = o.hypergraph ? line_graph_h3(load_hypergraph(o.file)) : line_graph(load_edge_list(o.file)).graph;
  if (o.format == "json")
    print(json{{"line_graph", l}});
  else
    emit_graph(l.to_multigraph(), o.format);
  return kOk;
}

int cmd_preimage(const Options& o) {
  emit_graph(preimage(require_simple(load_edge_list(o.file))), o.format == "json" ? "json" : o.format);
  return kOk;
}

int cmd_closure(const Options& o) {
  const ClosureTrace t = ryjacek_closure(require_simple(load_edge_list(o.file)));
  json steps = json::array();
  for (const ClosureStep& s : t.steps) steps.push_back({{"vertex", s.vertex}, {"added", s.added}});
  if (o.format == "json")
    print(json{{"closure", t.result}, {"steps", steps}});
  else
    emit_graph(t.result.to_multigraph(), o.format);
  return kOk;
}

int cmd_dominate(const Options& o) {
  const MultiGraph h = load_edge_list(o.file);
  print(o.edges ? json(edge_domination_number(h)) : json(domination_number(require_simple(h))));
  return kOk;
}

int cmd_core(const Options& o) {
  const MultiGraph h = load_edge_list(o.file);
  const Core c = core(h);
  if (o.format == "json")
    print(json{{"core", c.graph}, {"trace", c.trace}});
  else
    emit_graph(c.graph, o.format);
  return kOk;
}

int report_walk(const WalkResult& r, const std::string& format, const MultiGraph* h = nullptr) {
  if (format == "dot" && h && r.found()) {
    std::cout << to_dot(*h, *r.cert);
  } else {
    json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
    if (r.found()) j["walk"] = *r.cert;
    print(j);
  }
  return status_code(r.status);
}

int cmd_ham(const Options& o) {
  const SimpleGraph g = require_simple(load_edge_list(o.file));
  if ((o.from < 0) != (o.to < 0)) throw InputError("--from and --to go together");
  return report_walk(o.from < 0 ? hamilton_cycle(g, budget_of(o)) : hamilton_path(g, o.from, o.to, budget_of(o)),
                     o.format);
}

int cmd_trail(const Options& o) {
  const MultiGraph h = load_edge_list(o.file);
  std::optional<EdgeId> req;
  if (o.edge >= 0) req = o.edge;
  return report_walk(closed_trail_through(h, std::vector<VertexId>(o.marks.begin(), o.marks.end()), req, budget_of(o)),
                     o.format, &h);
}

int cmd_dct(const Options& o) {
  const MultiGraph h = load_edge_list(o.file);
  return report_walk(dominating_closed_trail(h, budget_of(o)), o.format, &h);
}

int cmd_idt(const Options& o) {
  const MultiGraph h = load_edge_list(o.file);
  return report_walk(idt(h, o.e1, o.e2, budget_of(o)), o.format, &h);
}

int cmd_quasitrail(const Options& o) {
  const IncidenceGraph ig = incidence_graph(load_hypergraph(o.file));
  return report_walk(dominating_quasitrail(ig, budget_of(o)), o.format, &ig.graph);
}

int verdict_code(const VerdictReport& r) {
  print(json(r));
  if (r.branch == Branch::Violation) return kViolation;
  if (r.branch == Branch::Indeterminate) return kIndeterminate;
  return kOk;
}

int cmd_pipeline(const Options& o) {
  const Budget b = budget_of(o);
  if (o.which == "hypergraph") {
    const Hypergraph3 hg = load_hypergraph(o.file);
    std::vector<int> dom = o.dom;
    if (dom.empty()) dom = domination_number(line_graph_h3(hg)).witness.members;
    return verdict_code(verify_hypergraph_instance(hg, dom, b, o.file));
  }
  const MultiGraph h = load_edge_list(o.file);
  std::vector<EdgeId> dom(o.dom.begin(), o.dom.end());
  if (dom.empty()) dom = edge_domination_number(h).witness.members;
  if (o.which == "hamiltonian") return verdict_code(verify_hamiltonian_instance(h, dom, b, o.file));
  if (o.which == "hamilton-connected") {
    if (o.e1 < 0 || o.e2 < 0) throw InputError("hamilton-connected needs --e1 and --e2");
    return verdict_code(verify_hamilton_connected_instance(h, o.e1, o.e2, dom, b, o.file));
  }
  throw InputError("pipeline must be hamiltonian, hamilton-connected or hypergraph");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamlab: Hamiltonicity of small claw-free graphs, line graphs and 3-hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* c, const char* what = "edge-list file") {
    c->add_option("file", o.file, what)->required()->check(CLI::ExistingFile);
  };
  auto budget = [&](CLI::App* c) {
    c->add_option("--budget-ms", o.budget_ms, "per-search time budget")->capture_default_str();
    c->add_option("--budget-nodes", o.budget_nodes, "per-search node budget (unbounded when omitted)");
  };
  auto format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed))->capture_default_str();
  };
  std::map<CLI::App*, int (*)(const Options&)> handlers;

  auto* analyze = app.add_subcommand("analyze", "structural report for one graph or hypergraph");
  input(analyze);
  analyze->add_flag("--hypergraph", o.hypergraph, "input is a hypergraph file");
  budget(analyze);
  handlers[analyze] = cmd_analyze;

  auto* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("--suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--n-max", o.n_max, "largest vertex count (suite default when omitted)");
  suite->add_option("--edges-max", o.edges_max, "largest edge or hyperedge count");
  budget(suite);
  suite->add_option("--shard", o.shard, "run shard i of k")->capture_default_str();
  suite->add_option("--emit-certificates", o.emit, "directory for per-check certificates");
  suite->add_option("--out", o.out, "write the report here instead of stdout");
  suite->add_flag("--fail-fast", o.fail_fast, "stop at the first violation");
  format(suite, {"json", "csv"});
  handlers[suite] = cmd_suite;

  auto* family = app.add_subcommand("family", "generate decorated Petersen/Wagner graphs or sharpness examples");
  family->add_option("which", o.which, "pprime, wprime, k123 or k113")->required();
  family->add_option("--config", o.config, "decoration config (JSON)")->check(CLI::ExistingFile);
  family->add_flag("--pendant-each", o.pendant_each, "one pendant edge per base vertex");
  family->add_option("--seed", o.seed, "random decoration");
  family->add_option("--k", o.k, "blow-up clique size")->capture_default_str();
  format(family, {"json", "edges", "dot"});
  handlers[family] = cmd_family;

  auto* contract = app.add_subcommand("contract", "search for a contraction onto Petersen, Wagner or a given graph");
  input(contract);
  contract->add_option("--target", o.target, "petersen, wagner or an edge-list file")->capture_default_str();
  contract->add_option("--marks", o.marks, "vertices that must land in distinct parts")->delimiter(',');
  contract->add_option("--edge", o.edge, "edge whose image must be an unmarked target edge");
  budget(contract);
  handlers[contract] = cmd_contract;

  auto* linegraph = app.add_subcommand("linegraph", "line graph of a multigraph or hypergraph");
  input(linegraph);
  linegraph->add_flag("--hypergraph", o.hypergraph, "input is a hypergraph file");
  format(linegraph, {"json", "edges", "dot"});
  handlers[linegraph] = cmd_linegraph;

  auto* pre = app.add_subcommand("preimage", "multigraph whose line graph is the input");
  input(pre);
  format(pre, {"json", "edges", "dot"});
  handlers[pre] = cmd_preimage;

  auto* clo = app.add_subcommand("closure", "closure of a claw-free graph with its completion steps");
  input(clo);
  format(clo, {"json", "edges", "dot"});
  handlers[clo] = cmd_closure;

  auto* dom = app.add_subcommand("dominate", "minimum dominating set (or edge dominating set with --edges)");
  input(dom);
  dom->add_flag("--edges", o.edges, "edge domination of a multigraph");
  handlers[dom] = cmd_dominate;

  auto* cor = app.add_subcommand("core", "core reduction with its trace");
  input(cor);
  format(cor, {"json", "edges", "dot"});
  handlers[cor] = cmd_core;

  auto* ham = app.add_subcommand("ham", "hamilton cycle, or hamilton path with --from/--to");
  input(ham);
  ham->add_option("--from", o.from);
  ham->add_option("--to", o.to);
  budget(ham);
  handlers[ham] = cmd_ham;

  auto* trail = app.add_subcommand("trail", "closed trail through the marked vertices");
  input(trail);
  trail->add_option("--marks", o.marks, "vertices the trail must visit")->delimiter(',');
  trail->add_option("--edge", o.edge, "edge the trail must use");
  budget(trail);
  format(trail, {"json", "dot"});
  handlers[trail] = cmd_trail;

  auto* dct = app.add_subcommand("dct", "dominating closed trail");
  input(dct);
  budget(dct);
  format(dct, {"json", "dot"});
  handlers[dct] = cmd_dct;

  auto* idt_cmd = app.add_subcommand("idt", "trail between two edges whose interior dominates every edge");
  input(idt_cmd);
  idt_cmd->add_option("e1", o.e1)->required();
  idt_cmd->add_option("e2", o.e2)->required();
  budget(idt_cmd);
  format(idt_cmd, {"json", "dot"});
  handlers[idt_cmd] = cmd_idt;

  auto* quasi = app.add_subcommand("quasitrail", "dominating closed quasitrail in the incidence graph");
  input(quasi, "hypergraph file");
  budget(quasi);
  format(quasi, {"json", "dot"});
  handlers[quasi] = cmd_quasitrail;

  auto* pipe = app.add_subcommand("pipeline", "replay a reduction pipeline on one instance");
  pipe->add_option("which", o.which, "hamiltonian, hamilton-connected or hypergraph")->required();
  input(pipe, "edge-list or hypergraph file");
  pipe->add_option("--e1", o.e1);
  pipe->add_option("--e2", o.e2);
  pipe->add_option("--dom", o.dom, "dominating edges/hyperedges (minimum one when omitted)")->delimiter(',');
  budget(pipe);
  handlers[pipe] = cmd_pipeline;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    for (auto [cmd, handler] : handlers)
      if (cmd->parsed()) return handler(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NotLineGraph& e) {
    std::cerr << "not a line graph: " << e.what() << '\n';
    return kInputError;
  } catch (const BoundExceeded& e) {
    std::cerr << "size bound exceeded: " << e.what() << '\n';
    return kIndeterminate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
