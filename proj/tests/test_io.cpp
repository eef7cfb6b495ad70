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

#include <gtest/gtest.h>

#include "hamlab/atlas.hpp"
#include "hamlab/canonical.hpp"
#include "hamlab/io.hpp"
#include "hamlab/named.hpp"

namespace hamlab {
namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(EdgeList, Parses) {
  const MultiGraph h = parse_edge_list(
      "# a triangle with a doubled side\n"
      "3 4 multi\n"
      "0 1 2   # two copies\n"
      "\n"
      "1 2\n"
      "2 0\n"
      "label 2 the apex\n");
  EXPECT_EQ(h.num_vertices(), 3);
  EXPECT_EQ(h.num_edges(), 4);
  EXPECT_EQ(h.multiplicity(0, 1), 2);
  EXPECT_EQ(h.vertex_label(2), "the apex");
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 1);
  EXPECT_EQ(parse_error_line("3 x\n"), 1);
  EXPECT_EQ(parse_error_line("3 2 simple\n"), 1);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n0 1\n"), 3);      // parallel without multi
  EXPECT_EQ(parse_error_line("3 2\n0 1\n# c\n1 7\n"), 4);  // out of range
  EXPECT_EQ(parse_error_line("3 1\n1 1\n"), 2);            // loop
  EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3);       // too many
  EXPECT_EQ(parse_error_line("3 3\n0 1\n1 2\n"), 3);       // too few
  EXPECT_EQ(parse_error_line("3 1 multi\n0 1 0\n"), 2);
  EXPECT_EQ(parse_error_line("3 1\n0 1\nlabel 9 x\n"), 3);
  EXPECT_EQ(parse_error_line("3 1\n0 1 2 3\n"), 2);
}

TEST(EdgeList, RoundTrip) {
  long checked = 0;
  for (int n = 1; n <= 5; ++n)
    enumerate_multigraphs({.n = n, .max_multiplicity = 3, .max_edges = 7}, [&](const MultiGraph& h) {
      const MultiGraph back = parse_edge_list(write_edge_list(h));
      ASSERT_EQ(canonical_form(back), canonical_form(h));
      ++checked;
    });
  EXPECT_GT(checked, 100);
  MultiGraph p = petersen();
  p.set_vertex_label(3, "pendant");
  const MultiGraph q = parse_edge_list(write_edge_list(p));
  EXPECT_EQ(q.vertex_label(3), "pendant");
  EXPECT_TRUE(is_isomorphic(q, p));
}

TEST(Hypergraph, ParsesAndRoundTrips) {
  const Hypergraph3 hg = parse_hypergraph("4\n0 1 2\n# edge\n2 3\n");
  EXPECT_EQ(hg.size(), 2);
  EXPECT_EQ(hg.hyperedge(0), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(canonical_form(parse_hypergraph(write_hypergraph(hg))), canonical_form(hg));
  auto line_of = [](const std::string& text) {
    try {
      parse_hypergraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("4\n0 1 2 3\n"), 2);
  EXPECT_EQ(line_of("4\n0 1\n2\n"), 3);
  EXPECT_EQ(line_of("4\n0 0\n"), 2);
  EXPECT_EQ(line_of("4 4\n"), 1);
  EXPECT_EQ(line_of("# nothing\n"), 1);
}

TEST(Dot, Shapes) {
  const MultiGraph k = complete_graph(3);
  const std::string dot = to_dot(k, std::set<EdgeId>{0});
  EXPECT_NE(dot.find("graph H {"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 2 + 3 + 3 + 1);
  EXPECT_NE(dot.find("color=red"), std::string::npos);
  EXPECT_NE(to_dot(SimpleGraph::from_multigraph(k)).find("0 -- 1"), std::string::npos);
}

TEST(Json, Serializers) {
  const WalkCert w{WalkCert::Kind::ClosedTrail, {0, 1, 2, 0}, {0, 1, 2}};
  const json jw = w;
  EXPECT_EQ(jw["kind"], "closed_trail");
  EXPECT_EQ(jw["length"], 3);
  const json jg = complete_graph(4);
  EXPECT_EQ(jg["m"], 6);
  VerdictReport r;
  r.instance = "x";
  r.branch = Branch::Certificate;
  r.walk = w;
  const json jr = r;
  EXPECT_EQ(jr["branch"], "certificate");
  EXPECT_EQ(jr["walk"]["vertices"].size(), 4u);
  EXPECT_FALSE(jr.contains("contraction"));
  const json jd = edge_domination_number(petersen());
  EXPECT_EQ(jd["number"], 3);
  EXPECT_EQ(jd["kind"], "edge");
}

}  // namespace
}  // namespace hamlab
