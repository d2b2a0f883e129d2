// Copyright 2026 The Authors.
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

#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "robust/export.hpp"
#include "robust/instance.hpp"
#include "robust/report.hpp"

namespace robust {
namespace {

constexpr const char* kStar =
    "# star\n"
    "left 3\n"
    "right 1\n"
    "k 2\n"
    "weights 3 2 1\n"
    "edges 3\n"
    "0 0\n"
    "1 0\n"
    "2 0\n";

TEST(ParseInstance, TextFormat) {
  const Instance inst = parse_instance(kStar, "star");
  EXPECT_EQ(inst.graph, testing::star_graph());
  EXPECT_EQ(inst.weights, WeightMap({3, 2, 1}));
  EXPECT_EQ(inst.k, 2U);
  EXPECT_EQ(parse_instance(format_instance(inst)).graph, inst.graph);
}

TEST(ParseInstance, JsonFormat) {
  const Instance inst = parse_instance(
      R"({"left": 3, "right": 1, "k": 2, "weights": [3, 2, 1],
          "edges": [[0, 0], [1, 0], [2, 0]]})");
  EXPECT_EQ(inst.graph, testing::star_graph());
  EXPECT_EQ(inst.k, 2U);
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  try {
    parse_instance("left 3\nright 1\nk x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  try {
    parse_instance("left 2\nright 1\nk 1\nweights 1 1\nedges 1\n0\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos);
  }
  EXPECT_THROW(parse_instance("left 2\nright 1\nk 1\nweights 1\nedges 0\n"),
               ParseError);
  EXPECT_THROW(parse_instance("left 2\nright 1\nk 0\nweights 1 1\nedges 0\n"),
               ParseError);
  EXPECT_THROW(parse_instance("left 2\nright 1\nk 1\nweights 1 1\nedges 2\n0 0\n"),
               ParseError);
  EXPECT_THROW(parse_instance("left 2\nright 1\nk 1\nweights 1 -1\nedges 0\n"),
               ParseError);
  EXPECT_THROW(parse_instance("left 2\nright 1\nk 1\nweights 1 1\nedges 1\n0 4\n"),
               ParseError);
  EXPECT_THROW(parse_instance("left 2\nbogus 1\n"), ParseError);
  EXPECT_THROW(parse_instance("{\"left\": 2"), ParseError);
}

TEST(ParseProbability, Forms) {
  EXPECT_EQ(parse_probability("1/4").num, 1U);
  EXPECT_EQ(parse_probability("1/4").den, 4U);
  EXPECT_EQ(parse_probability("0").num, 0U);
  EXPECT_EQ(parse_probability("1").num, 1U);
  const auto p = parse_probability("0.25");
  EXPECT_EQ(p.num * 4, p.den);
  EXPECT_THROW(parse_probability("3/2"), InvalidArgument);
  EXPECT_THROW(parse_probability("x"), InvalidArgument);
  EXPECT_THROW(parse_probability("1/0"), InvalidArgument);
}

TEST(GenerateInstance, EdgeProbabilityExtremes) {
  GenParams p;
  p.left = 4;
  p.right = 3;
  p.edge_probability = {0, 1};
  EXPECT_TRUE(generate_instance(p).graph.edges().empty());
  p.edge_probability = {1, 1};
  EXPECT_EQ(generate_instance(p).graph.edges().size(), 12U);
}

TEST(GenerateInstance, DeterministicAndGuarded) {
  GenParams p;
  p.seed = 99;
  p.left = 6;
  p.right = 4;
  EXPECT_EQ(format_instance(generate_instance(p)),
            format_instance(generate_instance(p)));
  p.seed = 100;
  const std::string other = format_instance(generate_instance(p));
  p.seed = 99;
  EXPECT_NE(format_instance(generate_instance(p)), other);
  p.left = 11;
  EXPECT_THROW(generate_instance(p), GuardExceeded);
  p.left = 3;
  p.k = 5;
  EXPECT_THROW(generate_instance(p), GuardExceeded);
}

TEST(SweepInstance, StaysInsideTheShape) {
  const SweepShape shape;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = sweep_instance(seed, shape);
    EXPECT_GE(inst.graph.left_count(), 1U);
    EXPECT_LE(inst.graph.left_count(), shape.max_left);
    EXPECT_LE(inst.graph.right_count(), shape.max_right);
    EXPECT_LE(inst.k, shape.max_k);
    for (Weight w : inst.weights.values()) EXPECT_LE(w, shape.max_weight);
  }
}

TEST(WitnessExport, StarJsonAndText) {
  const auto c = construct_witness(testing::star_graph(), WeightMap({3, 2, 1}),
                                   2, Subset{0, 1}, Subset{2});
  EXPECT_EQ(witness_json(c).dump(),
            R"({"X":[0,1],"B":[2],"groups":[[0,1]],"phi":[[2,0]]})");
  const std::string text = witness_text(c);
  EXPECT_NE(text.find("X_1 = {u1, u2}"), std::string::npos);
  EXPECT_NE(text.find("u3 -> 1"), std::string::npos);
}

TEST(WitnessExport, EmptyWitness) {
  const auto c = construct_witness(testing::path_graph(), WeightMap({3, 2, 1}),
                                   1, Subset{0, 1}, Subset{0, 1});
  EXPECT_EQ(witness_json(c)["groups"].size(), 0U);
  EXPECT_NE(witness_text(c).find("groups: (none)"), std::string::npos);
}

// Minimal line-oriented check against the DOT grammar subset we emit.
bool looks_like_dot(const std::string& text, const std::string& kind) {
  std::istringstream in(text);
  std::string line;
  const std::regex header("^" + kind + " [A-Za-z]+ \\{$");
  const std::string arrow = kind == "digraph" ? "->" : "--";
  const std::regex id("\"[^\"]+\"");
  const std::regex attrs("( \\[[a-z]+=(\"[^\"]*\"|[a-z]+)(, [a-z]+=(\"[^\"]*\"|[a-z0-9]+))*\\])?;$");
  const std::regex node("^ +\"[^\"]+\"( \\[[a-z]+=(\"[^\"]*\"|[a-z]+)(, [a-z]+=(\"[^\"]*\"|[a-z0-9]+))*\\])?;$");
  const std::regex edge("^ +\"[^\"]+\" " + arrow +
                        " \"[^\"]+\"( \\[style=(solid|dashed)\\])?;$");
  const std::regex other("^ +(rankdir=LR;|label=\"[^\"]*\";|subgraph [A-Za-z_]+ \\{|\\})$");
  int depth = 0;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      if (!std::regex_match(line, header)) return false;
      first = false;
      depth = 1;
      continue;
    }
    if (line == "}") {
      --depth;
      continue;
    }
    if (std::regex_match(line, edge) || std::regex_match(line, node)) continue;
    if (std::regex_match(line, other)) {
      if (line.back() == '{') ++depth;
      if (line.back() == '}') --depth;
      continue;
    }
    return false;
  }
  return !first && depth == 0;
}

TEST(DotExport, ParsesAndMarksMatchingEdges) {
  const auto c = construct_witness(testing::star_graph(), WeightMap({3, 2, 1}),
                                   2, Subset{0, 1}, Subset{2});
  const std::string d = digraph_dot(c);
  const std::string g = lifted_dot(c.lifted, c.lifted_matching);
  EXPECT_TRUE(looks_like_dot(d, "digraph")) << d;
  EXPECT_TRUE(looks_like_dot(g, "graph")) << g;
  std::size_t solid = 0, dashed = 0;
  for (std::size_t pos = 0; (pos = g.find("style=solid", pos)) != std::string::npos; ++pos) ++solid;
  for (std::size_t pos = 0; (pos = g.find("style=dashed", pos)) != std::string::npos; ++pos) ++dashed;
  EXPECT_EQ(solid, c.lifted_matching.size());
  EXPECT_EQ(solid + dashed, c.lifted.graph().edges().size());
  EXPECT_NE(d.find("source,sink"), std::string::npos);
}

TEST(DotExport, ChainDigraphHasArc) {
  const BipartiteGraph chain(3, 2, {{0, 0}, {0, 1}, {1, 1}, {2, 0}});
  const auto c = construct_witness(chain, WeightMap({3, 2, 1}), 1, Subset{0, 1},
                                   Subset{0, 2});
  const std::string d = digraph_dot(c);
  EXPECT_TRUE(looks_like_dot(d, "digraph")) << d;
  EXPECT_NE(d.find("\"v1\" -> \"v2\";"), std::string::npos);
}

TEST(Report, CsvSchemaAndDeterminism) {
  std::vector<Instance> instances;
  instances.push_back(parse_instance(kStar, "star"));
  for (std::uint64_t s = 1; s <= 12; ++s) instances.push_back(sweep_instance(s, {}));
  const auto serial = run_all(instances, 1);
  const auto parallel = run_all(instances, 4);
  const std::string csv = records_csv(serial);
  EXPECT_EQ(csv, records_csv(parallel));
  EXPECT_EQ(records_json(serial), records_json(parallel));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "instance_id,nU,nV,k,rank,tau,bound_k,bound_hs22,theorem_pass,"
            "oracle_equiv_pass,greedy_equiv_pass,elapsed_ms");
  EXPECT_NE(csv.find("\nstar,3,1,2,1,2,2,2,pass,pass,pass,\n"), std::string::npos);
  for (const auto& r : serial) EXPECT_FALSE(r.failed());
}

TEST(Report, EmptyInstanceList) {
  const auto records = run_all({}, 4);
  EXPECT_TRUE(records.empty());
  EXPECT_EQ(records_json(records), "[]\n");
}

TEST(Report, CorruptedOracleFails) {
  CheckOptions options;
  options.corrupt_oracle = true;
  const auto rec = run_checks(parse_instance(kStar, "star"), options);
  EXPECT_EQ(rec.oracle_equivalence, CheckStatus::kFail);
  EXPECT_TRUE(rec.failed());
}

TEST(Report, LargeInstancesSkipByGuard) {
  GenParams p;
  p.left = 10;
  p.right = 2;
  p.k = 1;
  p.edge_probability = {1, 2};
  const auto rec = run_checks(generate_instance(p));
  EXPECT_EQ(rec.oracle_equivalence, CheckStatus::kSkipped);
  EXPECT_EQ(rec.greedy_equivalence, CheckStatus::kSkipped);
  EXPECT_NE(rec.theorem, CheckStatus::kFail);
}

}  // namespace
}  // namespace robust
