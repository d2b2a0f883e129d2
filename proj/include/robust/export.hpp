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

// Human-readable and machine-readable renderings of witnesses, plus DOT
// output for the exchange digraph and the lifted graph. Text and DOT use
// 1-based labels (u1, v1, v1(2)); JSON uses 0-based indices.

#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "robust/robust.hpp"
#include "robust/transversal.hpp"

namespace robust {

inline std::string witness_text(const WitnessConstruction& c) {
  std::ostringstream out;
  out << "X = " << to_string(c.optimal_base) << "\n";
  out << "B = " << to_string(c.base) << "\n";
  out << "groups:";
  if (c.witness.groups.empty()) out << " (none)";
  out << "\n";
  for (std::size_t i = 0; i < c.witness.groups.size(); ++i) {
    out << "  X_" << i + 1 << " = " << to_string(c.witness.groups[i]) << "\n";
  }
  out << "phi:";
  if (c.witness.phi.empty()) out << " (none)";
  out << "\n";
  for (const auto& [u, i] : c.witness.phi) {
    out << "  u" << u + 1 << " -> " << i + 1 << "\n";
  }
  out << "paths:";
  if (c.paths.empty()) out << " (none)";
  out << "\n";
  for (const auto& [u, path] : c.paths) {
    out << "  u" << u + 1 << ":";
    for (std::size_t v : path.vertices) out << " " << right_name(v);
    out << "\n";
  }
  return out.str();
}

/// Groups as sorted index lists, phi as [u, group] pairs.
inline nlohmann::ordered_json witness_json(const WitnessConstruction& c) {
  nlohmann::ordered_json doc;
  doc["X"] = c.optimal_base.elements();
  doc["B"] = c.base.elements();
  doc["groups"] = nlohmann::ordered_json::array();
  for (Subset g : c.witness.groups) doc["groups"].push_back(g.elements());
  doc["phi"] = nlohmann::ordered_json::array();
  for (const auto& [u, i] : c.witness.phi) {
    doc["phi"].push_back({u, i});
  }
  return doc;
}

/// D = (W, A). Sources are drawn as boxes, sinks as double circles; a vertex
/// that is both gets both attributes through its label.
inline std::string digraph_dot(const WitnessConstruction& c) {
  const ExchangeDigraph& d = c.digraph;
  std::ostringstream out;
  out << "digraph D {\n";
  for (std::size_t v : d.vertices()) {
    const bool source = d.is_source(v);
    const bool sink = d.is_sink(v);
    std::string role = source && sink ? "source,sink"
                       : source       ? "source"
                       : sink         ? "sink"
                                      : "inner";
    out << "  \"" << right_name(v) << "\" [label=\"" << right_name(v)
        << "\\n" << role << "\\nX=" << to_string(c.groups.by_vertex[v])
        << "\", shape=" << (source ? "box" : "ellipse")
        << (sink ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& [from, to] : d.arcs) {
    out << "  \"" << right_name(from) << "\" -> \"" << right_name(to)
        << "\";\n";
  }
  out << "}\n";
  return out.str();
}

/// G^k with N as solid edges and E^k \ N dashed.
inline std::string lifted_dot(const LiftedGraph& lifted, const Matching& n) {
  const BipartiteGraph& g = lifted.graph();
  std::ostringstream out;
  out << "graph Gk {\n  rankdir=LR;\n";
  out << "  subgraph cluster_U {\n    label=\"U\";\n";
  for (std::size_t u = 0; u < g.left_count(); ++u) {
    out << "    \"u" << u + 1 << "\" [label=\"u" << u + 1 << " ("
        << lifted.weights()[u] << ")\"];\n";
  }
  out << "  }\n  subgraph cluster_V {\n    label=\"V^k\";\n";
  for (std::size_t v = 0; v < g.right_count(); ++v) {
    out << "    \"" << lifted.right_name(v) << "\";\n";
  }
  out << "  }\n";
  for (const Edge& e : g.edges()) {
    out << "  \"u" << e.left + 1 << "\" -- \"" << lifted.right_name(e.right)
        << "\" [style=" << (n.contains(e) ? "solid" : "dashed") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace robust
