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

// Transversal matroids M_G and the lifted graph G^k, whose transversal
// matroid is the k-fold union of M_G. Right vertex v(t) of G^k (t in 1..k)
// is numbered v * k + (t - 1).

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "robust/bipartite.hpp"
#include "robust/error.hpp"
#include "robust/matroid.hpp"
#include "robust/subset.hpp"

namespace robust {

/// I is independent iff some matching covers exactly I on the left.
inline IndependenceOracle transversal_oracle(const BipartiteGraph& graph) {
  return IndependenceOracle(graph.left_count(), [graph](Subset s) {
    return matching_covering(graph, s).has_value();
  });
}

/// A right vertex of G^k: original vertex and copy index t in 1..k.
struct CopyLabel {
  std::size_t vertex = 0;
  std::size_t copy = 1;

  friend constexpr auto operator<=>(const CopyLabel&,
                                    const CopyLabel&) = default;
};

class LiftedGraph {
 public:
  LiftedGraph(BipartiteGraph base, WeightMap weights, std::size_t copies)
      : base_(std::move(base)), weights_(std::move(weights)), copies_(copies) {
    if (copies_ == 0) throw InvalidArgument("k must be at least 1");
    weights_.require_size(base_.left_count());
    std::vector<Edge> edges;
    edges.reserve(base_.edges().size() * copies_);
    for (const Edge& e : base_.edges()) {
      for (std::size_t t = 1; t <= copies_; ++t) {
        edges.push_back({e.left, index_of({e.right, t})});
      }
    }
    lifted_ = BipartiteGraph(base_.left_count(), base_.right_count() * copies_,
                             std::move(edges));
  }

  const BipartiteGraph& base() const { return base_; }
  const BipartiteGraph& graph() const { return lifted_; }
  const WeightMap& weights() const { return weights_; }
  std::size_t copies() const { return copies_; }

  std::size_t index_of(CopyLabel label) const {
    if (label.vertex >= base_.right_count() || label.copy == 0 ||
        label.copy > copies_) {
      throw InvalidArgument("copy label out of range");
    }
    return label.vertex * copies_ + (label.copy - 1);
  }

  CopyLabel label_of(std::size_t lifted_right) const {
    if (lifted_right >= lifted_.right_count()) {
      throw InvalidArgument("lifted right vertex out of range");
    }
    return {lifted_right / copies_, lifted_right % copies_ + 1};
  }

  /// omega-bar of a lifted edge, i.e. the weight of its left endpoint.
  Weight edge_weight(const Edge& lifted_edge) const {
    if (!lifted_.has_edge(lifted_edge)) {
      throw InvalidArgument("edge is not in the lifted graph");
    }
    return weights_[lifted_edge.left];
  }

  std::string right_name(std::size_t lifted_right) const {
    const CopyLabel l = label_of(lifted_right);
    return "v" + std::to_string(l.vertex + 1) + "(" + std::to_string(l.copy) +
           ")";
  }

 private:
  BipartiteGraph base_;
  WeightMap weights_;
  std::size_t copies_;
  BipartiteGraph lifted_;
};

inline LiftedGraph build_lifted(const BipartiteGraph& graph,
                                const WeightMap& weights, std::size_t copies) {
  return LiftedGraph(graph, weights, copies);
}

/// Independence in the k-fold union of M_G, decided by matching in G^k.
inline bool union_independence(const LiftedGraph& lifted, Subset s) {
  return matching_covering(lifted.graph(), s).has_value();
}

inline IndependenceOracle union_oracle(const LiftedGraph& lifted) {
  return transversal_oracle(lifted.graph());
}

/// Splits a matching of G^k into the k matchings M_t of G, t = 1..k.
inline std::vector<Matching> project_matching(const LiftedGraph& lifted,
                                              const Matching& n) {
  if (!is_matching(lifted.graph(), n.edges())) {
    throw InvalidArgument("not a matching of the lifted graph");
  }
  std::vector<std::vector<Edge>> parts(lifted.copies());
  for (const Edge& e : n.edges()) {
    const CopyLabel l = lifted.label_of(e.right);
    parts[l.copy - 1].push_back({e.left, l.vertex});
  }
  std::vector<Matching> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(Matching::make(lifted.base(), std::move(p)));
  return out;
}

/// Inverse of project_matching: N = N_1 u ... u N_k with N_t the copy-t image
/// of M_t. Left coverage of the parts must be pairwise disjoint.
inline Matching lift_matching(const LiftedGraph& lifted,
                              const std::vector<Matching>& parts) {
  if (parts.size() != lifted.copies()) {
    throw InvalidArgument("expected one matching per copy");
  }
  std::vector<Edge> edges;
  Subset covered;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    if (!is_matching(lifted.base(), parts[t].edges())) {
      throw InvalidArgument("part is not a matching of the base graph");
    }
    const Subset left = parts[t].left_boundary();
    if (!(left & covered).empty()) {
      throw InvalidArgument("parts overlap on the left at " +
                            to_string(left & covered));
    }
    covered = covered | left;
    for (const Edge& e : parts[t].edges()) {
      edges.push_back({e.left, lifted.index_of({e.right, t + 1})});
    }
  }
  return Matching::make(lifted.graph(), std::move(edges));
}

struct LiftedOptimum {
  Subset base;
  Matching matching;
};

/// An optimal base X of the k-fold union with a matching N of G^k covering
/// exactly X. Greedy over the canonical ordering gives X; since weights sit
/// on left vertices and are non-negative, N is a maximum-weight matching.
inline LiftedOptimum optimal_base_lifted(const LiftedGraph& lifted) {
  const IndependenceOracle oracle = union_oracle(lifted);
  const Subset x = greedy(oracle, canonical_ordering(lifted.weights()));
  auto n = matching_covering(lifted.graph(), x);
  if (!n) throw LemmaViolation("greedy output is not matchable in G^k");
  return {x, *std::move(n)};
}

inline LiftedOptimum optimal_base_lifted(const BipartiteGraph& graph,
                                         const WeightMap& weights,
                                         std::size_t copies) {
  return optimal_base_lifted(build_lifted(graph, weights, copies));
}

}  // namespace robust
