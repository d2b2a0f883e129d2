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

// Finite simple bipartite graphs G = (U, V; E), matchings, and alternating
// path machinery. Left vertices are dense indices into U, right vertices
// dense indices into V. An edge is always stored as (left, right).

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "robust/error.hpp"
#include "robust/subset.hpp"

namespace robust {

using Weight = std::uint64_t;

struct Edge {
  std::size_t left = 0;
  std::size_t right = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "u" + std::to_string(e.left + 1) + "-v" + std::to_string(e.right + 1);
}

class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Edges are sorted on construction. Duplicates and out-of-range
  /// endpoints are rejected. At most 32 left vertices (subset encoding).
  BipartiteGraph(std::size_t left_count, std::size_t right_count,
                 std::vector<Edge> edges)
      : left_count_(left_count),
        right_count_(right_count),
        edges_(std::move(edges)) {
    if (left_count_ > kMaxGroundSize) {
      throw InvalidArgument("at most 32 left vertices are supported");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.left >= left_count_ || e.right >= right_count_) {
        throw InvalidArgument("edge " + to_string(e) + " is out of range");
      }
      if (i > 0 && edges_[i - 1] == e) {
        throw InvalidArgument("duplicate edge " + to_string(e));
      }
    }
    adjacency_.assign(left_count_, {});
    for (const Edge& e : edges_) adjacency_[e.left].push_back(e.right);
  }

  std::size_t left_count() const { return left_count_; }
  std::size_t right_count() const { return right_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Right neighbours of `u` in ascending order.
  const std::vector<std::size_t>& neighbors(std::size_t u) const {
    return adjacency_.at(u);
  }

  Subset left_vertices() const { return Subset::full(left_count_); }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.left_count_ == b.left_count_ &&
           a.right_count_ == b.right_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t left_count_ = 0;
  std::size_t right_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Adds two weights; aborts on overflow.
inline Weight checked_add(Weight a, Weight b) {
  if (a > std::numeric_limits<Weight>::max() - b) {
    throw std::overflow_error("weight sum overflows 64 bits");
  }
  return a + b;
}

/// omega: U -> Z_+, indexed by left vertex.
class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<Weight> weights)
      : weights_(std::move(weights)) {}

  /// All-zero weights on `n` elements.
  static WeightMap zeros(std::size_t n) {
    return WeightMap(std::vector<Weight>(n, 0));
  }

  std::size_t size() const { return weights_.size(); }
  Weight operator[](std::size_t u) const { return weights_.at(u); }
  const std::vector<Weight>& values() const { return weights_; }

  /// omega(Y) = sum of omega(y) over y in Y.
  Weight total(Subset s) const {
    Weight sum = 0;
    for (std::size_t e : s.elements()) sum = checked_add(sum, weights_.at(e));
    return sum;
  }

  void require_size(std::size_t n) const {
    if (weights_.size() != n) {
      throw InvalidArgument("weight map has " +
                            std::to_string(weights_.size()) +
                            " entries, expected " + std::to_string(n));
    }
  }

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<Weight> weights_;
};

/// Vertices touched by an edge set, split by side, each ascending.
struct VertexSet {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// The boundary of an arbitrary edge subset (not necessarily a matching).
inline VertexSet boundary(std::span<const Edge> edges) {
  VertexSet out;
  for (const Edge& e : edges) {
    out.left.push_back(e.left);
    out.right.push_back(e.right);
  }
  for (auto* side : {&out.left, &out.right}) {
    std::sort(side->begin(), side->end());
    side->erase(std::unique(side->begin(), side->end()), side->end());
  }
  return out;
}

/// True iff no two distinct edges of `edges` share an endpoint. Every edge
/// must belong to `graph`.
inline bool is_matching(const BipartiteGraph& graph,
                        std::span<const Edge> edges) {
  std::vector<bool> left_used(graph.left_count(), false);
  std::vector<bool> right_used(graph.right_count(), false);
  std::vector<Edge> seen(edges.begin(), edges.end());
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < seen.size(); ++i) {
    const Edge& e = seen[i];
    if (!graph.has_edge(e)) {
      throw InvalidArgument("edge " + to_string(e) + " is not in the graph");
    }
    if (i > 0 && seen[i - 1] == e) continue;  // a set: repeated entries
    if (left_used[e.left] || right_used[e.right]) return false;
    left_used[e.left] = true;
    right_used[e.right] = true;
  }
  return true;
}

/// A matching of a specific host graph. Edges are kept sorted.
class Matching {
 public:
  Matching() = default;

  static Matching make(const BipartiteGraph& graph, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (!is_matching(graph, edges)) {
      throw InvalidArgument("edge set is not a matching");
    }
    Matching m;
    m.edges_ = std::move(edges);
    return m;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool contains(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  /// Right partner of left vertex `u`, if matched.
  std::optional<std::size_t> partner_of_left(std::size_t u) const {
    for (const Edge& e : edges_) {
      if (e.left == u) return e.right;
    }
    return std::nullopt;
  }

  /// Left partner of right vertex `v`, if matched.
  std::optional<std::size_t> partner_of_right(std::size_t v) const {
    for (const Edge& e : edges_) {
      if (e.right == v) return e.left;
    }
    return std::nullopt;
  }

  /// boundary(N) intersected with U.
  Subset left_boundary() const {
    Subset s;
    for (const Edge& e : edges_) s.insert(e.left);
    return s;
  }

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Edge> edges_;
};

/// The lifted weight of a matching: every edge carries its left endpoint's
/// weight.
inline Weight matching_weight(const Matching& n, const WeightMap& weights) {
  Weight sum = 0;
  for (const Edge& e : n.edges()) sum = checked_add(sum, weights[e.left]);
  return sum;
}

enum class PathKind { kAlternating, kAugmenting };

/// A path x1, y1, x2, y2, ... with respect to a matching N. Sequences of
/// odd length end at a left vertex (alternating kind); sequences of even
/// length end at an exposed right vertex (augmenting kind). Instances only
/// come out of `make`, which checks every condition against N.
class AlternatingPath {
 public:
  static AlternatingPath make(const BipartiteGraph& graph, const Matching& n,
                              std::vector<std::size_t> sequence) {
    if (sequence.empty()) throw InvalidArgument("empty path");
    std::vector<bool> left_seen(graph.left_count(), false);
    std::vector<bool> right_seen(graph.right_count(), false);
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const std::size_t x = sequence[i];
      const bool left_side = i % 2 == 0;
      const std::size_t bound =
          left_side ? graph.left_count() : graph.right_count();
      if (x >= bound) {
        throw InvalidArgument("path vertex at position " + std::to_string(i) +
                              " is out of range");
      }
      auto& seen = left_side ? left_seen : right_seen;
      if (seen[x]) throw InvalidArgument("path repeats a vertex");
      seen[x] = true;
    }
    if (n.partner_of_left(sequence.front()).has_value()) {
      throw InvalidArgument("path start u" +
                            std::to_string(sequence.front() + 1) +
                            " is covered by the matching");
    }
    for (std::size_t i = 1; i < sequence.size(); i += 2) {
      const Edge forward{sequence[i - 1], sequence[i]};
      if (!graph.has_edge(forward) || n.contains(forward)) {
        throw InvalidArgument("edge " + to_string(forward) +
                              " is not a non-matching edge");
      }
      if (i + 1 < sequence.size()) {
        const Edge back{sequence[i + 1], sequence[i]};
        if (!n.contains(back)) {
          throw InvalidArgument("edge " + to_string(back) +
                                " is not a matching edge");
        }
      }
    }
    PathKind kind = sequence.size() % 2 == 1 ? PathKind::kAlternating
                                             : PathKind::kAugmenting;
    if (kind == PathKind::kAugmenting &&
        n.partner_of_right(sequence.back()).has_value()) {
      throw InvalidArgument("augmenting path ends at a covered right vertex");
    }
    return AlternatingPath(std::move(sequence), kind);
  }

  PathKind kind() const { return kind_; }
  const std::vector<std::size_t>& sequence() const { return sequence_; }
  std::size_t start() const { return sequence_.front(); }

  /// Last left vertex x_{l+1} (alternating) or x_l (augmenting).
  std::size_t last_left() const {
    return sequence_[(sequence_.size() - 1) & ~std::size_t{1}];
  }

  /// Edges {x_i, y_i} not in N.
  std::vector<Edge> forward_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < sequence_.size(); i += 2) {
      out.push_back({sequence_[i - 1], sequence_[i]});
    }
    return out;
  }

  /// Edges {x_{i+1}, y_i} in N.
  std::vector<Edge> backward_edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 1; i + 1 < sequence_.size(); i += 2) {
      out.push_back({sequence_[i + 1], sequence_[i]});
    }
    return out;
  }

 private:
  AlternatingPath(std::vector<std::size_t> sequence, PathKind kind)
      : sequence_(std::move(sequence)), kind_(kind) {}

  std::vector<std::size_t> sequence_;
  PathKind kind_;
};

/// N xor P: drops P's matching edges and adds its non-matching edges. The
/// path is re-validated against `n`.
inline Matching apply_path(const BipartiteGraph& graph, const Matching& n,
                           const AlternatingPath& path) {
  const AlternatingPath checked =
      AlternatingPath::make(graph, n, path.sequence());
  std::vector<Edge> removed = checked.backward_edges();
  std::sort(removed.begin(), removed.end());
  std::vector<Edge> out;
  for (const Edge& e : n.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) {
      out.push_back(e);
    }
  }
  for (const Edge& e : checked.forward_edges()) out.push_back(e);
  return Matching::make(graph, std::move(out));
}

/// omega(x_1) - omega(x_{l+1}) for an alternating-kind path.
inline std::int64_t path_gain(const AlternatingPath& path,
                              const WeightMap& weights) {
  if (path.kind() != PathKind::kAlternating) {
    throw InvalidArgument("path gain is defined for alternating paths only");
  }
  const Weight first = weights[path.start()];
  const Weight last = weights[path.last_left()];
  constexpr auto kMax =
      static_cast<Weight>(std::numeric_limits<std::int64_t>::max());
  if (first > kMax || last > kMax) {
    throw std::overflow_error("weight does not fit a signed 64-bit gain");
  }
  return static_cast<std::int64_t>(first) - static_cast<std::int64_t>(last);
}

/// Result of an alternating search from an exposed left vertex.
struct Reachability {
  /// One alternating path per reachable covered left vertex.
  std::map<std::size_t, AlternatingPath> paths;
  /// First augmenting path found, if any.
  std::optional<AlternatingPath> augmenting;

  bool reaches(std::size_t w) const { return paths.count(w) != 0; }
};

/// Breadth-first alternating search from `start`, scanning neighbours in
/// ascending order. `start` must be exposed by `n`.
inline Reachability alternating_reachable(const BipartiteGraph& graph,
                                          const Matching& n,
                                          std::size_t start) {
  if (start >= graph.left_count()) {
    throw InvalidArgument("start vertex out of range");
  }
  if (n.partner_of_left(start).has_value()) {
    throw InvalidArgument("start vertex u" + std::to_string(start + 1) +
                          " is covered by the matching");
  }
  std::vector<std::optional<std::size_t>> right_mate(graph.right_count());
  for (const Edge& e : n.edges()) right_mate[e.right] = e.left;

  // parent[x] = (previous left vertex, right vertex used to reach x)
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(
      graph.left_count());
  std::vector<bool> left_seen(graph.left_count(), false);
  std::vector<bool> right_seen(graph.right_count(), false);
  left_seen[start] = true;

  auto trace = [&](std::size_t x) {
    std::vector<std::size_t> rev{x};
    while (parent[x]) {
      rev.push_back(parent[x]->second);
      rev.push_back(parent[x]->first);
      x = parent[x]->first;
    }
    return std::vector<std::size_t>(rev.rbegin(), rev.rend());
  };

  Reachability out;
  std::deque<std::size_t> queue{start};
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : graph.neighbors(x)) {
      if (right_seen[y] || n.contains({x, y})) continue;
      right_seen[y] = true;
      if (!right_mate[y]) {
        if (!out.augmenting) {
          std::vector<std::size_t> seq = trace(x);
          seq.push_back(y);
          out.augmenting = AlternatingPath::make(graph, n, std::move(seq));
        }
        continue;
      }
      const std::size_t mate = *right_mate[y];
      if (left_seen[mate]) continue;
      left_seen[mate] = true;
      parent[mate] = std::make_pair(x, y);
      out.paths.emplace(mate, AlternatingPath::make(graph, n, trace(mate)));
      queue.push_back(mate);
    }
  }
  return out;
}

/// A matching N with boundary(N) intersected with U equal to `targets`, or
/// nullopt when `targets` is not matchable. Augmenting paths are grown from
/// each target in ascending order, scanning neighbours ascending.
inline std::optional<Matching> matching_covering(const BipartiteGraph& graph,
                                                 Subset targets) {
  if (!targets.is_subset_of(graph.left_vertices())) {
    throw InvalidArgument("target set contains a vertex outside U");
  }
  std::vector<std::optional<std::size_t>> right_mate(graph.right_count());
  std::vector<bool> visited;

  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t y : graph.neighbors(u)) {
      if (visited[y]) continue;
      visited[y] = true;
      if (!right_mate[y] || self(self, *right_mate[y])) {
        right_mate[y] = u;
        return true;
      }
    }
    return false;
  };

  for (std::size_t u : targets.elements()) {
    visited.assign(graph.right_count(), false);
    if (!augment(augment, u)) return std::nullopt;
  }
  std::vector<Edge> edges;
  for (std::size_t y = 0; y < right_mate.size(); ++y) {
    if (right_mate[y]) edges.push_back({*right_mate[y], y});
  }
  return Matching::make(graph, std::move(edges));
}

/// Size guard for exhaustive matching enumeration.
inline constexpr std::size_t kMaxEnumeratedEdges = 24;

/// Every matching of `graph` (including the empty one), each once.
inline std::vector<Matching> enumerate_matchings(const BipartiteGraph& graph) {
  enforce_guard(graph.edges().size(), kMaxEnumeratedEdges,
                "edge count for matching enumeration");
  const auto& edges = graph.edges();
  std::vector<Matching> out;
  std::vector<Edge> current;
  std::vector<bool> left_used(graph.left_count(), false);
  std::vector<bool> right_used(graph.right_count(), false);

  auto recurse = [&](auto&& self, std::size_t index) -> void {
    if (index == edges.size()) {
      out.push_back(Matching::make(graph, current));
      return;
    }
    self(self, index + 1);
    const Edge& e = edges[index];
    if (left_used[e.left] || right_used[e.right]) return;
    left_used[e.left] = right_used[e.right] = true;
    current.push_back(e);
    self(self, index + 1);
    current.pop_back();
    left_used[e.left] = right_used[e.right] = false;
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace robust
