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

// Test-only reference oracles. None of these call into the augmenting-path
// or backtracking code they are used to check.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "robust/bipartite.hpp"
#include "robust/subset.hpp"

namespace robust::testing {

/// S is matchable iff its elements can be given pairwise distinct
/// neighbours; plain assignment search over neighbour choices.
inline bool matchable_by_assignment(const BipartiteGraph& g, Subset s) {
  const auto items = s.elements();
  std::vector<bool> used(g.right_count(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == items.size()) return true;
    for (const Edge& e : g.edges()) {
      if (e.left != items[i] || used[e.right]) continue;
      used[e.right] = true;
      if (go(i + 1)) return true;
      used[e.right] = false;
    }
    return false;
  };
  return go(0);
}

/// Union independence by trying every colouring of S with `copies` colours.
inline bool union_by_colouring(const std::function<bool(Subset)>& independent,
                               Subset s, std::size_t copies) {
  const auto items = s.elements();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < items.size(); ++i) total *= copies;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Subset> classes(copies);
    std::uint64_t c = code;
    for (std::size_t item : items) {
      classes[c % copies].insert(item);
      c /= copies;
    }
    bool ok = true;
    for (Subset cls : classes) ok = ok && independent(cls);
    if (ok) return true;
  }
  return false;
}

/// All subsets of size rk attaining the largest independent size, by scan.
inline std::vector<Subset> bases_by_scan(
    std::size_t n, const std::function<bool(Subset)>& independent) {
  std::size_t best = 0;
  for_each_subset(n, [&](Subset s) {
    if (independent(s)) best = std::max(best, s.size());
  });
  std::vector<Subset> out;
  for_each_subset(n, [&](Subset s) {
    if (s.size() == best && independent(s)) out.push_back(s);
  });
  return out;
}

/// Random simple bipartite graph.
inline BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t left,
                                   std::size_t right, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < left; ++u) {
    for (std::size_t v = 0; v < right; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return BipartiteGraph(left, right, std::move(edges));
}

inline WeightMap random_weights(std::mt19937_64& rng, std::size_t n,
                                Weight max_weight) {
  std::vector<Weight> w(n);
  for (auto& x : w) x = rng() % (max_weight + 1);
  return WeightMap(std::move(w));
}

/// U = {u1, u2, u3}, V = {v1}, complete.
inline BipartiteGraph star_graph() {
  return BipartiteGraph(3, 1, {{0, 0}, {1, 0}, {2, 0}});
}

/// U = {u1, u2, u3}, V = {v1, v2}, E = {u1v1, u2v1, u2v2, u3v2}.
inline BipartiteGraph path_graph() {
  return BipartiteGraph(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
}

}  // namespace robust::testing
