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

// k-robust subsets. A subset X is k-robust when every base B admits a
// witness: pairwise disjoint groups X_1..X_m of X \ B (m = |B \ X|) and a
// bijection phi: B \ X -> [m] with
//   (R1) |X_i| = k,
//   (R2) omega(u) <= omega(v) for v in X_phi(u),
//   (R3) (B n X) plus any one pick from each group is independent.
//
// Two independent routes produce witnesses. `construct_witness` follows the
// exchange-digraph construction for transversal matroids and asserts every
// intermediate lemma; `find_witness_bruteforce` searches all group
// assignments against an arbitrary independence oracle.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "robust/bipartite.hpp"
#include "robust/error.hpp"
#include "robust/matroid.hpp"
#include "robust/subset.hpp"
#include "robust/transversal.hpp"

namespace robust {

struct RobustWitness {
  /// X_1..X_m, stored 0-based.
  std::vector<Subset> groups;
  /// phi: element of B \ X -> 0-based group index.
  std::map<std::size_t, std::size_t> phi;

  friend bool operator==(const RobustWitness&, const RobustWitness&) = default;
};

struct WitnessCheck {
  bool r1 = false;
  bool r2 = false;
  bool r3 = false;

  explicit operator bool() const { return r1 && r2 && r3; }
};

/// Guard on the number of tuples in X_1 x ... x X_m.
inline constexpr std::uint64_t kMaxProductSize = 1'000'000;

/// Calls `fn(const std::vector<std::size_t>&)` for every tuple of the
/// product of `groups`; stops early when `fn` returns false. Returns false
/// iff stopped early.
template <typename Fn>
bool for_each_transversal(const std::vector<Subset>& groups, Fn&& fn) {
  std::uint64_t count = 1;
  for (Subset g : groups) {
    count *= g.size();
    if (count == 0) return true;
    enforce_guard(count, kMaxProductSize, "product size for (R3)");
  }
  std::vector<std::vector<std::size_t>> members;
  for (Subset g : groups) members.push_back(g.elements());
  std::vector<std::size_t> pick(groups.size(), 0);
  std::vector<std::size_t> tuple(groups.size());
  while (true) {
    for (std::size_t i = 0; i < groups.size(); ++i) {
      tuple[i] = members[i][pick[i]];
    }
    if (!fn(tuple)) return false;
    std::size_t i = 0;
    while (i < groups.size() && ++pick[i] == members[i].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == groups.size()) return true;
  }
}

/// True iff (B n X) plus each tuple of the product is independent.
inline bool every_transversal_independent(const IndependenceOracle& oracle,
                                          Subset kept,
                                          const std::vector<Subset>& groups) {
  return for_each_transversal(groups, [&](const std::vector<std::size_t>& t) {
    return oracle.is_independent(kept | Subset::from_elements(t));
  });
}

/// Evaluates (R1), (R2), (R3) for a witness of base `b` against `x`.
/// Throws MalformedWitness for structural defects and InvalidArgument when
/// `b` is not a base.
inline WitnessCheck check_witness(const IndependenceOracle& oracle,
                                  const WeightMap& weights, std::size_t k,
                                  Subset x, Subset b,
                                  const RobustWitness& witness) {
  weights.require_size(oracle.ground_size());
  if (k == 0) throw InvalidArgument("k must be at least 1");
  if (!is_base(oracle, b)) {
    throw InvalidArgument("B = " + to_string(b) + " is not a base");
  }
  const Subset outside = b - x;
  const Subset pool = x - b;
  const std::size_t m = outside.size();

  if (witness.groups.size() != m) {
    throw MalformedWitness("expected " + std::to_string(m) + " groups, got " +
                           std::to_string(witness.groups.size()));
  }
  Subset seen;
  for (Subset g : witness.groups) {
    if (!g.is_subset_of(pool)) {
      throw MalformedWitness("group " + to_string(g) + " leaves X \\ B");
    }
    if (!(g & seen).empty()) {
      throw MalformedWitness("groups are not pairwise disjoint");
    }
    seen = seen | g;
  }
  std::vector<bool> hit(m, false);
  Subset domain;
  for (const auto& [u, i] : witness.phi) {
    if (!outside.contains(u)) {
      throw MalformedWitness("phi is defined outside B \\ X at u" +
                             std::to_string(u + 1));
    }
    if (i >= m || hit[i]) throw MalformedWitness("phi is not a bijection");
    hit[i] = true;
    domain.insert(u);
  }
  if (domain != outside) throw MalformedWitness("phi does not cover B \\ X");

  WitnessCheck out;
  out.r1 = std::all_of(witness.groups.begin(), witness.groups.end(),
                       [&](Subset g) { return g.size() == k; });
  out.r2 = true;
  for (const auto& [u, i] : witness.phi) {
    for (std::size_t v : witness.groups[i].elements()) {
      if (weights[u] > weights[v]) out.r2 = false;
    }
  }
  out.r3 = every_transversal_independent(oracle, b & x, witness.groups);
  return out;
}

// ---------------------------------------------------------------------------
// Brute-force route.

inline constexpr std::size_t kMaxBruteForceGround = 10;

/// Searches for a witness of `b` against `x` using only the oracle: groups
/// are assigned to elements of B \ X in ascending order, (R2) filters the
/// candidates and partial products are pruned by (I1).
inline std::optional<RobustWitness> find_witness_bruteforce(
    const IndependenceOracle& oracle, const WeightMap& weights, std::size_t k,
    Subset x, Subset b) {
  weights.require_size(oracle.ground_size());
  if (k == 0) throw InvalidArgument("k must be at least 1");
  enforce_guard(oracle.ground_size(), kMaxBruteForceGround,
                "ground size for brute-force robustness");
  const std::vector<std::size_t> outside = (b - x).elements();
  const Subset pool = x - b;
  const Subset kept = b & x;
  if (k * outside.size() > pool.size()) return std::nullopt;

  std::vector<Subset> chosen;
  auto search = [&](auto&& self, Subset used) -> bool {
    const std::size_t index = chosen.size();
    if (index == outside.size()) return true;
    const std::size_t u = outside[index];
    if ((pool - used).size() < k * (outside.size() - index)) return false;
    Subset candidates;
    for (std::size_t v : (pool - used).elements()) {
      if (weights[v] >= weights[u]) candidates.insert(v);
    }
    const std::uint32_t mask = candidates.bits();
    for (std::uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      const Subset group(sub);
      if (group.size() != k) continue;
      chosen.push_back(group);
      if (every_transversal_independent(oracle, kept, chosen) &&
          self(self, used | group)) {
        return true;
      }
      chosen.pop_back();
    }
    return false;
  };
  if (!search(search, Subset{})) return std::nullopt;

  RobustWitness witness;
  witness.groups = chosen;
  for (std::size_t i = 0; i < outside.size(); ++i) witness.phi[outside[i]] = i;
  return witness;
}

/// X is k-robust iff every base has a witness. Independent of the
/// exchange-digraph construction.
inline bool robust_bruteforce(const IndependenceOracle& oracle,
                              const WeightMap& weights, std::size_t k,
                              Subset x) {
  enforce_guard(oracle.ground_size(), kMaxBruteForceGround,
                "ground size for brute-force robustness");
  const IndependenceOracle table = tabulate(oracle);
  for (Subset b : enumerate_bases(table)) {
    if (!find_witness_bruteforce(table, weights, k, x, b)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Exchange-digraph construction for transversal matroids.

/// X_v for every right vertex v of G: left vertices matched by N to some
/// copy v(t).
struct GroupMap {
  std::vector<Subset> by_vertex;

  Subset covered() const {
    Subset s;
    for (Subset g : by_vertex) s = s | g;
    return s;
  }
};

inline GroupMap group_by_right(const LiftedGraph& lifted, const Matching& n) {
  if (!is_matching(lifted.graph(), n.edges())) {
    throw InvalidArgument("not a matching of the lifted graph");
  }
  GroupMap groups;
  groups.by_vertex.assign(lifted.base().right_count(), Subset{});
  for (const Edge& e : n.edges()) {
    groups.by_vertex[lifted.label_of(e.right).vertex].insert(e.left);
  }
  return groups;
}

/// D = (W, A) on right vertices of G.
struct ExchangeDigraph {
  /// Membership in W, indexed by right vertex of G.
  std::vector<bool> in_w;
  /// Sorted arcs (v, v').
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  /// M-partner of every element of B.
  std::map<std::size_t, std::size_t> base_partner;

  std::vector<std::size_t> vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < in_w.size(); ++v) {
      if (in_w[v]) out.push_back(v);
    }
    return out;
  }

  std::vector<std::size_t> successors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (const auto& [from, to] : arcs) {
      if (from == v) out.push_back(to);
    }
    return out;
  }

  std::size_t in_degree(std::size_t v) const {
    return static_cast<std::size_t>(
        std::count_if(arcs.begin(), arcs.end(),
                      [v](const auto& a) { return a.second == v; }));
  }

  bool is_source(std::size_t v) const { return in_w.at(v) && in_degree(v) == 0; }
  bool is_sink(std::size_t v) const {
    return in_w.at(v) && successors(v).empty();
  }
};

inline std::string right_name(std::size_t v) {
  return "v" + std::to_string(v + 1);
}

/// Builds D from the groups X_v and a matching `m` of G covering exactly
/// B. Every structural lemma about D is asserted.
inline ExchangeDigraph build_exchange_digraph(const GroupMap& groups, Subset b,
                                              const Matching& m) {
  if (m.left_boundary() != b) {
    throw InvalidArgument("matching does not cover exactly B");
  }
  ExchangeDigraph d;
  for (const Edge& e : m.edges()) d.base_partner[e.left] = e.right;
  const std::size_t right_count = groups.by_vertex.size();
  for (const Edge& e : m.edges()) {
    if (e.right >= right_count) {
      throw InvalidArgument("matching uses a right vertex outside the groups");
    }
  }
  const Subset x = groups.covered();

  d.in_w.assign(right_count, false);
  for (std::size_t v = 0; v < right_count; ++v) {
    bool member = true;
    for (std::size_t u : (groups.by_vertex[v] & b).elements()) {
      if (d.base_partner.at(u) == v) member = false;
    }
    d.in_w[v] = member;
  }
  for (std::size_t v = 0; v < right_count; ++v) {
    if (!d.in_w[v]) continue;
    for (std::size_t u : (groups.by_vertex[v] & b).elements()) {
      const std::size_t target = d.base_partner.at(u);
      if (!d.in_w[target]) {
        throw LemmaViolation("partner " + right_name(target) + " of u" +
                             std::to_string(u + 1) + " in X_" + right_name(v) +
                             " is not in W");
      }
      d.arcs.emplace_back(v, target);
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end());
  d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());

  for (std::size_t v = 0; v < right_count; ++v) {
    if (d.in_w[v] && d.in_degree(v) > 1) {
      throw LemmaViolation(right_name(v) + " has in-degree " +
                           std::to_string(d.in_degree(v)));
    }
    if (d.is_sink(v) && !(groups.by_vertex[v] & b).empty()) {
      throw LemmaViolation("sink " + right_name(v) + " has X_v n B non-empty");
    }
  }
  for (std::size_t u : (b - x).elements()) {
    const std::size_t start = d.base_partner.at(u);
    if (!d.in_w[start] || !d.is_source(start)) {
      throw LemmaViolation("partner " + right_name(start) + " of u" +
                           std::to_string(u + 1) + " is not a source of D");
    }
    // In-degree <= 1 means no cycle is reachable from a source.
    std::vector<bool> seen(right_count, false);
    std::vector<std::size_t> stack{start};
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      if (seen[v]) {
        throw LemmaViolation("cycle reachable from source " +
                             right_name(start));
      }
      seen[v] = true;
      for (std::size_t w : d.successors(v)) stack.push_back(w);
    }
  }
  return d;
}

/// P_u = (z_1, ..., z_l) from the source phi(u) to a sink of D.
struct ExchangePath {
  std::vector<std::size_t> vertices;

  std::size_t sink() const { return vertices.back(); }
  /// p_u; absent when the source is itself a sink.
  std::optional<std::size_t> predecessor() const {
    if (vertices.size() < 2) return std::nullopt;
    return vertices[vertices.size() - 2];
  }

  friend bool operator==(const ExchangePath&, const ExchangePath&) = default;
};

/// Keyed by u in B \ X, ascending.
using PathFamily = std::map<std::size_t, ExchangePath>;

/// Walks from each source phi(u), u in B \ X, taking the smallest successor
/// until a sink. Asserts termination, vertex-disjointness and distinct sinks.
inline PathFamily extract_paths(const ExchangeDigraph& d,
                                const GroupMap& groups, Subset b, Subset x) {
  PathFamily family;
  std::vector<std::optional<std::size_t>> owner(d.in_w.size());
  const std::size_t w_size = d.vertices().size();
  for (std::size_t u : (b - x).elements()) {
    ExchangePath path;
    std::size_t v = d.base_partner.at(u);
    while (true) {
      if (!d.in_w.at(v)) {
        throw LemmaViolation("path of u" + std::to_string(u + 1) +
                             " leaves W at " + right_name(v));
      }
      if (owner[v]) {
        throw LemmaViolation("paths of u" + std::to_string(*owner[v] + 1) +
                             " and u" + std::to_string(u + 1) +
                             " share " + right_name(v));
      }
      owner[v] = u;
      path.vertices.push_back(v);
      if (path.vertices.size() > w_size) {
        throw LemmaViolation("path of u" + std::to_string(u + 1) +
                             " does not terminate");
      }
      const std::vector<std::size_t> next = d.successors(v);
      if (next.empty()) break;
      v = next.front();
    }
    if (!(groups.by_vertex.at(path.sink()) & b).empty()) {
      throw LemmaViolation("sink " + right_name(path.sink()) + " meets B");
    }
    family.emplace(u, std::move(path));
  }
  return family;
}

/// The alternating path in G^k from u to `target`, where `target` lies in
/// X_{z_j} for some vertex z_j of P_u. Steps through z_i(t) using the copy
/// that N matches to the next left vertex.
inline AlternatingPath exchange_alternating_path(const LiftedGraph& lifted,
                                                 const Matching& n,
                                                 const Matching& m,
                                                 const GroupMap& groups,
                                                 std::size_t u,
                                                 const ExchangePath& path,
                                                 std::size_t target) {
  std::size_t stop = path.vertices.size();
  for (std::size_t j = 0; j < path.vertices.size(); ++j) {
    if (groups.by_vertex.at(path.vertices[j]).contains(target)) {
      stop = j;
      break;
    }
  }
  if (stop == path.vertices.size()) {
    throw InvalidArgument("u" + std::to_string(target + 1) +
                          " is not in a group along the path");
  }
  std::vector<std::size_t> sequence{u};
  for (std::size_t i = 0; i <= stop; ++i) {
    const std::size_t z = path.vertices[i];
    std::size_t next_left = target;
    if (i < stop) {
      const auto partner = m.partner_of_right(path.vertices[i + 1]);
      if (!partner) {
        throw LemmaViolation(right_name(path.vertices[i + 1]) +
                             " has no B-partner on the path");
      }
      next_left = *partner;
    }
    const auto copy = n.partner_of_left(next_left);
    if (!copy || lifted.label_of(*copy).vertex != z) {
      throw LemmaViolation("u" + std::to_string(next_left + 1) +
                           " is not matched into a copy of " + right_name(z));
    }
    sequence.push_back(*copy);
    sequence.push_back(next_left);
  }
  try {
    return AlternatingPath::make(lifted.graph(), n, std::move(sequence));
  } catch (const InvalidArgument& e) {
    throw LemmaViolation(std::string("exchange path is not alternating: ") +
                         e.what());
  }
}

/// Everything produced by the exchange-digraph construction.
struct WitnessConstruction {
  LiftedGraph lifted;
  Subset optimal_base;
  Subset base;
  Matching lifted_matching;
  Matching base_matching;
  GroupMap groups;
  ExchangeDigraph digraph;
  PathFamily paths;
  RobustWitness witness;
};

/// Builds a witness for base `b` of M_G against the optimal base `x` of
/// the k-fold union of M_G. Rejects `x` or `b` of the wrong kind; any other
/// failure is a LemmaViolation.
inline WitnessConstruction construct_witness(const BipartiteGraph& graph,
                                             const WeightMap& weights,
                                             std::size_t k, Subset x,
                                             Subset b) {
  LiftedGraph lifted = build_lifted(graph, weights, k);
  const IndependenceOracle lifted_oracle = union_oracle(lifted);
  const IndependenceOracle base_oracle = transversal_oracle(graph);
  if (!x.is_subset_of(graph.left_vertices()) ||
      !is_base(lifted_oracle, x) ||
      weights.total(x) != weights.total(optimal_base_lifted(lifted).base)) {
    throw InvalidArgument("X = " + to_string(x) +
                          " is not an optimal base of the union");
  }
  if (!b.is_subset_of(graph.left_vertices()) || !is_base(base_oracle, b)) {
    throw InvalidArgument("B = " + to_string(b) + " is not a base of M_G");
  }

  Matching n = *matching_covering(lifted.graph(), x);
  Matching m = *matching_covering(graph, b);
  GroupMap groups = group_by_right(lifted, n);
  ExchangeDigraph digraph = build_exchange_digraph(groups, b, m);
  PathFamily paths = extract_paths(digraph, groups, b, x);

  RobustWitness witness;
  for (const auto& [u, path] : paths) {
    const std::size_t sink = path.sink();
    for (std::size_t t = 1; t <= k; ++t) {
      if (!n.partner_of_right(lifted.index_of({sink, t}))) {
        throw LemmaViolation("copy " + lifted.right_name(lifted.index_of(
                                           {sink, t})) +
                             " of sink is exposed by N");
      }
    }
    const Subset group = groups.by_vertex[sink];
    if (group.size() != k) {
      throw LemmaViolation("|X_" + right_name(sink) + "| = " +
                           std::to_string(group.size()));
    }
    if (!group.is_subset_of(x - b)) {
      throw LemmaViolation("X_" + right_name(sink) + " leaves X \\ B");
    }
    for (std::size_t w : group.elements()) {
      if (weights[w] < weights[u]) {
        throw LemmaViolation("u" + std::to_string(w + 1) +
                             " in X_" + right_name(sink) + " is lighter than u" +
                             std::to_string(u + 1));
      }
    }

    const Reachability reach = alternating_reachable(lifted.graph(), n, u);
    if (reach.augmenting) {
      throw LemmaViolation("augmenting path from u" + std::to_string(u + 1));
    }
    Subset targets = group;
    if (auto p = path.predecessor()) targets = targets | groups.by_vertex[*p];
    for (std::size_t w : targets.elements()) {
      if (!reach.reaches(w)) {
        throw LemmaViolation("u" + std::to_string(w + 1) +
                             " is not alternating-reachable from u" +
                             std::to_string(u + 1));
      }
      const AlternatingPath explicit_path =
          exchange_alternating_path(lifted, n, m, groups, u, path, w);
      if (explicit_path.last_left() != w ||
          path_gain(explicit_path, weights) > 0) {
        throw LemmaViolation("exchange path to u" + std::to_string(w + 1) +
                             " has positive gain");
      }
    }

    witness.phi[u] = witness.groups.size();
    witness.groups.push_back(group);
  }

  return {std::move(lifted), x,      b,     std::move(n),
          std::move(m),      groups, std::move(digraph), std::move(paths),
          std::move(witness)};
}

/// Rebuilds M' for one pick w_u in X_{q_u} per u, by shifting B-matching
/// edges along every path, and asserts boundary(M') n U = (B n X) + picks.
inline Matching verify_exchange(const BipartiteGraph& graph, const Matching& m,
                                const GroupMap& groups,
                                const PathFamily& paths,
                                const std::map<std::size_t, std::size_t>& choice) {
  const Subset b = m.left_boundary();
  const Subset x = groups.covered();
  if (choice.size() != paths.size()) {
    throw InvalidArgument("need exactly one pick per path");
  }
  std::vector<Edge> removed;
  std::vector<Edge> added;
  Subset picks;
  for (const auto& [u, path] : paths) {
    const auto it = choice.find(u);
    if (it == choice.end()) {
      throw InvalidArgument("no pick for u" + std::to_string(u + 1));
    }
    const std::size_t w = it->second;
    if (!groups.by_vertex.at(path.sink()).contains(w)) {
      throw InvalidArgument("pick u" + std::to_string(w + 1) +
                            " is not in X_q");
    }
    picks.insert(w);
    std::size_t previous = u;
    for (std::size_t i = 0; i < path.vertices.size(); ++i) {
      const std::size_t z = path.vertices[i];
      std::size_t current = w;
      if (i + 1 < path.vertices.size()) {
        const auto partner = m.partner_of_right(path.vertices[i + 1]);
        if (!partner) {
          throw LemmaViolation(right_name(path.vertices[i + 1]) +
                               " is exposed by M");
        }
        current = *partner;
      }
      removed.push_back({previous, z});
      added.push_back({current, z});
      previous = current;
    }
  }
  std::sort(removed.begin(), removed.end());
  std::vector<Edge> edges;
  for (const Edge& e : m.edges()) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) {
      edges.push_back(e);
    }
  }
  for (const Edge& e : removed) {
    if (!m.contains(e)) {
      throw LemmaViolation("edge " + to_string(e) + " is not in M");
    }
  }
  edges.insert(edges.end(), added.begin(), added.end());
  Matching result;
  try {
    result = Matching::make(graph, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw LemmaViolation(std::string("exchanged edge set is not a matching: ") +
                         e.what());
  }
  if (result.left_boundary() != ((b & x) | picks)) {
    throw LemmaViolation("exchanged matching covers " +
                         to_string(result.left_boundary()) + ", expected " +
                         to_string((b & x) | picks));
  }
  return result;
}

/// Runs verify_exchange for every tuple of the witness product.
inline std::size_t verify_all_exchanges(const WitnessConstruction& c) {
  std::vector<std::size_t> owners;
  std::vector<Subset> sets;
  for (const auto& [u, path] : c.paths) {
    owners.push_back(u);
    sets.push_back(c.groups.by_vertex[path.sink()]);
  }
  std::size_t count = 0;
  for_each_transversal(sets, [&](const std::vector<std::size_t>& tuple) {
    std::map<std::size_t, std::size_t> choice;
    for (std::size_t i = 0; i < owners.size(); ++i) choice[owners[i]] = tuple[i];
    verify_exchange(c.lifted.base(), c.base_matching, c.groups, c.paths,
                    choice);
    ++count;
    return true;
  });
  return count;
}

}  // namespace robust
