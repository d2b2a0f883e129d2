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

// Matroids given by an independence predicate over bitmask subsets, and
// everything derived from that predicate: axioms, rank, bases, circuits,
// brute-force union, and the weighted greedy over weight-sorted orderings.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "robust/bipartite.hpp"
#include "robust/error.hpp"
#include "robust/subset.hpp"

namespace robust {

/// A set system (U, I) presented by its membership predicate.
class IndependenceOracle {
 public:
  using Predicate = std::function<bool(Subset)>;

  IndependenceOracle(std::size_t ground_size, Predicate predicate)
      : ground_size_(ground_size), predicate_(std::move(predicate)) {
    if (ground_size_ > kMaxGroundSize) {
      throw InvalidArgument("ground set larger than 32 elements");
    }
  }

  std::size_t ground_size() const { return ground_size_; }
  Subset ground() const { return Subset::full(ground_size_); }

  bool is_independent(Subset s) const {
    if (!s.is_subset_of(ground())) {
      throw InvalidArgument("subset leaves the ground set");
    }
    return predicate_(s);
  }

 private:
  std::size_t ground_size_;
  Predicate predicate_;
};

inline constexpr std::size_t kMaxExhaustiveGround = 16;
inline constexpr std::size_t kMaxUnionGround = 12;
inline constexpr std::size_t kMaxOrderingGround = 8;

/// Evaluates the oracle on every subset once and answers from the table.
/// Requires ground_size <= 16.
inline IndependenceOracle tabulate(const IndependenceOracle& oracle) {
  enforce_guard(oracle.ground_size(), kMaxExhaustiveGround,
                "ground size for tabulation");
  auto table = std::make_shared<std::vector<bool>>(
      std::size_t{1} << oracle.ground_size());
  for_each_subset(oracle.ground_size(), [&](Subset s) {
    (*table)[s.bits()] = oracle.is_independent(s);
  });
  return IndependenceOracle(oracle.ground_size(), [table](Subset s) {
    return static_cast<bool>((*table)[s.bits()]);
  });
}

/// Exhaustive check of: the empty set is independent, (I1), and (I2).
inline bool check_axioms(const IndependenceOracle& oracle) {
  const IndependenceOracle table = tabulate(oracle);
  const std::size_t n = oracle.ground_size();
  if (!table.is_independent(Subset{})) return false;

  std::vector<Subset> independent;
  bool closed = true;
  for_each_subset(n, [&](Subset s) {
    if (!table.is_independent(s)) return;
    independent.push_back(s);
    for (std::size_t e : s.elements()) {
      if (!table.is_independent(s.without(e))) closed = false;
    }
  });
  if (!closed) return false;

  for (Subset small : independent) {
    for (Subset large : independent) {
      if (small.size() >= large.size()) continue;
      bool augmentable = false;
      for (std::size_t e : (large - small).elements()) {
        if (table.is_independent(small.with(e))) {
          augmentable = true;
          break;
        }
      }
      if (!augmentable) return false;
    }
  }
  return true;
}

/// rk(M) by a greedy scan; exact because of (I2).
inline std::size_t rank(const IndependenceOracle& oracle) {
  Subset current;
  for (std::size_t e = 0; e < oracle.ground_size(); ++e) {
    if (oracle.is_independent(current.with(e))) current.insert(e);
  }
  return current.size();
}

/// Independent sets of size rk(M), in ascending bitmask order.
inline std::vector<Subset> enumerate_bases(const IndependenceOracle& oracle) {
  enforce_guard(oracle.ground_size(), kMaxExhaustiveGround,
                "ground size for base enumeration");
  const std::size_t r = rank(oracle);
  std::vector<Subset> bases;
  for_each_subset(oracle.ground_size(), [&](Subset s) {
    if (s.size() == r && oracle.is_independent(s)) bases.push_back(s);
  });
  return bases;
}

inline bool is_base(const IndependenceOracle& oracle, Subset s) {
  return oracle.is_independent(s) && s.size() == rank(oracle);
}

/// M^l decided by backtracking: elements of I are assigned to l colour
/// classes in ascending order; every partial class must stay independent.
inline IndependenceOracle union_oracle_bruteforce(
    const IndependenceOracle& oracle, std::size_t copies) {
  if (copies == 0) throw InvalidArgument("union needs at least one copy");
  enforce_guard(oracle.ground_size(), kMaxUnionGround,
                "ground size for brute-force union");
  return IndependenceOracle(oracle.ground_size(), [oracle, copies](Subset s) {
    const std::vector<std::size_t> items = s.elements();
    std::vector<Subset> classes(copies);
    auto assign = [&](auto&& self, std::size_t index) -> bool {
      if (index == items.size()) return true;
      for (std::size_t c = 0; c < copies; ++c) {
        const Subset grown = classes[c].with(items[index]);
        if (oracle.is_independent(grown)) {
          const Subset saved = classes[c];
          classes[c] = grown;
          if (self(self, index + 1)) return true;
          classes[c] = saved;
        }
        // Empty classes are interchangeable.
        if (classes[c].empty()) break;
      }
      return false;
    };
    return assign(assign, 0);
  });
}

/// A bijection xi: [n] -> U listing elements by non-increasing weight.
class OrderingXi {
 public:
  static OrderingXi make(std::vector<std::size_t> order,
                         const WeightMap& weights) {
    const std::size_t n = weights.size();
    if (order.size() != n) {
      throw InvalidArgument("ordering length differs from ground size");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t e : order) {
      if (e >= n || seen[e]) throw InvalidArgument("ordering is not a bijection");
      seen[e] = true;
    }
    for (std::size_t i = 1; i < n; ++i) {
      if (weights[order[i - 1]] < weights[order[i]]) {
        throw InvalidArgument("ordering is not weight non-increasing at " +
                              std::to_string(i));
      }
    }
    return OrderingXi(std::move(order));
  }

  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

  friend bool operator==(const OrderingXi&, const OrderingXi&) = default;

 private:
  explicit OrderingXi(std::vector<std::size_t> order)
      : order_(std::move(order)) {}
  std::vector<std::size_t> order_;
};

/// Descending weight, ties by ascending element index.
inline OrderingXi canonical_ordering(const WeightMap& weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return weights[a] > weights[b];
                   });
  return OrderingXi::make(std::move(order), weights);
}

/// Every ordering compatible with the weights: the product of all
/// permutations inside each weight class.
inline std::vector<OrderingXi> enumerate_orderings(const WeightMap& weights) {
  enforce_guard(weights.size(), kMaxOrderingGround,
                "ground size for ordering enumeration");
  std::vector<std::size_t> base = canonical_ordering(weights).order();
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < base.size();) {
    std::size_t j = i;
    while (j < base.size() && weights[base[j]] == weights[base[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::vector<OrderingXi> out;
  std::vector<std::size_t> current = base;
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      out.push_back(OrderingXi::make(current, weights));
      return;
    }
    const auto [lo, hi] = blocks[block];
    std::sort(current.begin() + lo, current.begin() + hi);
    do {
      self(self, block + 1);
    } while (std::next_permutation(current.begin() + lo, current.begin() + hi));
  };
  recurse(recurse, 0);
  return out;
}

/// The weighted greedy: scan xi(1), ..., xi(n) and keep xi(i) whenever the
/// kept set plus xi(i) stays independent in `oracle`.
inline Subset greedy(const IndependenceOracle& oracle, const OrderingXi& xi) {
  if (xi.size() != oracle.ground_size()) {
    throw InvalidArgument("ordering does not cover the ground set");
  }
  Subset kept;
  for (std::size_t e : xi.order()) {
    if (oracle.is_independent(kept.with(e))) kept.insert(e);
  }
  return kept;
}

/// Bases of maximum weight, ascending bitmask order.
inline std::vector<Subset> optimal_bases(const IndependenceOracle& oracle,
                                         const WeightMap& weights) {
  weights.require_size(oracle.ground_size());
  const std::vector<Subset> bases = enumerate_bases(oracle);
  Weight best = 0;
  for (Subset b : bases) best = std::max(best, weights.total(b));
  std::vector<Subset> out;
  for (Subset b : bases) {
    if (weights.total(b) == best) out.push_back(b);
  }
  return out;
}

/// A minimal dependent subset of the dependent set `s`: one ascending pass
/// dropping every element whose removal keeps the set dependent.
inline Subset find_circuit(const IndependenceOracle& oracle, Subset s) {
  if (oracle.is_independent(s)) {
    throw InvalidArgument("find_circuit needs a dependent set");
  }
  Subset current = s;
  for (std::size_t e : s.elements()) {
    if (!oracle.is_independent(current.without(e))) current.erase(e);
  }
  return current;
}

/// The ordering xi_Z that lists, inside each weight class, the members of Z
/// first (ascending), then the rest (ascending).
inline OrderingXi ordering_for_base(Subset z, const WeightMap& weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (weights[a] != weights[b]) return weights[a] > weights[b];
                     return z.contains(a) && !z.contains(b);
                   });
  return OrderingXi::make(std::move(order), weights);
}

/// Checks that {Greedy(xi) : xi in F} equals the optimal bases of
/// `union_oracle` (already the l-fold union). Also replays the explicit
/// ordering xi_Z for every optimal base Z.
inline bool greedy_outputs_match_optimal_bases(
    const IndependenceOracle& union_oracle, const WeightMap& weights) {
  weights.require_size(union_oracle.ground_size());
  enforce_guard(union_oracle.ground_size(), kMaxOrderingGround,
                "ground size for greedy equivalence");
  const IndependenceOracle table = tabulate(union_oracle);
  const std::vector<Subset> optimal = optimal_bases(table, weights);
  std::set<Subset> from_greedy;
  for (const OrderingXi& xi : enumerate_orderings(weights)) {
    from_greedy.insert(greedy(table, xi));
  }
  for (Subset z : optimal) {
    if (greedy(table, ordering_for_base(z, weights)) != z) return false;
  }
  return from_greedy == std::set<Subset>(optimal.begin(), optimal.end());
}

/// Same check with M^l built by brute-force partition search.
inline bool greedy_equivalence_check(const IndependenceOracle& oracle,
                                     const WeightMap& weights,
                                     std::size_t copies) {
  enforce_guard(oracle.ground_size(), kMaxOrderingGround,
                "ground size for greedy equivalence");
  return greedy_outputs_match_optimal_bases(
      union_oracle_bruteforce(oracle, copies), weights);
}

}  // namespace robust
