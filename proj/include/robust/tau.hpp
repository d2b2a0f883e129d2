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

// tau(M_G, omega, k): the least l such that every optimal base of the
// l-fold union is k-robust. Computed exactly on small instances, and the
// bound tau <= k replayed end to end.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "robust/bipartite.hpp"
#include "robust/error.hpp"
#include "robust/matroid.hpp"
#include "robust/robust.hpp"
#include "robust/transversal.hpp"

namespace robust {

inline constexpr std::size_t kMaxTauGround = 10;

/// The earlier bound k + rk - 1, floored at 1.
inline std::size_t hs22_bound(std::size_t k, std::size_t rank) {
  return std::max<std::size_t>(k + rank, 2) - 1;
}

/// How M^l for transversal M_G is decided.
enum class UnionRoute { kLifted, kBruteForce };

struct LevelDetail {
  std::size_t level = 0;
  std::size_t optimal_bases = 0;
  std::size_t robust_bases = 0;

  bool all_robust() const { return optimal_bases == robust_bases; }
  friend bool operator==(const LevelDetail&, const LevelDetail&) = default;
};

struct TauResult {
  /// Empty when no l <= l_max works.
  std::optional<std::size_t> tau;
  std::vector<LevelDetail> levels;
};

inline IndependenceOracle union_of_transversal(const BipartiteGraph& graph,
                                               const WeightMap& weights,
                                               std::size_t copies,
                                               UnionRoute route) {
  if (route == UnionRoute::kLifted) {
    return tabulate(union_oracle(build_lifted(graph, weights, copies)));
  }
  return tabulate(
      union_oracle_bruteforce(tabulate(transversal_oracle(graph)), copies));
}

/// Every l = 1..l_max is examined on its own; no monotonicity in l is
/// assumed. Stops at the first l whose optimal bases are all k-robust.
inline TauResult tau_exact(const BipartiteGraph& graph,
                           const WeightMap& weights, std::size_t k,
                           std::size_t max_level,
                           UnionRoute route = UnionRoute::kLifted) {
  if (k == 0 || max_level == 0) {
    throw InvalidArgument("k and l_max must be at least 1");
  }
  weights.require_size(graph.left_count());
  enforce_guard(graph.left_count(), kMaxTauGround, "|U| for tau");
  const IndependenceOracle base_oracle = tabulate(transversal_oracle(graph));

  TauResult result;
  for (std::size_t level = 1; level <= max_level; ++level) {
    const IndependenceOracle oracle =
        union_of_transversal(graph, weights, level, route);
    LevelDetail detail{level, 0, 0};
    for (Subset x : optimal_bases(oracle, weights)) {
      ++detail.optimal_bases;
      if (robust_bruteforce(base_oracle, weights, k, x)) ++detail.robust_bases;
    }
    result.levels.push_back(detail);
    if (detail.all_robust()) {
      result.tau = level;
      break;
    }
  }
  return result;
}

struct TauReport {
  std::string instance_id;
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::size_t k = 0;
  std::size_t rank = 0;
  std::optional<std::size_t> tau;
  std::size_t theorem_bound = 0;
  std::size_t hs22 = 0;
  std::vector<LevelDetail> levels;
  std::size_t optimal_bases = 0;
  std::size_t bases = 0;
  std::size_t witnesses_checked = 0;
  std::size_t exchanges_checked = 0;
  std::vector<std::string> violations;
  double elapsed_ms = 0.0;

  bool passed() const { return violations.empty(); }
};

/// For every optimal base X of the k-fold union and every base B of M_G:
/// builds the witness, checks (R1)-(R3), replays every exchange, and
/// cross-checks X with the brute-force robustness oracle. Also computes tau
/// with l_max = k. Every discrepancy is recorded as a violation.
inline TauReport verify_theorem(const BipartiteGraph& graph,
                                const WeightMap& weights, std::size_t k,
                                std::string instance_id = "") {
  const auto started = std::chrono::steady_clock::now();
  if (k == 0) throw InvalidArgument("k must be at least 1");
  weights.require_size(graph.left_count());
  enforce_guard(graph.left_count(), kMaxTauGround, "|U| for verification");

  TauReport report;
  report.instance_id = std::move(instance_id);
  report.left_count = graph.left_count();
  report.right_count = graph.right_count();
  report.k = k;
  const IndependenceOracle base_oracle = tabulate(transversal_oracle(graph));
  const IndependenceOracle lifted_oracle =
      union_of_transversal(graph, weights, k, UnionRoute::kLifted);
  report.rank = rank(base_oracle);
  report.theorem_bound = k;
  report.hs22 = hs22_bound(k, report.rank);

  const std::vector<Subset> bases = enumerate_bases(base_oracle);
  const std::vector<Subset> optimal = optimal_bases(lifted_oracle, weights);
  report.bases = bases.size();
  report.optimal_bases = optimal.size();

  for (Subset x : optimal) {
    if (!robust_bruteforce(base_oracle, weights, k, x)) {
      report.violations.push_back("brute force finds X = " + to_string(x) +
                                  " not k-robust");
    }
    for (Subset b : bases) {
      const std::string where =
          " (X = " + to_string(x) + ", B = " + to_string(b) + ")";
      try {
        const WitnessConstruction c = construct_witness(graph, weights, k, x, b);
        ++report.witnesses_checked;
        if (!check_witness(base_oracle, weights, k, x, b, c.witness)) {
          report.violations.push_back("witness fails (R1)-(R3)" + where);
        }
        report.exchanges_checked += verify_all_exchanges(c);
      } catch (const LemmaViolation& e) {
        report.violations.push_back(std::string("lemma: ") + e.what() + where);
      } catch (const Error& e) {
        report.violations.push_back(std::string("error: ") + e.what() + where);
      }
    }
  }

  const TauResult tau = tau_exact(graph, weights, k, k);
  report.tau = tau.tau;
  report.levels = tau.levels;
  if (!tau.tau) {
    report.violations.push_back(
        "falsification candidate: some optimal base of M^k is not k-robust");
  } else if (*tau.tau > report.hs22) {
    report.violations.push_back("tau exceeds k + rank - 1");
  }

  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  return report;
}

}  // namespace robust
