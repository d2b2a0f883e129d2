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

#include "robust/tau.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace robust {
namespace {

using testing::random_graph;
using testing::random_weights;
using testing::star_graph;

TEST(Hs22Bound, Formula) {
  EXPECT_EQ(hs22_bound(2, 1), 2U);
  EXPECT_EQ(hs22_bound(1, 1), 1U);
  EXPECT_EQ(hs22_bound(3, 4), 6U);
  EXPECT_EQ(hs22_bound(1, 0), 1U);
  EXPECT_EQ(hs22_bound(3, 0), 2U);
}

TEST(TauExact, StarInstance) {
  const auto r2 = tau_exact(star_graph(), WeightMap({3, 2, 1}), 2, 2);
  EXPECT_EQ(r2.tau, std::optional<std::size_t>{2});
  ASSERT_EQ(r2.levels.size(), 2U);
  EXPECT_EQ(r2.levels[0], (LevelDetail{1, 1, 0}));
  EXPECT_EQ(r2.levels[1], (LevelDetail{2, 1, 1}));

  const auto r1 = tau_exact(star_graph(), WeightMap({3, 2, 1}), 1, 1);
  EXPECT_EQ(r1.tau, std::optional<std::size_t>{1});
}

TEST(TauExact, ExceedsIsReported) {
  const auto r = tau_exact(star_graph(), WeightMap({3, 2, 1}), 2, 1);
  EXPECT_FALSE(r.tau.has_value());
  EXPECT_EQ(r.levels.size(), 1U);
}

TEST(TauExact, NoEdges) {
  const BipartiteGraph g(3, 2, {});
  for (std::size_t k = 1; k <= 3; ++k) {
    EXPECT_EQ(tau_exact(g, WeightMap({1, 2, 3}), k, k).tau,
              std::optional<std::size_t>{1});
  }
}

TEST(TauExact, Guards) {
  EXPECT_THROW(tau_exact(star_graph(), WeightMap({3, 2, 1}), 0, 1), InvalidArgument);
  EXPECT_THROW(tau_exact(BipartiteGraph(11, 1, {}), WeightMap::zeros(11), 1, 1),
               GuardExceeded);
}

TEST(TauExact, UnionRoutesAgree) {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 40; ++round) {
    const auto g = random_graph(rng, 1 + rng() % 6, 1 + rng() % 4, 0.5);
    const auto w = random_weights(rng, g.left_count(), 3);
    const std::size_t k = 1 + rng() % 3;
    const auto lifted = tau_exact(g, w, k, k + 1, UnionRoute::kLifted);
    const auto brute = tau_exact(g, w, k, k + 1, UnionRoute::kBruteForce);
    EXPECT_EQ(lifted.tau, brute.tau);
    EXPECT_EQ(lifted.levels, brute.levels);
    ASSERT_TRUE(lifted.tau.has_value());
    EXPECT_LE(*lifted.tau, k);
  }
}

TEST(VerifyTheorem, StarInstance) {
  const auto r = verify_theorem(star_graph(), WeightMap({3, 2, 1}), 2, "star");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.optimal_bases, 1U);
  EXPECT_EQ(r.bases, 3U);
  EXPECT_EQ(r.witnesses_checked, 3U);
  EXPECT_EQ(r.tau, std::optional<std::size_t>{2});
  EXPECT_EQ(r.rank, 1U);
  EXPECT_EQ(r.hs22, 2U);
}

TEST(VerifyTheorem, AllZeroWeights) {
  const auto r = verify_theorem(star_graph(), WeightMap::zeros(3), 2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.optimal_bases, 3U);  // every pair is a base of M^2
  EXPECT_EQ(r.witnesses_checked, 9U);
}

TEST(VerifyTheorem, RandomInstancesPass) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    const auto g = random_graph(rng, 1 + rng() % 6, 1 + rng() % 4, 0.5);
    const auto w = random_weights(rng, g.left_count(), 3);
    const std::size_t k = 1 + rng() % 3;
    const auto r = verify_theorem(g, w, k);
    EXPECT_TRUE(r.passed()) << (r.violations.empty() ? "" : r.violations.front());
    ASSERT_TRUE(r.tau.has_value());
    EXPECT_LE(*r.tau, k);
    EXPECT_LE(*r.tau, r.hs22);
  }
}

}  // namespace
}  // namespace robust
