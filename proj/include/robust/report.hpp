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

// Per-instance verification records and their CSV / JSON renderings.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "robust/instance.hpp"
#include "robust/matroid.hpp"
#include "robust/tau.hpp"
#include "robust/transversal.hpp"

namespace robust {

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "?";
}

struct ResultRecord {
  TauReport report;
  CheckStatus theorem = CheckStatus::kSkipped;
  CheckStatus oracle_equivalence = CheckStatus::kSkipped;
  CheckStatus greedy_equivalence = CheckStatus::kSkipped;
  std::vector<std::string> notes;

  bool failed() const {
    return theorem == CheckStatus::kFail ||
           oracle_equivalence == CheckStatus::kFail ||
           greedy_equivalence == CheckStatus::kFail;
  }
};

struct CheckOptions {
  /// Test hook: the lifted union oracle answers wrongly on the full ground
  /// set, so the oracle-equivalence check must fail.
  bool corrupt_oracle = false;
};

inline constexpr std::size_t kMaxEquivalenceGround = 8;
inline constexpr std::size_t kMaxEquivalenceK = 3;

/// Lifted union oracle against the brute-force partition oracle on every
/// subset of U.
inline bool union_oracles_agree(const BipartiteGraph& graph,
                                const WeightMap& weights, std::size_t k,
                                bool corrupt = false) {
  const IndependenceOracle lifted = union_oracle(build_lifted(graph, weights, k));
  const IndependenceOracle brute =
      union_oracle_bruteforce(tabulate(transversal_oracle(graph)), k);
  const Subset all = graph.left_vertices();
  bool agree = true;
  for_each_subset(graph.left_count(), [&](Subset s) {
    bool answer = lifted.is_independent(s);
    if (corrupt && s == all) answer = !answer;
    if (answer != brute.is_independent(s)) agree = false;
  });
  return agree;
}

inline ResultRecord run_checks(const Instance& instance,
                               const CheckOptions& options = {}) {
  ResultRecord record;
  const auto& g = instance.graph;
  record.report.instance_id = instance.id;
  record.report.left_count = g.left_count();
  record.report.right_count = g.right_count();
  record.report.k = instance.k;

  try {
    record.report = verify_theorem(g, instance.weights, instance.k, instance.id);
    record.theorem =
        record.report.passed() ? CheckStatus::kPass : CheckStatus::kFail;
    for (const auto& v : record.report.violations) record.notes.push_back(v);
  } catch (const GuardExceeded& e) {
    record.notes.push_back(std::string("theorem skipped: ") + e.what());
  }

  if (g.left_count() <= kMaxEquivalenceGround && instance.k <= kMaxEquivalenceK) {
    const bool ok = union_oracles_agree(g, instance.weights, instance.k,
                                        options.corrupt_oracle);
    record.oracle_equivalence = ok ? CheckStatus::kPass : CheckStatus::kFail;
    if (!ok) record.notes.push_back("lifted and brute-force union oracles differ");
  }

  if (g.left_count() <= kMaxOrderingGround) {
    const bool ok = greedy_equivalence_check(
        tabulate(transversal_oracle(g)), instance.weights, instance.k);
    record.greedy_equivalence = ok ? CheckStatus::kPass : CheckStatus::kFail;
    if (!ok) record.notes.push_back("greedy outputs differ from optimal bases");
  }
  return record;
}

/// Runs every instance; results stay in input order whatever `jobs` is.
inline std::vector<ResultRecord> run_all(const std::vector<Instance>& instances,
                                         std::size_t jobs,
                                         const CheckOptions& options = {}) {
  std::vector<ResultRecord> records(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        records[i] = run_checks(instances[i], options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(instances.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return records;
}

inline std::string tau_field(const TauReport& r) {
  return r.tau ? std::to_string(*r.tau) : "exceeds";
}

inline std::string elapsed_field(const TauReport& r, bool timing) {
  if (!timing) return "";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << r.elapsed_ms;
  return out.str();
}

/// One header line plus one row per record. elapsed_ms is left empty unless
/// `timing` is set, so reports are byte-stable by default.
inline std::string records_csv(const std::vector<ResultRecord>& records,
                               bool timing = false) {
  std::ostringstream out;
  out << "instance_id,nU,nV,k,rank,tau,bound_k,bound_hs22,theorem_pass,"
         "oracle_equiv_pass,greedy_equiv_pass,elapsed_ms\n";
  for (const ResultRecord& rec : records) {
    const TauReport& r = rec.report;
    out << r.instance_id << "," << r.left_count << "," << r.right_count << ","
        << r.k << "," << r.rank << "," << tau_field(r) << ","
        << r.theorem_bound << "," << r.hs22 << "," << to_string(rec.theorem)
        << "," << to_string(rec.oracle_equivalence) << ","
        << to_string(rec.greedy_equivalence) << "," << elapsed_field(r, timing)
        << "\n";
  }
  return out.str();
}

inline nlohmann::ordered_json report_json(const TauReport& r, bool timing) {
  nlohmann::ordered_json doc;
  doc["instance_id"] = r.instance_id;
  doc["nU"] = r.left_count;
  doc["nV"] = r.right_count;
  doc["k"] = r.k;
  doc["rank"] = r.rank;
  doc["tau"] = r.tau ? nlohmann::ordered_json(*r.tau)
                     : nlohmann::ordered_json("exceeds");
  doc["bound_k"] = r.theorem_bound;
  doc["bound_hs22"] = r.hs22;
  doc["levels"] = nlohmann::ordered_json::array();
  for (const LevelDetail& l : r.levels) {
    doc["levels"].push_back({{"level", l.level},
                             {"optimal_bases", l.optimal_bases},
                             {"robust_bases", l.robust_bases}});
  }
  doc["optimal_bases"] = r.optimal_bases;
  doc["bases"] = r.bases;
  doc["witnesses_checked"] = r.witnesses_checked;
  doc["exchanges_checked"] = r.exchanges_checked;
  doc["violations"] = r.violations;
  if (timing) {
    doc["elapsed_ms"] = r.elapsed_ms;
  } else {
    doc["elapsed_ms"] = nullptr;
  }
  return doc;
}

inline std::string records_json(const std::vector<ResultRecord>& records,
                                bool timing = false) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ResultRecord& rec : records) {
    nlohmann::ordered_json row = report_json(rec.report, timing);
    row["theorem_pass"] = to_string(rec.theorem);
    row["oracle_equiv_pass"] = to_string(rec.oracle_equivalence);
    row["greedy_equiv_pass"] = to_string(rec.greedy_equivalence);
    row["notes"] = rec.notes;
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

}  // namespace robust
