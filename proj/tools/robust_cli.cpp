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

// robust-matroid: batch driver for instance generation, theorem sweeps,
// witness inspection and exact tau computation.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robust/export.hpp"
#include "robust/instance.hpp"
#include "robust/report.hpp"
#include "robust/robust.hpp"
#include "robust/tau.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public robust::Error {
 public:
  using robust::Error::Error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw robust::Error("cannot write " + path);
  out << content;
}

robust::Subset parse_index_list(const std::string& text, std::size_t bound) {
  robust::Subset s;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(item, &used);
      if (item.find_first_not_of(' ', used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad vertex index '" + item + "'");
    }
    if (index >= bound) {
      throw UsageError("vertex index " + std::to_string(index) +
                       " is out of range (|U| = " + std::to_string(bound) + ")");
    }
    s.insert(index);
  }
  return s;
}

struct GenOptions {
  robust::GenParams params;
  std::string probability = "1/2";
  std::string output;
};

int run_gen(GenOptions& opts) {
  opts.params.edge_probability = robust::parse_probability(opts.probability);
  const std::string text =
      robust::format_instance(robust::generate_instance(opts.params));
  if (opts.output.empty()) {
    std::cout << text;
  } else {
    write_file(opts.output, text);
  }
  return kExitPass;
}

struct VerifyOptions {
  std::vector<std::string> files;
  std::uint64_t seed = 1;
  std::size_t count = 0;
  robust::SweepShape shape;
  std::size_t jobs = 1;
  std::string csv;
  std::string json;
  bool timing = false;
  bool corrupt_oracle = false;
};

int run_verify(const VerifyOptions& opts) {
  std::vector<robust::Instance> instances;
  for (const auto& path : opts.files) {
    instances.push_back(robust::load_instance(path));
  }
  for (std::size_t i = 0; i < opts.count; ++i) {
    instances.push_back(robust::sweep_instance(opts.seed + i, opts.shape));
  }
  robust::CheckOptions check;
  check.corrupt_oracle = opts.corrupt_oracle;
  const auto records = robust::run_all(instances, opts.jobs, check);

  std::size_t failures = 0;
  for (const auto& rec : records) {
    const auto& r = rec.report;
    std::cout << r.instance_id << ": tau=" << robust::tau_field(r)
              << " k=" << r.k << " hs22=" << r.hs22
              << " theorem=" << robust::to_string(rec.theorem)
              << " oracle_equiv=" << robust::to_string(rec.oracle_equivalence)
              << " greedy_equiv=" << robust::to_string(rec.greedy_equivalence)
              << "\n";
    for (const auto& note : rec.notes) std::cout << "  " << note << "\n";
    if (rec.failed()) ++failures;
  }
  std::cout << records.size() << " instances, " << failures << " failures\n";
  if (!opts.csv.empty()) write_file(opts.csv, robust::records_csv(records, opts.timing));
  if (!opts.json.empty()) write_file(opts.json, robust::records_json(records, opts.timing));
  return failures == 0 ? kExitPass : kExitFail;
}

struct WitnessOptions {
  std::string instance;
  std::string base;
  std::string optimal;
  std::string dot;
  std::string json;
};

std::string explain_non_base(const robust::Instance& inst, robust::Subset b) {
  const auto oracle = robust::transversal_oracle(inst.graph);
  if (!oracle.is_independent(b)) {
    return "B = " + robust::to_string(b) +
           " is dependent in M_G: no matching covers it (circuit " +
           robust::to_string(robust::find_circuit(oracle, b)) + ")";
  }
  return "B = " + robust::to_string(b) +
         " is independent but not a base: |B| = " + std::to_string(b.size()) +
         " < rank " + std::to_string(robust::rank(oracle));
}

int run_witness(const WitnessOptions& opts) {
  const robust::Instance inst = robust::load_instance(opts.instance);
  const std::size_t n = inst.graph.left_count();
  const robust::Subset b = parse_index_list(opts.base, n);
  if (!robust::is_base(robust::transversal_oracle(inst.graph), b)) {
    throw UsageError(explain_non_base(inst, b));
  }
  robust::Subset x;
  if (opts.optimal.empty()) {
    x = robust::optimal_base_lifted(inst.graph, inst.weights, inst.k).base;
  } else {
    x = parse_index_list(opts.optimal, n);
  }
  robust::WitnessConstruction c = [&] {
    try {
      return robust::construct_witness(inst.graph, inst.weights, inst.k, x, b);
    } catch (const robust::InvalidArgument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto check = robust::check_witness(
      robust::transversal_oracle(inst.graph), inst.weights, inst.k, x, b,
      c.witness);
  std::cout << robust::witness_text(c);
  std::cout << "check: R1=" << (check.r1 ? "pass" : "fail")
            << " R2=" << (check.r2 ? "pass" : "fail")
            << " R3=" << (check.r3 ? "pass" : "fail") << "\n";
  if (!opts.dot.empty()) {
    write_file(opts.dot + "_digraph.dot", robust::digraph_dot(c));
    write_file(opts.dot + "_lifted.dot",
               robust::lifted_dot(c.lifted, c.lifted_matching));
  }
  if (!opts.json.empty()) {
    write_file(opts.json, robust::witness_json(c).dump(2) + "\n");
  }
  return check ? kExitPass : kExitFail;
}

struct TauOptions {
  std::string instance;
  std::size_t max_level = 0;
  std::string json;
};

int run_tau(const TauOptions& opts) {
  const robust::Instance inst = robust::load_instance(opts.instance);
  const std::size_t max_level = opts.max_level == 0 ? inst.k : opts.max_level;
  const auto oracle = robust::transversal_oracle(inst.graph);
  robust::TauReport report;
  report.instance_id = inst.id;
  report.left_count = inst.graph.left_count();
  report.right_count = inst.graph.right_count();
  report.k = inst.k;
  report.rank = robust::rank(oracle);
  report.theorem_bound = inst.k;
  report.hs22 = robust::hs22_bound(inst.k, report.rank);
  const robust::TauResult result =
      robust::tau_exact(inst.graph, inst.weights, inst.k, max_level);
  report.tau = result.tau;
  report.levels = result.levels;

  std::cout << "tau=" << robust::tau_field(report) << " bound=" << inst.k
            << " hs22=" << report.hs22 << "\n";
  std::cout << "level  optimal_bases  robust\n";
  for (const auto& l : result.levels) {
    std::cout << l.level << "  " << l.optimal_bases << "  " << l.robust_bases
              << "\n";
  }
  if (!opts.json.empty()) {
    write_file(opts.json, robust::report_json(report, false).dump(2) + "\n");
  }
  const bool bound_broken = !result.tau && max_level >= inst.k;
  return bound_broken ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust subsets of transversal matroids: sweeps, witnesses, tau"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random instance");
  gen_cmd->add_option("--seed", gen.params.seed, "RNG seed");
  gen_cmd->add_option("--nu", gen.params.left, "|U|");
  gen_cmd->add_option("--nv", gen.params.right, "|V|");
  gen_cmd->add_option("--p", gen.probability, "Edge probability (p/q or decimal)");
  gen_cmd->add_option("--wmax", gen.params.max_weight, "Largest weight");
  gen_cmd->add_option("--k", gen.params.k, "k");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Replay the tau <= k theorem on instance files or a seeded sweep");
  verify_cmd->add_option("files", verify.files, "Instance files");
  verify_cmd->add_option("--seed", verify.seed, "First seed of the sweep");
  verify_cmd->add_option("--count", verify.count, "Number of seeded instances");
  verify_cmd->add_option("--max-nu", verify.shape.max_left, "Largest |U| in the sweep");
  verify_cmd->add_option("--max-nv", verify.shape.max_right, "Largest |V| in the sweep");
  verify_cmd->add_option("--max-k", verify.shape.max_k, "Largest k in the sweep");
  verify_cmd->add_option("--wmax", verify.shape.max_weight, "Largest weight");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads");
  verify_cmd->add_option("--csv", verify.csv, "Write CSV report");
  verify_cmd->add_option("--json", verify.json, "Write JSON report");
  verify_cmd->add_flag("--timing", verify.timing, "Fill elapsed_ms (breaks byte-stability)");
  verify_cmd->add_flag("--corrupt-oracle", verify.corrupt_oracle)->group("");

  WitnessOptions witness;
  auto* witness_cmd = app.add_subcommand("witness", "Construct a robust witness for one base");
  witness_cmd->add_option("instance", witness.instance, "Instance file")->required();
  witness_cmd->add_option("--base", witness.base, "Base B of M_G, 0-based indices, comma-separated")
      ->required();
  witness_cmd->add_option("--x", witness.optimal,
                          "Optimal base X of the k-fold union (default: canonical greedy)");
  witness_cmd->add_option("--dot", witness.dot, "Write PREFIX_digraph.dot and PREFIX_lifted.dot");
  witness_cmd->add_option("--json", witness.json, "Write the witness as JSON");

  TauOptions tau;
  auto* tau_cmd = app.add_subcommand("tau", "Compute tau exactly");
  tau_cmd->add_option("instance", tau.instance, "Instance file")->required();
  tau_cmd->add_option("--lmax", tau.max_level, "Largest l to try (default k)");
  tau_cmd->add_option("--json", tau.json, "Write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*verify_cmd) return run_verify(verify);
    if (*witness_cmd) return run_witness(witness);
    if (*tau_cmd) return run_tau(tau);
  } catch (const robust::LemmaViolation& e) {
    std::cerr << "lemma violation: " << e.what() << "\n";
    return kExitFail;
  } catch (const robust::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
