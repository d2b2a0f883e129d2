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

// Instance files and the seeded instance generator.
//
// Text format (0-based indices, '#' starts a comment):
//
//   left 3
//   right 1
//   k 2
//   weights 3 2 1
//   edges 3
//   0 0
//   1 0
//   2 0
//
// A JSON object with the same keys ("edges" as a list of [u, v] pairs) is
// accepted as well.

#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "robust/bipartite.hpp"
#include "robust/error.hpp"

namespace robust {

struct Instance {
  std::string id;
  BipartiteGraph graph;
  WeightMap weights;
  std::size_t k = 1;
};

/// Malformed instance text; the message carries the line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline Instance assemble_instance(std::string id, std::size_t left,
                                  std::size_t right, std::size_t k,
                                  std::vector<Weight> weights,
                                  std::vector<Edge> edges) {
  if (k == 0) throw ParseError("k must be at least 1");
  if (weights.size() != left) {
    throw ParseError("expected " + std::to_string(left) + " weights, got " +
                     std::to_string(weights.size()));
  }
  try {
    return {std::move(id), BipartiteGraph(left, right, std::move(edges)),
            WeightMap(std::move(weights)), k};
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

inline Instance parse_json_instance(const std::string& text, std::string id) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
    std::vector<Edge> edges;
    for (const auto& pair : doc.at("edges")) {
      if (pair.size() != 2) throw ParseError("edge entries must be [u, v]");
      edges.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    return assemble_instance(std::move(id), doc.at("left").get<std::size_t>(),
                             doc.at("right").get<std::size_t>(),
                             doc.at("k").get<std::size_t>(),
                             doc.at("weights").get<std::vector<Weight>>(),
                             std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace detail

inline Instance parse_instance(const std::string& text, std::string id = "") {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return detail::parse_json_instance(text, std::move(id));
  }

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> left, right, k, edge_count;
  std::optional<std::vector<Weight>> weights;
  std::vector<Edge> edges;

  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  auto read_count = [&](std::istringstream& fields, const std::string& key) {
    long long value = -1;
    if (!(fields >> value) || value < 0) {
      throw fail("'" + key + "' needs a non-negative integer");
    }
    return static_cast<std::size_t>(value);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string key;
    if (!(fields >> key)) continue;

    if (edge_count && edges.size() < *edge_count) {
      std::istringstream pair(line);
      long long u = -1, v = -1;
      std::string extra;
      if (!(pair >> u >> v) || u < 0 || v < 0 || (pair >> extra)) {
        throw fail("expected an edge 'u v'");
      }
      edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
      continue;
    }
    if (key == "left") {
      left = read_count(fields, key);
    } else if (key == "right") {
      right = read_count(fields, key);
    } else if (key == "k") {
      k = read_count(fields, key);
    } else if (key == "weights") {
      weights.emplace();
      long long w = 0;
      while (fields >> w) {
        if (w < 0) throw fail("weights must be non-negative");
        weights->push_back(static_cast<Weight>(w));
      }
      if (!fields.eof()) throw fail("weights must be integers");
      continue;
    } else if (key == "edges") {
      edge_count = read_count(fields, key);
    } else {
      throw fail("unknown key '" + key + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing text '" + extra + "'");
  }
  if (!left || !right || !k || !weights || !edge_count) {
    throw ParseError("missing one of: left, right, k, weights, edges");
  }
  if (edges.size() != *edge_count) {
    throw ParseError("expected " + std::to_string(*edge_count) +
                     " edges, got " + std::to_string(edges.size()));
  }
  try {
    return detail::assemble_instance(std::move(id), *left, *right, *k,
                                     std::move(*weights), std::move(edges));
  } catch (const ParseError& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str(), path);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  if (!instance.id.empty()) out << "# " << instance.id << "\n";
  out << "left " << instance.graph.left_count() << "\n";
  out << "right " << instance.graph.right_count() << "\n";
  out << "k " << instance.k << "\n";
  out << "weights";
  for (Weight w : instance.weights.values()) out << " " << w;
  out << "\n";
  out << "edges " << instance.graph.edges().size() << "\n";
  for (const Edge& e : instance.graph.edges()) {
    out << e.left << " " << e.right << "\n";
  }
  return out.str();
}

/// num / den with 0 <= num <= den.
struct Probability {
  std::uint64_t num = 1;
  std::uint64_t den = 2;
};

/// Accepts "p/q", an integer 0 or 1, or a decimal such as "0.25".
inline Probability parse_probability(const std::string& text) {
  Probability p;
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      p.num = std::stoull(text.substr(0, slash));
      p.den = std::stoull(text.substr(slash + 1));
    } else if (auto dot = text.find('.'); dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (frac.size() > 9 || frac.find_first_not_of("0123456789") !=
                                 std::string::npos) {
        throw InvalidArgument("bad decimal");
      }
      p.den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) p.den *= 10;
      p.num = (whole.empty() ? 0 : std::stoull(whole)) * p.den +
              (frac.empty() ? 0 : std::stoull(frac));
    } else {
      p.num = std::stoull(text);
      p.den = 1;
    }
  } catch (const std::logic_error&) {
    throw InvalidArgument("cannot parse probability '" + text + "'");
  }
  if (p.den == 0 || p.num > p.den) {
    throw InvalidArgument("probability '" + text + "' is outside [0, 1]");
  }
  return p;
}

struct GenParams {
  std::uint64_t seed = 0;
  std::size_t left = 3;
  std::size_t right = 2;
  Probability edge_probability;
  Weight max_weight = 3;
  std::size_t k = 2;
};

inline constexpr std::size_t kMaxGenLeft = 10;
inline constexpr std::size_t kMaxGenRight = 6;
inline constexpr std::size_t kMaxGenK = 4;

/// Deterministic in `params`: only mt19937_64 raw output is consumed, so
/// the result does not depend on the standard library's distributions.
inline Instance generate_instance(const GenParams& params) {
  enforce_guard(params.left, kMaxGenLeft, "nU");
  enforce_guard(params.right, kMaxGenRight, "nV");
  enforce_guard(params.k, kMaxGenK, "k");
  if (params.k == 0) throw InvalidArgument("k must be at least 1");
  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < params.left; ++u) {
    for (std::size_t v = 0; v < params.right; ++v) {
      if (rng() % params.edge_probability.den < params.edge_probability.num) {
        edges.push_back({u, v});
      }
    }
  }
  std::vector<Weight> weights;
  for (std::size_t u = 0; u < params.left; ++u) {
    weights.push_back(rng() % (params.max_weight + 1));
  }
  return {"seed-" + std::to_string(params.seed),
          BipartiteGraph(params.left, params.right, std::move(edges)),
          WeightMap(std::move(weights)), params.k};
}

/// Bounds for sweep instances whose shape is itself drawn from the seed.
struct SweepShape {
  std::size_t max_left = 6;
  std::size_t max_right = 4;
  std::size_t max_k = 3;
  Weight max_weight = 3;
};

/// Draws nU, nV, k and an edge probability in {1/4, 2/4, 3/4, 1} from the
/// seed, then generates.
inline Instance sweep_instance(std::uint64_t seed, const SweepShape& shape) {
  std::mt19937_64 rng(seed);
  GenParams params;
  params.left = 1 + rng() % shape.max_left;
  params.right = 1 + rng() % shape.max_right;
  params.k = 1 + rng() % shape.max_k;
  params.edge_probability = {1 + rng() % 4, 4};
  params.max_weight = shape.max_weight;
  params.seed = rng();
  Instance instance = generate_instance(params);
  instance.id = "seed-" + std::to_string(seed);
  return instance;
}

}  // namespace robust
