// Copyright 2026 The bdncg Authors
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

#include "bdncg/game.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bdncg/error.hpp"

namespace bdncg {

std::string_view to_string(Variant variant) {
  return variant == Variant::kMax ? "max" : "sum";
}

Variant parse_variant(std::string_view text) {
  if (text == "max" || text == "MAX") return Variant::kMax;
  if (text == "sum" || text == "SUM") return Variant::kSum;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown variant '" + std::string(text) + "'");
}

GameSpec::GameSpec(Variant variant, std::vector<std::int64_t> bounds)
    : variant_(variant), bounds_(std::move(bounds)) {
  for (std::size_t v = 0; v < bounds_.size(); ++v) {
    if (bounds_[v] < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bound of player " + std::to_string(v) + " must be positive");
    }
  }
}

GameSpec GameSpec::uniform(Variant variant, int num_players, std::int64_t bound) {
  if (num_players < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative player count");
  }
  return GameSpec(variant, std::vector<std::int64_t>(num_players, bound));
}

bool GameSpec::is_uniform() const noexcept {
  return std::adjacent_find(bounds_.begin(), bounds_.end(),
                            std::not_equal_to<>()) == bounds_.end();
}

std::vector<Node> GameSpec::sum_infeasible_players() const {
  std::vector<Node> out;
  if (variant_ != Variant::kSum) return out;
  const std::int64_t floor_bound = num_players() - 1;
  for (Node v = 0; v < num_players(); ++v) {
    if (bounds_[v] < floor_bound) out.push_back(v);
  }
  return out;
}

StrategyProfile::StrategyProfile(int num_players) {
  if (num_players < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative player count");
  }
  buys_.resize(num_players);
}

StrategyProfile::StrategyProfile(std::vector<std::vector<Node>> buys)
    : buys_(std::move(buys)) {
  const int n = num_players();
  for (Node v = 0; v < n; ++v) {
    auto& s = buys_[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (Node u : s) {
      if (u < 0 || u >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "player " + std::to_string(v) + " buys out-of-range node " +
                        std::to_string(u));
      }
      if (u == v) {
        throw Error(ErrorCode::kInvalidArgument,
                    "player " + std::to_string(v) + " buys an edge to itself");
      }
    }
  }
}

StrategyProfile StrategyProfile::with_strategy(Node v,
                                               std::vector<Node> strategy) const {
  auto buys = buys_;
  buys.at(v) = std::move(strategy);
  return StrategyProfile(std::move(buys));
}

std::size_t StrategyProfile::total_purchases() const noexcept {
  std::size_t total = 0;
  for (const auto& s : buys_) total += s.size();
  return total;
}

Graph build_graph(const StrategyProfile& profile) {
  std::vector<Edge> edges;
  edges.reserve(profile.total_purchases());
  for (Node v = 0; v < profile.num_players(); ++v) {
    for (Node u : profile.buys(v)) edges.emplace_back(v, u);
  }
  return Graph(profile.num_players(), edges);
}

StrategyProfile drop_player(const StrategyProfile& profile, Node v) {
  return profile.with_strategy(v, {});
}

Measure player_cost(const GameSpec& spec, const StrategyProfile& profile, Node v) {
  return player_cost(spec, profile, build_graph(profile), v);
}

Measure player_cost(const GameSpec& spec, const StrategyProfile& profile,
                    const Graph& graph, Node v) {
  if (spec.num_players() != profile.num_players() ||
      graph.num_nodes() != profile.num_players()) {
    throw Error(ErrorCode::kInvalidArgument, "spec/profile size mismatch");
  }
  Measure distance = spec.variant() == Variant::kMax ? eccentricity(graph, v)
                                                     : broadcast_cost(graph, v);
  if (!distance || *distance > spec.bound(v)) return std::nullopt;
  return static_cast<std::int64_t>(profile.buys(v).size());
}

Measure social_cost(const GameSpec& spec, const StrategyProfile& profile) {
  Graph graph = build_graph(profile);
  std::int64_t total = 0;
  for (Node v = 0; v < profile.num_players(); ++v) {
    Measure c = player_cost(spec, profile, graph, v);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

std::string_view to_string(BestResponseStatus status) {
  switch (status) {
    case BestResponseStatus::kExact: return "EXACT";
    case BestResponseStatus::kHeuristicUpperBound: return "HEURISTIC_UPPER_BOUND";
    case BestResponseStatus::kInfeasible: return "INFEASIBLE";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kStable: return "STABLE";
    case Verdict::kUnstable: return "UNSTABLE";
    case Verdict::kUnknown: return "UNKNOWN";
  }
  return "?";
}

std::string_view to_string(PlayerStatus status) {
  switch (status) {
    case PlayerStatus::kExact: return "EXACT";
    case PlayerStatus::kHeuristicUpperBound: return "HEURISTIC_UPPER_BOUND";
    case PlayerStatus::kInfeasible: return "INFEASIBLE";
    case PlayerStatus::kResourceLimit: return "RESOURCE_LIMIT";
  }
  return "?";
}

}  // namespace bdncg
