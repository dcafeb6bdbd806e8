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

#ifndef BDNCG_GAME_HPP
#define BDNCG_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bdncg/budget.hpp"
#include "bdncg/graph.hpp"

namespace bdncg {

/// MAX bounds each player's eccentricity; SUM bounds its broadcast cost.
enum class Variant { kMax, kSum };

std::string_view to_string(Variant variant);
Variant parse_variant(std::string_view text);

/// Game variant plus one positive distance bound per player: R_v for MAX,
/// the broadcast bound B_v (an integer, never an average) for SUM.
class GameSpec {
 public:
  GameSpec(Variant variant, std::vector<std::int64_t> bounds);
  static GameSpec uniform(Variant variant, int num_players, std::int64_t bound);

  Variant variant() const noexcept { return variant_; }
  int num_players() const noexcept { return static_cast<int>(bounds_.size()); }
  std::int64_t bound(Node v) const { return bounds_.at(v); }
  std::span<const std::int64_t> bounds() const noexcept { return bounds_; }
  bool is_uniform() const noexcept;

  /// SUM only: any connected outcome needs B_v >= n - 1. Players whose
  /// bound is below that can never be within bound.
  std::vector<Node> sum_infeasible_players() const;

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  Variant variant_;
  std::vector<std::int64_t> bounds_;
};

/// Per-player bought-edge sets S_v, stored sorted and de-duplicated.
/// Both endpoints may buy the same edge; the edge then appears once in
/// G(S) but is paid for twice.
class StrategyProfile {
 public:
  explicit StrategyProfile(int num_players = 0);
  explicit StrategyProfile(std::vector<std::vector<Node>> buys);

  int num_players() const noexcept { return static_cast<int>(buys_.size()); }
  std::span<const Node> buys(Node v) const { return buys_.at(v); }
  const std::vector<std::vector<Node>>& all_buys() const noexcept { return buys_; }

  StrategyProfile with_strategy(Node v, std::vector<Node> strategy) const;
  std::size_t total_purchases() const noexcept;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;

 private:
  std::vector<std::vector<Node>> buys_;
};

Graph build_graph(const StrategyProfile& profile);

/// The profile with S_v emptied; edges others bought toward v remain.
StrategyProfile drop_player(const StrategyProfile& profile, Node v);

/// |S_v| if v is within its bound in G(S), unbounded otherwise.
Measure player_cost(const GameSpec& spec, const StrategyProfile& profile, Node v);
Measure player_cost(const GameSpec& spec, const StrategyProfile& profile,
                    const Graph& graph, Node v);

/// Sum of player costs; unbounded if any player is out of bound.
Measure social_cost(const GameSpec& spec, const StrategyProfile& profile);

enum class BestResponseStatus { kExact, kHeuristicUpperBound, kInfeasible };

std::string_view to_string(BestResponseStatus status);

struct BestResponse {
  Node player = 0;
  std::vector<Node> strategy;  // sorted
  Measure cost;                // unbounded iff status is kInfeasible
  BestResponseStatus status = BestResponseStatus::kExact;
};

/// Exact minimum strategy for v under MAX. Among minimum strategies the
/// lexicographically smallest node set is returned. Throws
/// Error(kResourceLimit) when the cover solver runs out of budget.
BestResponse best_response_max(const GameSpec& spec, const StrategyProfile& profile,
                               Node v, const SolverBudget& budget = {});

/// Minimum strategy for v under SUM, by iterative deepening over the
/// strategy size with lexicographic branch and bound. Falls back to the
/// greedy/local-search incumbent (kHeuristicUpperBound) if the budget runs
/// out; kInfeasible when even buying every edge exceeds B_v.
BestResponse best_response_sum(const GameSpec& spec, const StrategyProfile& profile,
                               Node v, const SolverBudget& budget = {});

BestResponse best_response(const GameSpec& spec, const StrategyProfile& profile,
                           Node v, const SolverBudget& budget = {});

/// The MAX best response as a domination problem: the nodes farther than R
/// from v in G(S_{-v}) must each lie within R-1 hops of a bought endpoint,
/// with hops never passing through v. Exposed for diagnostics and tests.
struct MaxCoverFormulation {
  std::vector<Node> universe;
  std::vector<std::vector<Node>> coverage;  // indexed by node id
};

MaxCoverFormulation max_cover_formulation(const GameSpec& spec,
                                          const StrategyProfile& profile, Node v);

enum class Verdict { kStable, kUnstable, kUnknown };

std::string_view to_string(Verdict verdict);

enum class PlayerStatus { kExact, kHeuristicUpperBound, kInfeasible, kResourceLimit };

std::string_view to_string(PlayerStatus status);

struct PlayerRecord {
  Node player = 0;
  Measure current_cost;
  Measure best_cost;  // empty for kInfeasible and kResourceLimit
  PlayerStatus status = PlayerStatus::kExact;
  std::optional<std::vector<Node>> improving_deviation;
};

struct EquilibriumReport {
  std::vector<PlayerRecord> players;
  Measure social_cost;
  std::size_t total_purchases = 0;
  std::size_t num_edges = 0;
  Verdict verdict = Verdict::kUnknown;
  std::optional<Node> witness;  // player with an improving deviation
  std::string reason;
};

struct EquilibriumOptions {
  SolverBudget budget;
  int jobs = 1;
};

/// STABLE iff every player is within bound and its cost equals its exact
/// best-response cost. UNKNOWN only when a solver hit its resource limit
/// and no improving deviation was found elsewhere.
EquilibriumReport is_equilibrium(const GameSpec& spec, const StrategyProfile& profile,
                                 const EquilibriumOptions& options = {});

}  // namespace bdncg

#endif  // BDNCG_GAME_HPP
