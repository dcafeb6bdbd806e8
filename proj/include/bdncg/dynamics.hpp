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

#ifndef BDNCG_DYNAMICS_HPP
#define BDNCG_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdncg/game.hpp"

namespace bdncg {

enum class Schedule { kRoundRobin, kRandom };

std::string_view to_string(Schedule schedule);
Schedule parse_schedule(std::string_view text);

struct DynamicsOptions {
  Schedule schedule = Schedule::kRoundRobin;
  std::uint64_t seed = 0;
  int max_rounds = 100;
  SolverBudget budget;
  bool record_trace = false;
};

/// One accepted deviation.
struct DeviationEvent {
  int round = 0;
  std::size_t step = 0;
  Node player = 0;
  std::vector<Node> old_strategy;
  std::vector<Node> new_strategy;
  Measure old_cost;
  Measure new_cost;
};

enum class OutcomeKind { kEquilibrium, kCycle, kLimit };

std::string_view to_string(OutcomeKind kind);

struct CycleEvidence {
  std::uint64_t state_hash = 0;
  std::size_t first_step = 0;   // deviation count when the state was first seen
  std::size_t repeat_step = 0;  // deviation count when it reappeared
};

struct DynamicsOutcome {
  OutcomeKind kind = OutcomeKind::kLimit;
  StrategyProfile profile;
  int rounds = 0;
  std::size_t deviations = 0;
  std::optional<CycleEvidence> cycle;
  std::vector<DeviationEvent> trace;
};

/// Canonical 64-bit FNV-1a hash of a profile.
std::uint64_t profile_hash(const StrategyProfile& profile);

/// Sequential best-response dynamics. Each round visits every player once
/// (in id order, or in a seeded shuffled order per round); a player switches
/// to its best response only if that strictly lowers its cost. Stops with
/// kEquilibrium after a round without changes, kCycle when a profile
/// reappears, kLimit after max_rounds. Error(kResourceLimit) propagates.
DynamicsOutcome best_response_dynamics(const GameSpec& spec,
                                       const StrategyProfile& initial,
                                       const DynamicsOptions& options = {});

}  // namespace bdncg

#endif  // BDNCG_DYNAMICS_HPP
