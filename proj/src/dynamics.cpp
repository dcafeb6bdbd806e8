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

#include "bdncg/dynamics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "bdncg/error.hpp"

namespace bdncg {

namespace {

bool strictly_better(const Measure& next, const Measure& current) {
  if (!next) return false;
  return !current || *next < *current;
}

}  // namespace

std::string_view to_string(Schedule schedule) {
  return schedule == Schedule::kRoundRobin ? "round-robin" : "random";
}

Schedule parse_schedule(std::string_view text) {
  if (text == "round-robin" || text == "roundrobin" || text == "rr") {
    return Schedule::kRoundRobin;
  }
  if (text == "random") return Schedule::kRandom;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown schedule '" + std::string(text) + "'");
}

std::string_view to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::kEquilibrium: return "EQUILIBRIUM";
    case OutcomeKind::kCycle: return "CYCLE";
    case OutcomeKind::kLimit: return "LIMIT";
  }
  return "?";
}

std::uint64_t profile_hash(const StrategyProfile& profile) {
  std::uint64_t hash = 14695981039346656037ULL;
  auto mix = [&hash](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (word >> (8 * byte)) & 0xFFU;
      hash *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(profile.num_players()));
  for (Node v = 0; v < profile.num_players(); ++v) {
    auto buys = profile.buys(v);
    mix(buys.size());
    for (Node u : buys) mix(static_cast<std::uint64_t>(u));
  }
  return hash;
}

DynamicsOutcome best_response_dynamics(const GameSpec& spec,
                                       const StrategyProfile& initial,
                                       const DynamicsOptions& options) {
  if (options.max_rounds < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_rounds must be at least 1");
  }
  if (spec.num_players() != initial.num_players()) {
    throw Error(ErrorCode::kInvalidArgument, "spec/profile size mismatch");
  }
  const int n = initial.num_players();
  std::mt19937_64 rng(options.seed);
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);

  DynamicsOutcome outcome;
  outcome.profile = initial;
  // Hash collisions are resolved by comparing the stored profiles.
  std::multimap<std::uint64_t, std::pair<StrategyProfile, std::size_t>> seen;
  seen.emplace(profile_hash(initial), std::make_pair(initial, std::size_t{0}));

  for (int round = 1; round <= options.max_rounds; ++round) {
    outcome.rounds = round;
    if (options.schedule == Schedule::kRandom) {
      std::shuffle(order.begin(), order.end(), rng);
    }
    bool changed = false;
    for (Node v : order) {
      const Measure current = player_cost(spec, outcome.profile, v);
      BestResponse br = best_response(spec, outcome.profile, v, options.budget);
      if (!strictly_better(br.cost, current)) continue;

      DeviationEvent event;
      event.round = round;
      event.step = outcome.deviations + 1;
      event.player = v;
      auto old = outcome.profile.buys(v);
      event.old_strategy.assign(old.begin(), old.end());
      event.new_strategy = br.strategy;
      event.old_cost = current;
      event.new_cost = br.cost;

      outcome.profile = outcome.profile.with_strategy(v, br.strategy);
      ++outcome.deviations;
      changed = true;
      if (options.record_trace) outcome.trace.push_back(std::move(event));

      const std::uint64_t hash = profile_hash(outcome.profile);
      auto [lo, hi] = seen.equal_range(hash);
      for (auto it = lo; it != hi; ++it) {
        if (it->second.first == outcome.profile) {
          outcome.kind = OutcomeKind::kCycle;
          outcome.cycle = CycleEvidence{hash, it->second.second, outcome.deviations};
          return outcome;
        }
      }
      seen.emplace(hash, std::make_pair(outcome.profile, outcome.deviations));
    }
    if (!changed) {
      outcome.kind = OutcomeKind::kEquilibrium;
      return outcome;
    }
  }
  outcome.kind = OutcomeKind::kLimit;
  return outcome;
}

}  // namespace bdncg
