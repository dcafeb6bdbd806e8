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

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "bdncg/error.hpp"
#include "bdncg/game.hpp"

namespace bdncg {

namespace {

bool improves(const Measure& candidate, const Measure& current) {
  if (!candidate) return false;
  return !current || *candidate < *current;
}

PlayerRecord evaluate_player(const GameSpec& spec, const StrategyProfile& profile,
                             const Graph& graph, Node v, const SolverBudget& budget) {
  PlayerRecord record;
  record.player = v;
  record.current_cost = player_cost(spec, profile, graph, v);
  try {
    BestResponse br = best_response(spec, profile, v, budget);
    switch (br.status) {
      case BestResponseStatus::kExact:
        record.status = PlayerStatus::kExact;
        break;
      case BestResponseStatus::kHeuristicUpperBound:
        record.status = PlayerStatus::kHeuristicUpperBound;
        break;
      case BestResponseStatus::kInfeasible:
        record.status = PlayerStatus::kInfeasible;
        break;
    }
    record.best_cost = br.cost;
    if (improves(br.cost, record.current_cost)) {
      record.improving_deviation = br.strategy;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
    record.status = PlayerStatus::kResourceLimit;
    record.best_cost = std::nullopt;
  }
  return record;
}

}  // namespace

EquilibriumReport is_equilibrium(const GameSpec& spec, const StrategyProfile& profile,
                                 const EquilibriumOptions& options) {
  if (spec.num_players() != profile.num_players()) {
    throw Error(ErrorCode::kInvalidArgument, "spec/profile size mismatch");
  }
  const int n = profile.num_players();
  const Graph graph = build_graph(profile);

  EquilibriumReport report;
  report.players.resize(n);
  report.total_purchases = profile.total_purchases();
  report.num_edges = graph.num_edges();
  report.social_cost = social_cost(spec, profile);

  const int jobs = std::clamp(options.jobs, 1, std::max(1, n));
  if (jobs == 1) {
    for (Node v = 0; v < n; ++v) {
      report.players[v] = evaluate_player(spec, profile, graph, v, options.budget);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> failures(jobs);
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (int v = next++; v < n; v = next++) {
            report.players[v] =
                evaluate_player(spec, profile, graph, v, options.budget);
          }
        } catch (...) {
          failures[w] = std::current_exception();
          next = n;
        }
      });
    }
    workers.clear();
    for (auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  for (const auto& record : report.players) {
    if (record.improving_deviation) {
      report.verdict = Verdict::kUnstable;
      report.witness = record.player;
      report.reason = "player " + std::to_string(record.player) +
                      " has an improving deviation";
      return report;
    }
  }
  for (const auto& record : report.players) {
    if (!record.current_cost && record.status == PlayerStatus::kInfeasible) {
      report.verdict = Verdict::kUnstable;
      report.reason = "player " + std::to_string(record.player) +
                      " cannot meet its bound under any strategy";
      return report;
    }
  }
  for (const auto& record : report.players) {
    if (record.status == PlayerStatus::kResourceLimit ||
        record.status == PlayerStatus::kHeuristicUpperBound) {
      report.verdict = Verdict::kUnknown;
      report.reason = "best response of player " + std::to_string(record.player) +
                      " not solved exactly within budget";
      return report;
    }
  }
  report.verdict = Verdict::kStable;
  report.reason = "no player has an improving deviation";
  return report;
}

}  // namespace bdncg
