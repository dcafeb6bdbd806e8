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

#ifndef BDNCG_ANALYSIS_HPP
#define BDNCG_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdncg/budget.hpp"
#include "bdncg/game.hpp"
#include "bdncg/instances.hpp"

namespace bdncg {

enum class OptimumKind { kExact, kLowerBound };

std::string_view to_string(OptimumKind kind);

struct OptimumEstimate {
  std::int64_t value = 0;
  OptimumKind kind = OptimumKind::kExact;
};

/// Social optimum of a uniform game, exact or as a lower bound. Throws
/// Error(kNonuniform) for per-player bounds and Error(kInfeasible) for SUM
/// bounds below n-1.
OptimumEstimate optimum_estimate(const GameSpec& spec);

/// As above, but a nonuniform instance may carry its own optimum claim.
OptimumEstimate optimum_estimate(const Instance& instance);

enum class CheckVerdict { kPass, kFail, kSkipped };

std::string_view to_string(CheckVerdict verdict);

/// One inequality `measured <= bound` (or `>=` for ball growth, see detail)
/// evaluated on a verified equilibrium.
struct Check {
  std::string name;
  std::optional<std::int64_t> measured;
  std::optional<std::int64_t> bound;
  CheckVerdict verdict = CheckVerdict::kSkipped;
  std::string detail;
};

/// SC <= (gamma + 1)(n - 1), gamma the domination number of G^(R-1).
Check verify_gamma_bound(const GameSpec& spec, const StrategyProfile& profile,
                         const SolverBudget& budget = {});

/// SC <= (delta + 1)(n - 1), delta the minimum degree.
Check verify_delta_bound(const GameSpec& spec, const StrategyProfile& profile);

/// beta_(3k+1) >= min(n, gamma * beta_k) for every k in [1, diameter],
/// beta_r the smallest ball of radius r.
Check verify_ball_growth(const GameSpec& spec, const StrategyProfile& profile,
                         const SolverBudget& budget = {});

/// A graph that is not self-centered has SC <= 2(n - 1).
Check verify_self_centered_rule(const GameSpec& spec, const StrategyProfile& profile);

/// If some node has broadcast cost <= B - n then SC <= 2(n - 1).
Check verify_sum_slack_rule(const GameSpec& spec, const StrategyProfile& profile);

/// beta_(3k+2) >= min(n/2 + 1, floor(rho) * beta_k) for every k in
/// [1, diameter], rho = SC / (n - 1). Compared in doubled integers.
Check verify_sum_ball_growth(const GameSpec& spec, const StrategyProfile& profile);

struct BoundReport {
  Provenance provenance;
  int num_nodes = 0;
  Verdict verdict = Verdict::kUnknown;
  Measure social_cost;
  std::optional<OptimumEstimate> optimum;
  std::optional<double> ratio;
  std::optional<std::int64_t> gamma;  // domination number of G^(R-1)
  std::optional<int> min_degree;
  std::vector<int> ball_minima;       // beta_1 .. beta_diameter
  std::optional<bool> self_centered;
  std::optional<std::int64_t> min_broadcast;
  std::vector<Check> checks;
};

/// Ratio and every applicable check. The structural checks run only on
/// STABLE reports and only for uniform bounds; they are SKIPPED otherwise.
/// Generator claims (stability, social cost, diameter) are compared too.
BoundReport report(const Instance& instance, const EquilibriumReport& equilibrium,
                   const SolverBudget& budget = {});

bool has_failures(const BoundReport& report);

/// Throws Error(kInvariantViolation) naming every failed check.
void enforce(const BoundReport& report);

std::string instance_label(const Provenance& provenance);

/// CSV with header `instance,check,measured,bound,verdict`, one row per
/// check plus a `ratio` row.
std::string report_csv(const BoundReport& report);

}  // namespace bdncg

#endif  // BDNCG_ANALYSIS_HPP
