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

#include "bdncg/analysis.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bdncg/cover.hpp"
#include "bdncg/error.hpp"

namespace bdncg {

namespace {

Check skipped(std::string name, std::string why) {
  Check c;
  c.name = std::move(name);
  c.verdict = CheckVerdict::kSkipped;
  c.detail = std::move(why);
  return c;
}

Check compare_le(std::string name, std::int64_t measured, std::int64_t bound,
                 std::string detail) {
  Check c;
  c.name = std::move(name);
  c.measured = measured;
  c.bound = bound;
  c.verdict = measured <= bound ? CheckVerdict::kPass : CheckVerdict::kFail;
  c.detail = std::move(detail);
  return c;
}

// Smallest ball of each radius, capped at n past the diameter.
class BallMinima {
 public:
  explicit BallMinima(const Graph& graph) : graph_(graph) {
    diam_ = diameter(graph).value_or(0);
  }

  int diameter_value() const { return static_cast<int>(diam_); }

  std::int64_t at(int r) {
    if (r >= diam_) return graph_.num_nodes();
    auto it = cache_.find(r);
    if (it != cache_.end()) return it->second;
    const std::int64_t value = ball_profile(graph_, r).min_size;
    cache_.emplace(r, value);
    return value;
  }

 private:
  const Graph& graph_;
  std::int64_t diam_ = 0;
  std::map<int, std::int64_t> cache_;
};

struct Preconditions {
  Graph graph;
  std::int64_t social = 0;
  int n = 0;
};

// Shared guard: uniform bounds of the right variant and a finite social
// cost. Returns the reason to skip, or fills `out`.
std::optional<std::string> prepare(const GameSpec& spec, const StrategyProfile& profile,
                                   Variant variant, Preconditions& out) {
  if (spec.variant() != variant) {
    return std::string("applies to ") + std::string(to_string(variant)) + " only";
  }
  if (!spec.is_uniform()) return std::string("bounds are not uniform");
  if (spec.num_players() < 2) return std::string("fewer than two players");
  const Measure social = social_cost(spec, profile);
  if (!social) return std::string("some player is out of bound");
  out.graph = build_graph(profile);
  out.social = *social;
  out.n = spec.num_players();
  return std::nullopt;
}

std::int64_t domination_of_power(const Graph& graph, std::int64_t radius,
                                 const SolverBudget& budget) {
  const int hops = static_cast<int>(std::min<std::int64_t>(radius - 1, graph.num_nodes()));
  return static_cast<std::int64_t>(min_dominating_set(graph_power(graph, hops), budget).size());
}

Check gamma_check(const Preconditions& pre, std::int64_t gamma) {
  const std::int64_t bound = (gamma + 1) * (pre.n - 1);
  return compare_le("gamma_bound", pre.social, bound,
                    "SC <= (gamma+1)(n-1) with gamma=" + std::to_string(gamma));
}

Check ball_check(Preconditions& pre, std::int64_t gamma) {
  BallMinima balls(pre.graph);
  std::int64_t worst_slack = 0;
  std::optional<Check> worst;
  for (int k = 1; k <= std::max(1, balls.diameter_value()); ++k) {
    const std::int64_t lhs = balls.at(3 * k + 1);
    const std::int64_t rhs = std::min<std::int64_t>(pre.n, gamma * balls.at(k));
    const std::int64_t slack = lhs - rhs;
    if (!worst || slack < worst_slack) {
      worst_slack = slack;
      Check c;
      c.name = "ball_growth";
      c.measured = lhs;
      c.bound = rhs;
      c.detail = "beta_" + std::to_string(3 * k + 1) + " >= min(n, gamma*beta_" +
                 std::to_string(k) + ") with gamma=" + std::to_string(gamma) +
                 " (tightest k)";
      worst = c;
    }
  }
  worst->verdict = worst_slack >= 0 ? CheckVerdict::kPass : CheckVerdict::kFail;
  return *worst;
}

}  // namespace

std::string_view to_string(OptimumKind kind) {
  return kind == OptimumKind::kExact ? "EXACT" : "LOWER_BOUND";
}

std::string_view to_string(CheckVerdict verdict) {
  switch (verdict) {
    case CheckVerdict::kPass: return "PASS";
    case CheckVerdict::kFail: return "FAIL";
    case CheckVerdict::kSkipped: return "SKIPPED";
  }
  return "?";
}

OptimumEstimate optimum_estimate(const GameSpec& spec) {
  if (!spec.is_uniform()) {
    throw Error(ErrorCode::kNonuniform, "optimum needs uniform bounds");
  }
  const std::int64_t n = spec.num_players();
  if (n <= 1) return {0, OptimumKind::kExact};
  const std::int64_t bound = spec.bound(0);
  if (spec.variant() == Variant::kMax) {
    if (bound >= 2) return {n - 1, OptimumKind::kExact};
    return {n * (n - 1) / 2, OptimumKind::kExact};
  }
  if (bound < n - 1) {
    throw Error(ErrorCode::kInfeasible, "SUM bound below n-1 admits no outcome");
  }
  if (bound >= 2 * n - 3) return {n - 1, OptimumKind::kExact};
  const std::int64_t k = bound - n + 1;
  const std::int64_t half = (n * (n - 1 - k) + 1) / 2;
  return {std::max(n - 1, half), OptimumKind::kLowerBound};
}

OptimumEstimate optimum_estimate(const Instance& instance) {
  if (!instance.spec.is_uniform() && instance.expected.optimum) {
    return {*instance.expected.optimum, OptimumKind::kExact};
  }
  return optimum_estimate(instance.spec);
}

Check verify_gamma_bound(const GameSpec& spec, const StrategyProfile& profile,
                         const SolverBudget& budget) {
  Preconditions pre;
  if (auto why = prepare(spec, profile, Variant::kMax, pre)) {
    return skipped("gamma_bound", *why);
  }
  try {
    return gamma_check(pre, domination_of_power(pre.graph, spec.bound(0), budget));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
    return skipped("gamma_bound", "domination number: resource limit");
  }
}

Check verify_delta_bound(const GameSpec& spec, const StrategyProfile& profile) {
  Preconditions pre;
  if (auto why = prepare(spec, profile, Variant::kMax, pre)) {
    return skipped("delta_bound", *why);
  }
  const std::int64_t delta = min_degree(pre.graph);
  return compare_le("delta_bound", pre.social, (delta + 1) * (pre.n - 1),
                    "SC <= (delta+1)(n-1) with delta=" + std::to_string(delta));
}

Check verify_ball_growth(const GameSpec& spec, const StrategyProfile& profile,
                         const SolverBudget& budget) {
  Preconditions pre;
  if (auto why = prepare(spec, profile, Variant::kMax, pre)) {
    return skipped("ball_growth", *why);
  }
  try {
    return ball_check(pre, domination_of_power(pre.graph, spec.bound(0), budget));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
    return skipped("ball_growth", "domination number: resource limit");
  }
}

Check verify_self_centered_rule(const GameSpec& spec, const StrategyProfile& profile) {
  Preconditions pre;
  if (auto why = prepare(spec, profile, Variant::kMax, pre)) {
    return skipped("self_centered_rule", *why);
  }
  const bool centered = is_self_centered(pre.graph);
  Check c = compare_le("self_centered_rule", pre.social, 2LL * (pre.n - 1),
                       centered ? "self-centered; rule vacuous"
                                : "not self-centered; SC <= 2(n-1)");
  if (centered) c.verdict = CheckVerdict::kPass;
  return c;
}

Check verify_sum_slack_rule(const GameSpec& spec, const StrategyProfile& profile) {
  Preconditions pre;
  if (auto why = prepare(spec, profile, Variant::kSum, pre)) {
    return skipped("sum_slack_rule", *why);
  }
  std::int64_t least = -1;
  for (Node v = 0; v < pre.n; ++v) {
    const std::int64_t cost = *broadcast_cost(pre.graph, v);
    if (least < 0 || cost < least) least = cost;
  }
  const bool slack = least <= spec.bound(0) - pre.n;
  Check c = compare_le("sum_slack_rule", pre.social, 2LL * (pre.n - 1),
                       "min broadcast " + std::to_string(least) +
                           (slack ? " <= B-n; SC <= 2(n-1)" : " > B-n; rule vacuous"));
  if (!slack) c.verdict = CheckVerdict::kPass;
  return c;
}

Check verify_sum_ball_growth(const GameSpec& spec, const StrategyProfile& profile) {
  Preconditions pre;
  if (auto why = prepare(spec, profile, Variant::kSum, pre)) {
    return skipped("sum_ball_growth", *why);
  }
  const std::int64_t rho_floor = pre.social / (pre.n - 1);
  BallMinima balls(pre.graph);
  std::optional<Check> worst;
  std::int64_t worst_slack = 0;
  for (int k = 1; k <= std::max(1, balls.diameter_value()); ++k) {
    const std::int64_t lhs = 2 * balls.at(3 * k + 2);
    const std::int64_t rhs = std::min<std::int64_t>(pre.n + 2, 2 * rho_floor * balls.at(k));
    if (!worst || lhs - rhs < worst_slack) {
      worst_slack = lhs - rhs;
      Check c;
      c.name = "sum_ball_growth";
      c.measured = lhs;
      c.bound = rhs;
      c.detail = "2*beta_" + std::to_string(3 * k + 2) + " >= min(n+2, 2*" +
                 std::to_string(rho_floor) + "*beta_" + std::to_string(k) +
                 ") (tightest k)";
      worst = c;
    }
  }
  worst->verdict = worst_slack >= 0 ? CheckVerdict::kPass : CheckVerdict::kFail;
  return *worst;
}

BoundReport report(const Instance& instance, const EquilibriumReport& equilibrium,
                   const SolverBudget& budget) {
  const GameSpec& spec = instance.spec;
  const StrategyProfile& profile = instance.profile;
  BoundReport out;
  out.provenance = instance.provenance;
  out.num_nodes = spec.num_players();
  out.verdict = equilibrium.verdict;
  out.social_cost = social_cost(spec, profile);

  try {
    out.optimum = optimum_estimate(instance);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNonuniform && e.code() != ErrorCode::kInfeasible) throw;
  }
  if (out.optimum && out.social_cost && out.optimum->value > 0) {
    out.ratio = static_cast<double>(*out.social_cost) /
                static_cast<double>(out.optimum->value);
  }

  const Graph graph = build_graph(profile);
  if (is_connected(graph) && graph.num_nodes() >= 1) {
    out.min_degree = min_degree(graph);
    out.self_centered = is_self_centered(graph);
    BallMinima balls(graph);
    for (int r = 1; r <= balls.diameter_value(); ++r) {
      out.ball_minima.push_back(static_cast<int>(balls.at(r)));
    }
    std::int64_t least = -1;
    for (Node v = 0; v < graph.num_nodes(); ++v) {
      const std::int64_t cost = *broadcast_cost(graph, v);
      if (least < 0 || cost < least) least = cost;
    }
    out.min_broadcast = least;
  }

  const std::vector<std::string> max_checks = {"gamma_bound", "delta_bound",
                                               "ball_growth", "self_centered_rule"};
  const std::vector<std::string> sum_checks = {"sum_slack_rule", "sum_ball_growth"};
  const auto& names = spec.variant() == Variant::kMax ? max_checks : sum_checks;

  if (equilibrium.verdict != Verdict::kStable) {
    for (const auto& name : names) {
      out.checks.push_back(skipped(
          name, "equilibrium verdict is " + std::string(to_string(equilibrium.verdict))));
    }
  } else if (spec.variant() == Variant::kMax) {
    Preconditions pre;
    if (auto why = prepare(spec, profile, Variant::kMax, pre)) {
      for (const auto& name : names) out.checks.push_back(skipped(name, *why));
    } else {
      try {
        const std::int64_t gamma = domination_of_power(pre.graph, spec.bound(0), budget);
        out.gamma = gamma;
        out.checks.push_back(gamma_check(pre, gamma));
        out.checks.push_back(verify_delta_bound(spec, profile));
        out.checks.push_back(ball_check(pre, gamma));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kResourceLimit) throw;
        out.checks.push_back(skipped("gamma_bound", "domination number: resource limit"));
        out.checks.push_back(verify_delta_bound(spec, profile));
        out.checks.push_back(skipped("ball_growth", "domination number: resource limit"));
      }
      out.checks.push_back(verify_self_centered_rule(spec, profile));
    }
  } else {
    out.checks.push_back(verify_sum_slack_rule(spec, profile));
    out.checks.push_back(verify_sum_ball_growth(spec, profile));
  }

  const ExpectedClaims& claims = instance.expected;
  if (claims.stable) {
    Check c;
    c.name = "claim_stable";
    c.measured = equilibrium.verdict == Verdict::kStable ? 1 : 0;
    c.bound = *claims.stable ? 1 : 0;
    if (equilibrium.verdict == Verdict::kUnknown) {
      c.verdict = CheckVerdict::kSkipped;
      c.detail = "equilibrium verdict is UNKNOWN";
    } else {
      c.verdict = *c.measured == *c.bound ? CheckVerdict::kPass : CheckVerdict::kFail;
      c.detail = "generator stability claim";
    }
    out.checks.push_back(c);
  }
  if (claims.social_cost) {
    Check c;
    c.name = "claim_social_cost";
    c.measured = out.social_cost;
    c.bound = claims.social_cost;
    c.verdict = out.social_cost == claims.social_cost ? CheckVerdict::kPass
                                                      : CheckVerdict::kFail;
    c.detail = "generator social cost claim";
    if (equilibrium.verdict == Verdict::kUnknown) {
      c.verdict = CheckVerdict::kSkipped;
      c.detail = "equilibrium verdict is UNKNOWN";
    }
    out.checks.push_back(c);
  }
  if (claims.diameter) {
    Check c;
    c.name = "claim_diameter";
    c.measured = diameter(graph);
    c.bound = *claims.diameter;
    c.verdict = c.measured == c.bound ? CheckVerdict::kPass : CheckVerdict::kFail;
    c.detail = "generator diameter claim";
    if (equilibrium.verdict == Verdict::kUnknown) {
      c.verdict = CheckVerdict::kSkipped;
      c.detail = "equilibrium verdict is UNKNOWN";
    }
    out.checks.push_back(c);
  }
  return out;
}

bool has_failures(const BoundReport& report) {
  return std::any_of(report.checks.begin(), report.checks.end(), [](const Check& c) {
    return c.verdict == CheckVerdict::kFail;
  });
}

void enforce(const BoundReport& report) {
  std::string failed;
  for (const auto& c : report.checks) {
    if (c.verdict != CheckVerdict::kFail) continue;
    if (!failed.empty()) failed += "; ";
    failed += c.name + ": " + c.detail;
  }
  if (!failed.empty()) {
    throw Error(ErrorCode::kInvariantViolation,
                instance_label(report.provenance) + " failed " + failed);
  }
}

std::string instance_label(const Provenance& provenance) {
  std::string label = provenance.family.empty() ? "instance" : provenance.family;
  if (provenance.params.empty()) return label;
  label += "(";
  bool first = true;
  for (const auto& [key, value] : provenance.params) {
    if (!first) label += " ";
    label += key + "=" + std::to_string(value);
    first = false;
  }
  return label + ")";
}

std::string report_csv(const BoundReport& report) {
  std::ostringstream out;
  auto field = [](const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  const std::string label = "\"" + instance_label(report.provenance) + "\"";
  out << "instance,check,measured,bound,verdict\n";
  out << label << ",ratio,";
  if (report.ratio) out << *report.ratio;
  out << ",";
  if (report.optimum) out << report.optimum->value;
  out << "," << (report.optimum ? to_string(report.optimum->kind) : "NONE") << "\n";
  for (const auto& c : report.checks) {
    out << label << "," << c.name << "," << field(c.measured) << "," << field(c.bound)
        << "," << to_string(c.verdict) << "\n";
  }
  return out.str();
}

}  // namespace bdncg
