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
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "bdncg/cover.hpp"
#include "bdncg/error.hpp"
#include "bdncg/game.hpp"

namespace bdncg {

namespace {

void check_player(const GameSpec& spec, const StrategyProfile& profile, Node v) {
  if (spec.num_players() != profile.num_players()) {
    throw Error(ErrorCode::kInvalidArgument, "spec/profile size mismatch");
  }
  if (v < 0 || v >= profile.num_players()) {
    throw Error(ErrorCode::kInvalidArgument,
                "player " + std::to_string(v) + " out of range");
  }
}

// Substitutes the strategy and confirms the BFS ground truth agrees with
// the claimed cost.
void verify_deviation(const GameSpec& spec, const StrategyProfile& profile,
                      const BestResponse& br) {
  if (!br.cost) return;
  auto deviated = profile.with_strategy(br.player, br.strategy);
  Measure actual = player_cost(spec, deviated, br.player);
  if (actual != br.cost) {
    throw Error(ErrorCode::kInvariantViolation,
                "best response of player " + std::to_string(br.player) +
                    " failed BFS re-verification");
  }
}

// Distances from v after buying a set of candidates, as one vector per
// candidate: 1 + d(x, u) in G(S_{-v}) - v. kFar marks "not reachable";
// it only ever appears in comparisons, never in sums.
constexpr int kFar = std::numeric_limits<int>::max();

class SumDeviationSearch {
 public:
  SumDeviationSearch(const GameSpec& spec, const StrategyProfile& profile, Node v,
                     BudgetTracker& tracker)
      : v_(v), bound_(spec.bound(v)), tracker_(tracker) {
    const StrategyProfile dropped = drop_player(profile, v);
    const Graph g = build_graph(dropped);
    n_ = g.num_nodes();
    auto base = bfs(g, v);
    root_.resize(n_);
    for (Node u = 0; u < n_; ++u) root_[u] = base.reachable(u) ? base[u] : kFar;

    for (Node x = 0; x < n_; ++x) {
      if (x == v) continue;
      auto d = bfs(g, x, BfsLimits{.max_depth = std::nullopt, .excluded = v});
      std::vector<int> via(n_, kFar);
      bool helps = false;
      for (Node u = 0; u < n_; ++u) {
        if (u == v || !d.reachable(u)) continue;
        via[u] = d[u] + 1;
        if (via[u] < root_[u]) helps = true;
      }
      // A candidate that improves nothing now improves nothing later.
      if (helps) {
        candidates_.push_back(x);
        via_.push_back(std::move(via));
      }
    }
    const std::size_t m = candidates_.size();
    suffix_best_.assign(m + 1, std::vector<int>(n_, kFar));
    for (std::size_t j = m; j-- > 0;) {
      for (Node u = 0; u < n_; ++u) {
        suffix_best_[j][u] = std::min(suffix_best_[j + 1][u], via_[j][u]);
      }
    }
  }

  bool feasible(const std::vector<int>& dist) const {
    std::int64_t total = 0;
    for (int d : dist) {
      if (d == kFar) return false;
      total += d;
    }
    return total <= bound_;
  }

  // Greedy construction followed by redundancy removal and 2-for-1 swaps.
  std::vector<std::size_t> incumbent() const {
    std::vector<int> cur = root_;
    std::vector<std::size_t> chosen;
    while (!feasible(cur)) {
      std::size_t best = candidates_.size();
      std::pair<int, std::int64_t> best_gain{0, 0};
      for (std::size_t j = 0; j < candidates_.size(); ++j) {
        std::pair<int, std::int64_t> gain{0, 0};
        for (Node u = 0; u < n_; ++u) {
          if (via_[j][u] >= cur[u]) continue;
          if (cur[u] == kFar) {
            ++gain.first;
          } else {
            gain.second += cur[u] - via_[j][u];
          }
        }
        if (gain > best_gain) {
          best_gain = gain;
          best = j;
        }
      }
      if (best == candidates_.size()) break;
      chosen.push_back(best);
      apply(cur, best);
    }
    if (!feasible(cur)) return {};

    auto evaluate = [&](const std::vector<std::size_t>& set) {
      std::vector<int> d = root_;
      for (std::size_t j : set) apply(d, j);
      return feasible(d);
    };
    for (std::size_t i = chosen.size(); i-- > 0;) {
      auto trial = chosen;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (evaluate(trial)) chosen = std::move(trial);
    }
    bool improved = chosen.size() >= 2 && chosen.size() <= 64;
    while (improved && chosen.size() >= 2) {
      improved = false;
      for (std::size_t a = 0; a < chosen.size() && !improved; ++a) {
        for (std::size_t b = a + 1; b < chosen.size() && !improved; ++b) {
          for (std::size_t y = 0; y < candidates_.size() && !improved; ++y) {
            std::vector<std::size_t> trial;
            for (std::size_t i = 0; i < chosen.size(); ++i) {
              if (i != a && i != b) trial.push_back(chosen[i]);
            }
            if (std::find(trial.begin(), trial.end(), y) != trial.end()) continue;
            trial.push_back(y);
            if (evaluate(trial)) {
              chosen = std::move(trial);
              improved = true;
            }
          }
        }
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  // Lexicographically first feasible set of at most `size` candidates.
  std::optional<std::vector<std::size_t>> search(int size) {
    std::vector<std::size_t> chosen;
    if (dfs(0, size, root_, chosen)) return chosen;
    return std::nullopt;
  }

  Node candidate(std::size_t j) const { return candidates_[j]; }
  std::size_t num_candidates() const { return candidates_.size(); }

 private:
  void apply(std::vector<int>& dist, std::size_t j) const {
    for (Node u = 0; u < n_; ++u) dist[u] = std::min(dist[u], via_[j][u]);
  }

  bool dfs(std::size_t start, int remaining, const std::vector<int>& cur,
           std::vector<std::size_t>& chosen) {
    tracker_.tick();
    if (feasible(cur)) return true;
    if (remaining == 0) return false;

    // Each node can at best reach its closest remaining candidate.
    std::int64_t optimistic = 0;
    for (Node u = 0; u < n_; ++u) {
      int best = std::min(cur[u], suffix_best_[start][u]);
      if (best == kFar) return false;
      optimistic += best;
    }
    if (optimistic > bound_) return false;

    // Gains are submodular, so the top `remaining` individual gains bound
    // the joint gain.
    if (std::none_of(cur.begin(), cur.end(), [](int d) { return d == kFar; })) {
      std::int64_t total = std::accumulate(cur.begin(), cur.end(), std::int64_t{0});
      std::vector<std::int64_t> gains;
      for (std::size_t j = start; j < candidates_.size(); ++j) {
        std::int64_t gain = 0;
        for (Node u = 0; u < n_; ++u) {
          if (via_[j][u] < cur[u]) gain += cur[u] - via_[j][u];
        }
        if (gain > 0) gains.push_back(gain);
      }
      const std::size_t take = std::min<std::size_t>(remaining, gains.size());
      std::partial_sort(gains.begin(), gains.begin() + take, gains.end(),
                        std::greater<>());
      std::int64_t best_gain =
          std::accumulate(gains.begin(), gains.begin() + take, std::int64_t{0});
      if (total - best_gain > bound_) return false;
    }

    std::vector<int> next(n_);
    for (std::size_t j = start; j < candidates_.size(); ++j) {
      bool changed = false;
      for (Node u = 0; u < n_; ++u) {
        next[u] = std::min(cur[u], via_[j][u]);
        changed = changed || next[u] != cur[u];
      }
      // A minimum strategy never contains a purchase that changes nothing.
      if (!changed) continue;
      chosen.push_back(j);
      if (dfs(j + 1, remaining - 1, next, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  Node v_;
  int n_ = 0;
  std::int64_t bound_;
  BudgetTracker& tracker_;
  std::vector<int> root_;
  std::vector<Node> candidates_;
  std::vector<std::vector<int>> via_;
  std::vector<std::vector<int>> suffix_best_;
};

}  // namespace

MaxCoverFormulation max_cover_formulation(const GameSpec& spec,
                                          const StrategyProfile& profile, Node v) {
  check_player(spec, profile, v);
  const std::int64_t reach = spec.bound(v);
  const Graph g = build_graph(drop_player(profile, v));
  const int n = g.num_nodes();
  auto base = bfs(g, v);

  MaxCoverFormulation out;
  for (Node u = 0; u < n; ++u) {
    if (!base.reachable(u) || base[u] > reach) out.universe.push_back(u);
  }
  out.coverage.resize(n);
  if (out.universe.empty()) return out;
  const int hops = static_cast<int>(std::min<std::int64_t>(reach - 1, n));
  for (Node x = 0; x < n; ++x) {
    if (x == v) continue;
    auto d = bfs(g, x, BfsLimits{.max_depth = hops, .excluded = v});
    for (Node u : out.universe) {
      if (d.reachable(u)) out.coverage[x].push_back(u);
    }
  }
  return out;
}

BestResponse best_response_max(const GameSpec& spec, const StrategyProfile& profile,
                               Node v, const SolverBudget& budget) {
  check_player(spec, profile, v);
  if (spec.variant() != Variant::kMax) {
    throw Error(ErrorCode::kInvalidArgument, "best_response_max needs a MAX game");
  }
  auto formulation = max_cover_formulation(spec, profile, v);
  BestResponse br;
  br.player = v;
  // Buying every edge puts all nodes at distance 1 <= R_v, so the cover
  // instance is always feasible.
  br.strategy = min_set_cover(formulation.universe, formulation.coverage, budget);
  br.cost = static_cast<std::int64_t>(br.strategy.size());
  br.status = BestResponseStatus::kExact;
  verify_deviation(spec, profile, br);
  return br;
}

BestResponse best_response_sum(const GameSpec& spec, const StrategyProfile& profile,
                               Node v, const SolverBudget& budget) {
  check_player(spec, profile, v);
  if (spec.variant() != Variant::kSum) {
    throw Error(ErrorCode::kInvalidArgument, "best_response_sum needs a SUM game");
  }
  BestResponse br;
  br.player = v;
  if (spec.bound(v) < profile.num_players() - 1) {
    br.status = BestResponseStatus::kInfeasible;
    br.cost = std::nullopt;
    return br;
  }

  BudgetTracker tracker(budget);
  SumDeviationSearch search(spec, profile, v, tracker);
  auto to_nodes = [&](const std::vector<std::size_t>& picks) {
    std::vector<Node> nodes;
    for (std::size_t j : picks) nodes.push_back(search.candidate(j));
    std::sort(nodes.begin(), nodes.end());
    return nodes;
  };

  const auto incumbent = search.incumbent();
  const int upper = static_cast<int>(incumbent.size());
  try {
    for (int k = 0; k <= upper; ++k) {
      if (auto found = search.search(k)) {
        br.strategy = to_nodes(*found);
        br.cost = static_cast<std::int64_t>(br.strategy.size());
        br.status = BestResponseStatus::kExact;
        verify_deviation(spec, profile, br);
        return br;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kResourceLimit) throw;
    br.strategy = to_nodes(incumbent);
    br.cost = static_cast<std::int64_t>(br.strategy.size());
    br.status = BestResponseStatus::kHeuristicUpperBound;
    verify_deviation(spec, profile, br);
    return br;
  }
  throw Error(ErrorCode::kInvariantViolation,
              "SUM best response search missed the incumbent of player " +
                  std::to_string(v));
}

BestResponse best_response(const GameSpec& spec, const StrategyProfile& profile,
                           Node v, const SolverBudget& budget) {
  return spec.variant() == Variant::kMax
             ? best_response_max(spec, profile, v, budget)
             : best_response_sum(spec, profile, v, budget);
}

}  // namespace bdncg
