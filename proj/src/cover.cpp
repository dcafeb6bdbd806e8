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

#include "bdncg/cover.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>

#include <boost/dynamic_bitset.hpp>

#include "bdncg/error.hpp"

namespace bdncg {

namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;

// Cover instance over dense element indices 0..E-1 and candidates 0..M-1.
class CoverSearch {
 public:
  CoverSearch(std::vector<Bits> covers, int num_elements, BudgetTracker& tracker)
      : covers_(std::move(covers)), tracker_(tracker) {
    const std::size_t m = covers_.size();
    by_element_.assign(num_elements, Bits(m));
    for (std::size_t c = 0; c < m; ++c) {
      for (auto e = covers_[c].find_first(); e != Bits::npos;
           e = covers_[c].find_next(e)) {
        by_element_[e].set(c);
      }
    }
  }

  std::size_t num_candidates() const { return covers_.size(); }
  const Bits& cover(std::size_t c) const { return covers_[c]; }

  // Is there a cover of `uncovered` using at most k candidates of `allowed`?
  bool exists(const Bits& uncovered, Bits allowed, int k) {
    tracker_.tick();
    if (uncovered.none()) return true;
    if (k <= 0) return false;

    const std::size_t need = uncovered.count();
    std::vector<std::size_t> gains(covers_.size(), 0);
    std::vector<std::size_t> positive;
    for (auto c = allowed.find_first(); c != Bits::npos;
         c = allowed.find_next(c)) {
      gains[c] = (covers_[c] & uncovered).count();
      if (gains[c] == 0) {
        allowed.reset(c);
      } else {
        positive.push_back(gains[c]);
      }
    }
    if (positive.empty()) return false;
    const std::size_t take = std::min<std::size_t>(k, positive.size());
    std::partial_sort(positive.begin(), positive.begin() + take, positive.end(),
                      std::greater<>());
    if (std::accumulate(positive.begin(), positive.begin() + take,
                        std::size_t{0}) < need) {
      return false;
    }

    // Branch on the most constrained element; a single option is forced.
    std::size_t branch_element = Bits::npos;
    std::size_t fewest = SIZE_MAX;
    for (auto e = uncovered.find_first(); e != Bits::npos;
         e = uncovered.find_next(e)) {
      std::size_t options = (by_element_[e] & allowed).count();
      if (options == 0) return false;
      if (options < fewest) {
        fewest = options;
        branch_element = e;
        if (options == 1) break;
      }
    }

    Bits options = by_element_[branch_element] & allowed;
    std::vector<std::size_t> order;
    for (auto c = options.find_first(); c != Bits::npos;
         c = options.find_next(c)) {
      order.push_back(c);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return gains[a] > gains[b];
                     });
    for (std::size_t c : order) {
      if (exists(uncovered - covers_[c], allowed, k - 1)) return true;
      // Every cover containing c was explored in the branch above.
      allowed.reset(c);
    }
    return false;
  }

 private:
  std::vector<Bits> covers_;
  std::vector<Bits> by_element_;
  BudgetTracker& tracker_;
};

struct DenseInstance {
  std::vector<int> elements;  // sorted unique element ids
  std::vector<Bits> covers;   // per candidate, over dense element indices
};

DenseInstance densify(std::span<const int> universe,
                      std::span<const std::vector<int>> coverage) {
  DenseInstance out;
  out.elements.assign(universe.begin(), universe.end());
  std::sort(out.elements.begin(), out.elements.end());
  out.elements.erase(std::unique(out.elements.begin(), out.elements.end()),
                     out.elements.end());
  const std::size_t num_elements = out.elements.size();
  out.covers.assign(coverage.size(), Bits(num_elements));
  for (std::size_t c = 0; c < coverage.size(); ++c) {
    for (int id : coverage[c]) {
      auto it = std::lower_bound(out.elements.begin(), out.elements.end(), id);
      if (it != out.elements.end() && *it == id) {
        out.covers[c].set(static_cast<std::size_t>(it - out.elements.begin()));
      }
    }
  }
  Bits reachable(num_elements);
  for (const auto& cover : out.covers) reachable |= cover;
  if (!reachable.all()) {
    std::size_t missing = (~reachable).find_first();
    throw Error(ErrorCode::kInfeasible,
                "element " + std::to_string(out.elements[missing]) +
                    " is covered by no candidate");
  }
  return out;
}

std::vector<int> greedy_dense(const DenseInstance& inst) {
  Bits uncovered(inst.elements.size());
  uncovered.set();
  std::vector<int> chosen;
  while (uncovered.any()) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t c = 0; c < inst.covers.size(); ++c) {
      std::size_t gain = (inst.covers[c] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    chosen.push_back(static_cast<int>(best));
    uncovered -= inst.covers[best];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

std::vector<int> greedy_set_cover(std::span<const int> universe,
                                  std::span<const std::vector<int>> coverage) {
  return greedy_dense(densify(universe, coverage));
}

std::vector<int> min_set_cover(std::span<const int> universe,
                               std::span<const std::vector<int>> coverage,
                               const SolverBudget& budget) {
  DenseInstance inst = densify(universe, coverage);
  if (inst.elements.empty()) return {};

  const int incumbent = static_cast<int>(greedy_dense(inst).size());
  const std::size_t m = inst.covers.size();
  BudgetTracker tracker(budget);
  CoverSearch search(std::move(inst.covers), static_cast<int>(inst.elements.size()),
                     tracker);

  Bits all_elements(inst.elements.size());
  all_elements.set();
  Bits all_candidates(m);
  all_candidates.set();

  int optimum = incumbent;
  for (int k = 1; k < incumbent; ++k) {
    if (search.exists(all_elements, all_candidates, k)) {
      optimum = k;
      break;
    }
  }

  // Fix the lexicographically smallest cover of the optimal size one
  // position at a time.
  std::vector<int> chosen;
  Bits uncovered = all_elements;
  Bits later = all_candidates;
  for (int pos = 0; pos < optimum; ++pos) {
    bool placed = false;
    for (auto c = later.find_first(); c != Bits::npos; c = later.find_next(c)) {
      later.reset(c);
      if (!search.cover(c).intersects(uncovered)) continue;
      Bits rest = uncovered - search.cover(c);
      if (search.exists(rest, later, optimum - pos - 1)) {
        chosen.push_back(static_cast<int>(c));
        uncovered = std::move(rest);
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error(ErrorCode::kInvariantViolation,
                  "set cover lexicographic pass lost feasibility");
    }
  }
  return chosen;
}

std::vector<std::vector<int>> closed_neighborhoods(const Graph& graph) {
  std::vector<std::vector<int>> out(graph.num_nodes());
  for (Node v = 0; v < graph.num_nodes(); ++v) {
    auto nb = graph.neighbors(v);
    out[v].assign(nb.begin(), nb.end());
    out[v].insert(std::lower_bound(out[v].begin(), out[v].end(), v), v);
  }
  return out;
}

std::vector<Node> min_dominating_set(const Graph& graph,
                                     const SolverBudget& budget) {
  std::vector<int> universe(graph.num_nodes());
  std::iota(universe.begin(), universe.end(), 0);
  auto coverage = closed_neighborhoods(graph);
  return min_set_cover(universe, coverage, budget);
}

std::vector<Node> greedy_dominating_set(const Graph& graph) {
  std::vector<int> universe(graph.num_nodes());
  std::iota(universe.begin(), universe.end(), 0);
  auto coverage = closed_neighborhoods(graph);
  return greedy_set_cover(universe, coverage);
}

bool is_dominating_set(const Graph& graph, std::span<const Node> nodes) {
  std::vector<bool> covered(graph.num_nodes(), false);
  for (Node v : nodes) {
    covered.at(v) = true;
    for (Node u : graph.neighbors(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace bdncg
