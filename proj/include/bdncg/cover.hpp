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

#ifndef BDNCG_COVER_HPP
#define BDNCG_COVER_HPP

#include <span>
#include <vector>

#include "bdncg/budget.hpp"
#include "bdncg/graph.hpp"

namespace bdncg {

/// Exact minimum-cardinality set cover.
///
/// Candidates are the indices of `coverage`; coverage[c] lists the element
/// ids candidate c covers (ids outside `universe` are ignored). Returns the
/// sorted candidate ids of a minimum cover; among all minimum covers the
/// lexicographically smallest sorted sequence is returned.
///
/// Branch and bound: a greedy incumbent caps the search, the size is found
/// by iterative deepening over cover decisions that branch on the element
/// with the fewest remaining candidates (forced candidates are taken first),
/// and a second pass fixes the lexicographically smallest cover of that size.
///
/// Throws Error(kInfeasible) if an element of the universe is covered by no
/// candidate, Error(kResourceLimit) if the budget runs out.
std::vector<int> min_set_cover(std::span<const int> universe,
                               std::span<const std::vector<int>> coverage,
                               const SolverBudget& budget = {});

/// Greedy cover (largest new coverage first, lowest id on ties).
std::vector<int> greedy_set_cover(std::span<const int> universe,
                                  std::span<const std::vector<int>> coverage);

/// Closed neighbourhood N[v] of every node.
std::vector<std::vector<int>> closed_neighborhoods(const Graph& graph);

std::vector<Node> min_dominating_set(const Graph& graph,
                                     const SolverBudget& budget = {});
std::vector<Node> greedy_dominating_set(const Graph& graph);

bool is_dominating_set(const Graph& graph, std::span<const Node> nodes);

}  // namespace bdncg

#endif  // BDNCG_COVER_HPP
