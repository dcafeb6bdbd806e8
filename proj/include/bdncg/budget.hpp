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

#ifndef BDNCG_BUDGET_HPP
#define BDNCG_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <optional>

namespace bdncg {

inline constexpr std::uint64_t kDefaultMaxExpansions = 10'000'000;

/// Per-call resource cap for the exact solvers.
struct SolverBudget {
  std::uint64_t max_expansions = kDefaultMaxExpansions;
  std::optional<std::chrono::milliseconds> timeout;
};

/// Counts search-node expansions against a SolverBudget and throws
/// Error(kResourceLimit) once either cap is exceeded.
class BudgetTracker {
 public:
  explicit BudgetTracker(const SolverBudget& budget);

  void tick();
  std::uint64_t expansions() const noexcept { return expansions_; }

 private:
  SolverBudget budget_;
  std::uint64_t expansions_ = 0;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace bdncg

#endif  // BDNCG_BUDGET_HPP
