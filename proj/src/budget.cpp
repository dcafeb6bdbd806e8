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

#include "bdncg/budget.hpp"

#include <string>

#include "bdncg/error.hpp"

namespace bdncg {

BudgetTracker::BudgetTracker(const SolverBudget& budget) : budget_(budget) {
  if (budget_.timeout) {
    deadline_ = std::chrono::steady_clock::now() + *budget_.timeout;
  }
}

void BudgetTracker::tick() {
  ++expansions_;
  if (expansions_ > budget_.max_expansions) {
    throw Error(ErrorCode::kResourceLimit,
                "solver exceeded " + std::to_string(budget_.max_expansions) +
                    " node expansions");
  }
  if (budget_.timeout && (expansions_ & 0xff) == 0 &&
      std::chrono::steady_clock::now() > deadline_) {
    throw Error(ErrorCode::kResourceLimit, "solver exceeded wall-clock limit");
  }
}

}  // namespace bdncg
