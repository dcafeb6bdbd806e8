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

#include "bdncg/error.hpp"

namespace bdncg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kInfeasible: return "INFEASIBLE";
    case ErrorCode::kResourceLimit: return "RESOURCE_LIMIT";
    case ErrorCode::kNotPrime: return "NOT_PRIME";
    case ErrorCode::kGadgetMismatch: return "GADGET_MISMATCH";
    case ErrorCode::kNonuniform: return "NONUNIFORM";
    case ErrorCode::kParse: return "PARSE_ERROR";
    case ErrorCode::kInvariantViolation: return "INVARIANT_VIOLATION";
  }
  return "UNKNOWN";
}

}  // namespace bdncg
