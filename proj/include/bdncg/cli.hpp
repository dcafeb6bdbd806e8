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

#ifndef BDNCG_CLI_HPP
#define BDNCG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace bdncg {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // UNSTABLE, or dynamics CYCLE/LIMIT
inline constexpr int kExitUsage = 2;     // parse failure or bad parameters
inline constexpr int kExitResource = 3;  // resource limit or UNKNOWN verdict
inline constexpr int kExitBound = 4;     // a structural check failed

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bdncg

#endif  // BDNCG_CLI_HPP
