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

#ifndef BDNCG_IO_HPP
#define BDNCG_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "bdncg/analysis.hpp"
#include "bdncg/dynamics.hpp"
#include "bdncg/game.hpp"
#include "bdncg/instances.hpp"

namespace bdncg {

using Json = nlohmann::json;

/// Instance file layout:
///   {"variant": "max"|"sum", "n": N, "bounds": B | [B_0, ...],
///    "buys": [[...], ...], "meta": {"provenance": family,
///    "params": {...}, "expected": {...}}}
/// A single integer for "bounds" means every player has that bound.
Json instance_to_json(const Instance& instance);
Instance instance_from_json(const Json& doc);

/// Canonical text: sorted keys, sorted node lists, two-space indent and a
/// trailing newline, so save -> load -> save is byte-identical.
std::string dump_instance(const Instance& instance);

/// Throws Error(kParse) on malformed text or structure.
Instance parse_instance(std::string_view text);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);

/// A bare graph: {"n": N, "edges": [[u, v], ...]} or an instance-style
/// {"n": N, "buys": [...]}.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

Json measure_to_json(const Measure& value);
Json to_json(const BestResponse& response);
Json to_json(const EquilibriumReport& report);
Json to_json(const DeviationEvent& event);
Json to_json(const DynamicsOutcome& outcome);
Json to_json(const BoundReport& report);

/// Undirected DOT drawing; each edge carries an arrow from its buyer
/// (dir=forward), or dir=both when both endpoints paid for it.
std::string export_dot(const Instance& instance);

/// One "u v" line per edge (u < v), preceded by a "# n m" header.
std::string export_edgelist(const Instance& instance);

}  // namespace bdncg

#endif  // BDNCG_IO_HPP
