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

#include "bdncg/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "bdncg/error.hpp"

namespace bdncg {

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorCode::kParse, message);
}

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    parse_fail(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

std::int64_t as_int(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) parse_fail(what + " must be an integer");
  return value.get<std::int64_t>();
}

std::vector<std::vector<Node>> parse_buys(const Json& buys, int n) {
  if (!buys.is_array() || static_cast<int>(buys.size()) != n) {
    parse_fail("'buys' must be an array of length n");
  }
  std::vector<std::vector<Node>> out(n);
  for (int v = 0; v < n; ++v) {
    if (!buys[v].is_array()) parse_fail("buys[" + std::to_string(v) + "] must be an array");
    for (const auto& u : buys[v]) {
      out[v].push_back(static_cast<Node>(as_int(u, "node id")));
    }
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Json measure_to_json(const Measure& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json instance_to_json(const Instance& instance) {
  const GameSpec& spec = instance.spec;
  Json doc;
  doc["variant"] = std::string(to_string(spec.variant()));
  doc["n"] = spec.num_players();
  if (spec.is_uniform() && spec.num_players() > 0) {
    doc["bounds"] = spec.bound(0);
  } else {
    doc["bounds"] = Json(std::vector<std::int64_t>(spec.bounds().begin(), spec.bounds().end()));
  }
  doc["buys"] = instance.profile.all_buys();
  Json meta;
  meta["provenance"] = instance.provenance.family;
  meta["params"] = Json::object();
  for (const auto& [key, value] : instance.provenance.params) meta["params"][key] = value;
  Json expected = Json::object();
  const ExpectedClaims& claims = instance.expected;
  if (claims.stable) expected["stable"] = *claims.stable;
  if (claims.social_cost) expected["social_cost"] = *claims.social_cost;
  if (claims.diameter) expected["diameter"] = *claims.diameter;
  if (claims.optimum) expected["optimum"] = *claims.optimum;
  meta["expected"] = expected;
  doc["meta"] = meta;
  return doc;
}

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) parse_fail("instance must be a JSON object");
  const Json& variant_field = field(doc, "variant");
  if (!variant_field.is_string()) parse_fail("'variant' must be a string");
  Variant variant;
  try {
    variant = parse_variant(variant_field.get<std::string>());
  } catch (const Error& e) {
    parse_fail(e.what());
  }
  const std::int64_t n = as_int(field(doc, "n"), "'n'");
  if (n < 0) parse_fail("'n' must be non-negative");

  const Json& bounds_field = field(doc, "bounds");
  std::vector<std::int64_t> bounds;
  if (bounds_field.is_number_integer()) {
    bounds.assign(n, bounds_field.get<std::int64_t>());
  } else if (bounds_field.is_array()) {
    if (static_cast<std::int64_t>(bounds_field.size()) != n) {
      parse_fail("'bounds' must have length n");
    }
    for (const auto& b : bounds_field) bounds.push_back(as_int(b, "bound"));
  } else {
    parse_fail("'bounds' must be an integer or an array");
  }

  auto buys = parse_buys(field(doc, "buys"), static_cast<int>(n));
  Instance out{GameSpec(variant, std::move(bounds)), StrategyProfile(std::move(buys)), {}, {}};

  if (doc.contains("meta")) {
    const Json& meta = doc.at("meta");
    if (!meta.is_object()) parse_fail("'meta' must be an object");
    if (meta.contains("provenance")) {
      if (!meta.at("provenance").is_string()) parse_fail("'provenance' must be a string");
      out.provenance.family = meta.at("provenance").get<std::string>();
    }
    if (meta.contains("params")) {
      if (!meta.at("params").is_object()) parse_fail("'params' must be an object");
      for (const auto& [key, value] : meta.at("params").items()) {
        out.provenance.params[key] = as_int(value, "param '" + key + "'");
      }
    }
    if (meta.contains("expected")) {
      const Json& expected = meta.at("expected");
      if (!expected.is_object()) parse_fail("'expected' must be an object");
      if (expected.contains("stable")) {
        if (!expected.at("stable").is_boolean()) parse_fail("'stable' must be boolean");
        out.expected.stable = expected.at("stable").get<bool>();
      }
      if (expected.contains("social_cost")) {
        out.expected.social_cost = as_int(expected.at("social_cost"), "'social_cost'");
      }
      if (expected.contains("diameter")) {
        out.expected.diameter =
            static_cast<int>(as_int(expected.at("diameter"), "'diameter'"));
      }
      if (expected.contains("optimum")) {
        out.expected.optimum = as_int(expected.at("optimum"), "'optimum'");
      }
    }
  }
  return out;
}

std::string dump_instance(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

Instance parse_instance(std::string_view text) {
  return instance_from_json(parse_text(text));
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_file(path));
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
  out << dump_instance(instance);
}

Graph parse_graph(std::string_view text) {
  const Json doc = parse_text(text);
  const std::int64_t n = as_int(field(doc, "n"), "'n'");
  if (n < 0) parse_fail("'n' must be non-negative");
  if (doc.contains("edges")) {
    std::vector<Edge> edges;
    const Json& list = doc.at("edges");
    if (!list.is_array()) parse_fail("'edges' must be an array");
    for (const auto& e : list) {
      if (!e.is_array() || e.size() != 2) parse_fail("each edge must be a pair");
      edges.emplace_back(static_cast<Node>(as_int(e[0], "node id")),
                         static_cast<Node>(as_int(e[1], "node id")));
    }
    return Graph(static_cast<int>(n), edges);
  }
  return build_graph(StrategyProfile(parse_buys(field(doc, "buys"), static_cast<int>(n))));
}

Graph load_graph(const std::filesystem::path& path) {
  return parse_graph(read_file(path));
}

Json to_json(const BestResponse& response) {
  Json doc;
  doc["player"] = response.player;
  doc["strategy"] = response.strategy;
  doc["cost"] = measure_to_json(response.cost);
  doc["status"] = std::string(to_string(response.status));
  return doc;
}

Json to_json(const EquilibriumReport& report) {
  Json doc;
  doc["verdict"] = std::string(to_string(report.verdict));
  doc["reason"] = report.reason;
  doc["social_cost"] = measure_to_json(report.social_cost);
  doc["total_purchases"] = report.total_purchases;
  doc["num_edges"] = report.num_edges;
  doc["witness"] = report.witness ? Json(*report.witness) : Json(nullptr);
  Json players = Json::array();
  for (const auto& record : report.players) {
    Json p;
    p["player"] = record.player;
    p["current_cost"] = measure_to_json(record.current_cost);
    p["best_cost"] = measure_to_json(record.best_cost);
    p["status"] = std::string(to_string(record.status));
    p["improving_deviation"] =
        record.improving_deviation ? Json(*record.improving_deviation) : Json(nullptr);
    players.push_back(p);
  }
  doc["players"] = players;
  return doc;
}

Json to_json(const DeviationEvent& event) {
  Json doc;
  doc["round"] = event.round;
  doc["step"] = event.step;
  doc["player"] = event.player;
  doc["old_strategy"] = event.old_strategy;
  doc["new_strategy"] = event.new_strategy;
  doc["old_cost"] = measure_to_json(event.old_cost);
  doc["new_cost"] = measure_to_json(event.new_cost);
  return doc;
}

Json to_json(const DynamicsOutcome& outcome) {
  Json doc;
  doc["outcome"] = std::string(to_string(outcome.kind));
  doc["rounds"] = outcome.rounds;
  doc["deviations"] = outcome.deviations;
  doc["buys"] = outcome.profile.all_buys();
  if (outcome.cycle) {
    std::ostringstream hex;
    hex << std::hex << outcome.cycle->state_hash;
    doc["cycle"] = {{"state_hash", hex.str()},
                    {"first_step", outcome.cycle->first_step},
                    {"repeat_step", outcome.cycle->repeat_step}};
  } else {
    doc["cycle"] = nullptr;
  }
  return doc;
}

Json to_json(const BoundReport& report) {
  Json doc;
  doc["instance"] = instance_label(report.provenance);
  doc["n"] = report.num_nodes;
  doc["verdict"] = std::string(to_string(report.verdict));
  doc["social_cost"] = measure_to_json(report.social_cost);
  if (report.optimum) {
    doc["optimum"] = {{"value", report.optimum->value},
                      {"kind", std::string(to_string(report.optimum->kind))}};
  } else {
    doc["optimum"] = nullptr;
  }
  doc["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
  Json measured;
  measured["gamma"] = measure_to_json(report.gamma);
  measured["min_degree"] = report.min_degree ? Json(*report.min_degree) : Json(nullptr);
  measured["ball_minima"] = report.ball_minima;
  measured["self_centered"] =
      report.self_centered ? Json(*report.self_centered) : Json(nullptr);
  measured["min_broadcast"] = measure_to_json(report.min_broadcast);
  doc["measured"] = measured;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"measured", measure_to_json(c.measured)},
                      {"bound", measure_to_json(c.bound)},
                      {"verdict", std::string(to_string(c.verdict))},
                      {"detail", c.detail}});
  }
  doc["checks"] = checks;
  return doc;
}

std::string export_dot(const Instance& instance) {
  std::map<Edge, int> owners;  // key (u < v) -> 1 u buys, 2 v buys, 3 both
  const StrategyProfile& profile = instance.profile;
  for (Node v = 0; v < profile.num_players(); ++v) {
    for (Node u : profile.buys(v)) {
      const Edge key = v < u ? Edge{v, u} : Edge{u, v};
      owners[key] |= v < u ? 1 : 2;
    }
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Node v = 0; v < profile.num_players(); ++v) out << "  " << v << ";\n";
  for (const auto& [edge, mask] : owners) {
    if (mask == 3) {
      out << "  " << edge.first << " -- " << edge.second << " [dir=both];\n";
    } else if (mask == 1) {
      out << "  " << edge.first << " -- " << edge.second << " [dir=forward];\n";
    } else {
      out << "  " << edge.second << " -- " << edge.first << " [dir=forward];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string export_edgelist(const Instance& instance) {
  const Graph graph = build_graph(instance.profile);
  std::ostringstream out;
  out << "# " << graph.num_nodes() << " " << graph.num_edges() << "\n";
  for (const auto& [u, v] : graph.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace bdncg
