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

#include "bdncg/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "bdncg/analysis.hpp"
#include "bdncg/dynamics.hpp"
#include "bdncg/error.hpp"
#include "bdncg/instances.hpp"
#include "bdncg/io.hpp"

namespace bdncg {

namespace {

struct GlobalOptions {
  std::optional<std::uint64_t> budget;
  std::optional<double> timeout_seconds;
  int jobs = 1;
};

struct GenOptions {
  std::string family;
  std::string output;
  std::optional<int> n, k, h, p, pendants, player;
  std::optional<std::int64_t> radius, broadcast, beta;
  std::optional<double> average;
  std::string owner = "leaves";
  std::string variant;
  std::string graph_file;
  std::string builtin;
};

void bad(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

template <typename T>
T need(const std::optional<T>& value, const std::string& flag, const std::string& family) {
  if (!value) bad(family + " requires " + flag);
  return *value;
}

SolverBudget make_budget(const GlobalOptions& global) {
  SolverBudget budget;
  if (const char* env = std::getenv("BDNCG_BUDGET"); env != nullptr && *env != '\0') {
    try {
      budget.max_expansions = std::stoull(env);
    } catch (const std::exception&) {
      bad("BDNCG_BUDGET must be a positive integer");
    }
  }
  if (global.budget) budget.max_expansions = *global.budget;
  if (global.timeout_seconds) {
    if (*global.timeout_seconds <= 0) bad("--timeout must be positive");
    budget.timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(std::llround(*global.timeout_seconds * 1000.0)));
  }
  return budget;
}

Graph builtin_graph(const std::string& spec) {
  if (spec == "petersen") return petersen();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) bad("unknown builtin graph '" + spec + "'");
  const std::string name = spec.substr(0, colon);
  int size = 0;
  try {
    size = std::stoi(spec.substr(colon + 1));
  } catch (const std::exception&) {
    bad("builtin graph size must be an integer");
  }
  if (name == "cycle") return cycle_graph(size);
  if (name == "path") return path_graph(size);
  if (name == "complete") return complete_graph(size);
  bad("unknown builtin graph '" + name + "'");
  return {};
}

Graph gen_graph(const GenOptions& o) {
  if (!o.graph_file.empty() && !o.builtin.empty()) bad("use either --graph or --builtin");
  if (!o.graph_file.empty()) return load_graph(o.graph_file);
  if (!o.builtin.empty()) return builtin_graph(o.builtin);
  bad(o.family + " requires --graph or --builtin");
  return {};
}

// SUM bound from --B, or from --D as round(D * n); echoed on `err`.
std::optional<std::int64_t> sum_bound(const GenOptions& o, int n, std::ostream& err) {
  if (o.broadcast && o.average) bad("use either --B or --D");
  if (o.broadcast) return o.broadcast;
  if (o.average) {
    const std::int64_t b = std::llround(*o.average * n);
    err << "using B=" << b << " (round(D*n) with D=" << *o.average << ", n=" << n << ")\n";
    return b;
  }
  return std::nullopt;
}

Instance generate(const GenOptions& o, std::ostream& err) {
  const std::string& f = o.family;
  if (f == "star") {
    const int n = need(o.n, "--n", f);
    const Variant variant = parse_variant(o.variant.empty() ? "max" : o.variant);
    std::int64_t bound = 0;
    if (variant == Variant::kMax) {
      bound = o.radius.value_or(2);
    } else {
      bound = sum_bound(o, n, err).value_or(2LL * n - 3);
    }
    return star(n, parse_star_owner(o.owner), variant, bound);
  }
  if (f == "complete") {
    const int n = need(o.n, "--n", f);
    const Variant variant = parse_variant(o.variant.empty() ? "max" : o.variant);
    const std::int64_t bound = variant == Variant::kMax
                                   ? o.radius.value_or(1)
                                   : sum_bound(o, n, err).value_or(n - 1);
    return complete(n, variant, bound);
  }
  if (f == "clique-pendant") {
    return nonuniform_clique_pendant(need(o.k, "--k", f),
                                     parse_variant(o.variant.empty() ? "max" : o.variant));
  }
  if (f == "path-hub") {
    return path_hub(static_cast<int>(need(o.radius, "--R", f)), need(o.h, "--h", f));
  }
  if (f == "prime-tree") return prime_tree(need(o.p, "--p", f));
  if (f == "multipartite") return multipartite_sum(need(o.n, "--n", f), need(o.k, "--k", f));
  if (f == "ring") {
    const int k = need(o.k, "--k", f);
    const int h = need(o.h, "--h", f);
    if (k < 2 || h < 1) bad("ring needs k >= 2 and h >= 1");
    return ring_family(k, h, sum_bound(o, (h + 1) * k, err));
  }
  if (f == "gadget") {
    return gadget_with_pendants(gen_graph(o), need(o.pendants, "--pendants", f),
                                static_cast<int>(need(o.radius, "--R", f)));
  }
  if (f == "reduce-domset") {
    return reduction_from_dominating_set(gen_graph(o),
                                         static_cast<int>(need(o.radius, "--R", f)));
  }
  if (f == "reduce-kmedian") {
    return reduction_from_kmedian(gen_graph(o), need(o.beta, "--beta", f));
  }
  bad("unknown family '" + f + "'");
  return {GameSpec(Variant::kMax, {}), StrategyProfile(), {}, {}};
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) bad("cannot write " + path);
  file << text;
}

std::string measure_text(const Measure& m) {
  return m ? std::to_string(*m) : std::string("UNBOUNDED");
}

std::string nodes_text(std::span<const Node> nodes) {
  std::string s = "[";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(nodes[i]);
  }
  return s + "]";
}

int verdict_exit(Verdict verdict) {
  switch (verdict) {
    case Verdict::kStable: return kExitOk;
    case Verdict::kUnstable: return kExitNegative;
    case Verdict::kUnknown: return kExitResource;
  }
  return kExitResource;
}

int cmd_check(const std::string& input, bool json, const GlobalOptions& global,
              std::ostream& out) {
  const Instance instance = load_instance(input);
  const EquilibriumReport report =
      is_equilibrium(instance.spec, instance.profile, {make_budget(global), global.jobs});
  if (json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << "verdict: " << to_string(report.verdict) << "\n";
    out << "reason: " << report.reason << "\n";
    out << "social_cost: " << measure_text(report.social_cost) << "\n";
    out << "edges: " << report.num_edges << "\n";
    for (const auto& record : report.players) {
      if (!record.improving_deviation && record.status == PlayerStatus::kExact &&
          record.current_cost) {
        continue;
      }
      out << "player " << record.player << ": cost " << measure_text(record.current_cost)
          << ", best " << measure_text(record.best_cost) << " ("
          << to_string(record.status) << ")";
      if (record.improving_deviation) {
        out << ", deviation " << nodes_text(*record.improving_deviation);
      }
      out << "\n";
    }
  }
  return verdict_exit(report.verdict);
}

int cmd_best_response(const std::string& input, int player, bool json,
                      const GlobalOptions& global, std::ostream& out) {
  const Instance instance = load_instance(input);
  if (player < 0 || player >= instance.spec.num_players()) {
    bad("player " + std::to_string(player) + " out of range");
  }
  const BestResponse br =
      best_response(instance.spec, instance.profile, player, make_budget(global));
  if (json) {
    out << to_json(br).dump(2) << "\n";
  } else {
    out << "player: " << br.player << "\n";
    out << "status: " << to_string(br.status) << "\n";
    out << "cost: " << measure_text(br.cost) << "\n";
    out << "strategy: " << nodes_text(br.strategy) << "\n";
  }
  return kExitOk;
}

int cmd_dynamics(const std::string& input, const std::string& schedule,
                 std::uint64_t seed, int max_rounds, const std::string& trace_path,
                 const std::string& output, bool json, const GlobalOptions& global,
                 std::ostream& out) {
  const Instance instance = load_instance(input);
  DynamicsOptions options;
  options.schedule = parse_schedule(schedule);
  options.seed = seed;
  options.max_rounds = max_rounds;
  options.budget = make_budget(global);
  options.record_trace = !trace_path.empty();
  const DynamicsOutcome outcome =
      best_response_dynamics(instance.spec, instance.profile, options);
  if (!trace_path.empty()) {
    std::string lines;
    for (const auto& event : outcome.trace) lines += to_json(event).dump() + "\n";
    write_text(trace_path, lines, out);
  }
  if (!output.empty()) {
    Instance final = instance;
    final.profile = outcome.profile;
    final.provenance.family = "dynamics";
    final.provenance.params = {{"seed", static_cast<std::int64_t>(seed)}};
    final.expected = {};
    save_instance(output, final);
  }
  if (json) {
    out << to_json(outcome).dump(2) << "\n";
  } else {
    out << "outcome: " << to_string(outcome.kind) << "\n";
    out << "rounds: " << outcome.rounds << "\n";
    out << "deviations: " << outcome.deviations << "\n";
    out << "social_cost: " << measure_text(social_cost(instance.spec, outcome.profile))
        << "\n";
    if (outcome.cycle) {
      out << "cycle: hash " << std::hex << outcome.cycle->state_hash << std::dec
          << " first at step " << outcome.cycle->first_step << ", again at step "
          << outcome.cycle->repeat_step << "\n";
    }
  }
  return outcome.kind == OutcomeKind::kEquilibrium ? kExitOk : kExitNegative;
}

int cmd_analyze(const std::string& input, bool json, bool csv,
                const GlobalOptions& global, std::ostream& out, std::ostream& err) {
  const Instance instance = load_instance(input);
  const SolverBudget budget = make_budget(global);
  const EquilibriumReport eq =
      is_equilibrium(instance.spec, instance.profile, {budget, global.jobs});
  const BoundReport bounds = report(instance, eq, budget);
  if (json) {
    out << to_json(bounds).dump(2) << "\n";
  } else if (csv) {
    out << report_csv(bounds);
  } else {
    out << "instance: " << instance_label(bounds.provenance) << "\n";
    out << "verdict: " << to_string(bounds.verdict) << "\n";
    out << "social_cost: " << measure_text(bounds.social_cost) << "\n";
    if (bounds.optimum) {
      out << "optimum: " << bounds.optimum->value << " ("
          << to_string(bounds.optimum->kind) << ")\n";
    }
    if (bounds.ratio) out << "ratio: " << *bounds.ratio << "\n";
    for (const auto& c : bounds.checks) {
      out << c.name << ": " << to_string(c.verdict);
      if (c.measured) out << " measured=" << *c.measured;
      if (c.bound) out << " bound=" << *c.bound;
      out << " (" << c.detail << ")\n";
    }
  }
  if (has_failures(bounds)) {
    for (const auto& c : bounds.checks) {
      if (c.verdict == CheckVerdict::kFail) err << "check failed: " << c.name << ": "
                                                << c.detail << "\n";
    }
    return kExitBound;
  }
  return kExitOk;
}

int error_exit(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kResourceLimit: return kExitResource;
    case ErrorCode::kInvariantViolation: return kExitBound;
    default: return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounded-distance network creation games"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--budget", global.budget,
                 "Solver node-expansion cap (default 10000000, or BDNCG_BUDGET)");
  app.add_option("--timeout", global.timeout_seconds, "Solver wall-clock limit in seconds");
  app.add_option("--jobs", global.jobs, "Worker threads for per-player work")
      ->check(CLI::PositiveNumber);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->set_help_flag("--help", "Print this help message and exit");
  gen_cmd->add_option("family", gen.family,
                      "star|complete|clique-pendant|path-hub|prime-tree|multipartite|"
                      "ring|gadget|reduce-domset|reduce-kmedian")
      ->required();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->add_option("--n", gen.n, "Number of nodes");
  gen_cmd->add_option("--k", gen.k, "Clique size, group slack or hub count");
  gen_cmd->add_option("--h", gen.h, "Hub or copy count");
  gen_cmd->add_option("--p", gen.p, "Prime");
  gen_cmd->add_option("--R", gen.radius, "MAX distance bound");
  gen_cmd->add_option("--B", gen.broadcast, "SUM broadcast bound");
  gen_cmd->add_option("--D", gen.average, "SUM average-distance bound (B = round(D*n))");
  gen_cmd->add_option("--beta", gen.beta, "k-median cost threshold");
  gen_cmd->add_option("--pendants", gen.pendants, "Pendant count for gadgets");
  gen_cmd->add_option("--owner", gen.owner, "Star ownership: center|leaves");
  gen_cmd->add_option("--variant", gen.variant, "max|sum");
  gen_cmd->add_option("--graph", gen.graph_file, "Graph JSON file");
  gen_cmd->add_option("--builtin", gen.builtin, "cycle:N|path:N|complete:N|petersen");

  std::string input;
  bool json = false;
  auto* check_cmd = app.add_subcommand("check", "Verify whether a profile is stable");
  check_cmd->add_option("input", input, "Instance file")->required();
  check_cmd->add_flag("--json", json, "JSON output");

  int player = -1;
  auto* br_cmd = app.add_subcommand("best-response", "Exact best response of one player");
  br_cmd->add_option("input", input, "Instance file")->required();
  br_cmd->add_option("--player", player, "Player id")->required();
  br_cmd->add_flag("--json", json, "JSON output");

  std::string schedule = "round-robin";
  std::uint64_t seed = 0;
  int max_rounds = 100;
  std::string trace_path;
  std::string output;
  auto* dyn_cmd = app.add_subcommand("dynamics", "Run best-response dynamics");
  dyn_cmd->add_option("input", input, "Instance file")->required();
  dyn_cmd->add_option("--schedule", schedule, "round-robin|random");
  dyn_cmd->add_option("--seed", seed, "Seed for the random schedule");
  dyn_cmd->add_option("--max-rounds", max_rounds, "Round limit")->check(CLI::PositiveNumber);
  dyn_cmd->add_option("--trace", trace_path, "JSON-lines deviation trace file");
  dyn_cmd->add_option("-o,--output", output, "Write the final profile as an instance");
  dyn_cmd->add_flag("--json", json, "JSON output");

  bool csv = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Ratio and structural checks");
  analyze_cmd->add_option("input", input, "Instance file")->required();
  analyze_cmd->add_flag("--json", json, "JSON output");
  analyze_cmd->add_flag("--csv", csv, "CSV output");

  std::string format = "dot";
  auto* export_cmd = app.add_subcommand("export", "Export the graph");
  export_cmd->add_option("input", input, "Instance file")->required();
  export_cmd->add_option("--format", format, "dot|edgelist")
      ->check(CLI::IsMember({"dot", "edgelist"}));
  export_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("bdncg");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen_cmd->parsed()) {
      const Instance instance = generate(gen, err);
      write_text(gen.output, dump_instance(instance), out);
      std::ostream& info = gen.output.empty() || gen.output == "-" ? err : out;
      info << "n=" << instance.spec.num_players()
           << " edges=" << build_graph(instance.profile).num_edges()
           << " purchases=" << instance.profile.total_purchases() << "\n";
      return kExitOk;
    }
    if (check_cmd->parsed()) return cmd_check(input, json, global, out);
    if (br_cmd->parsed()) return cmd_best_response(input, player, json, global, out);
    if (dyn_cmd->parsed()) {
      return cmd_dynamics(input, schedule, seed, max_rounds, trace_path, output, json,
                          global, out);
    }
    if (analyze_cmd->parsed()) return cmd_analyze(input, json, csv, global, out, err);
    if (export_cmd->parsed()) {
      const Instance instance = load_instance(input);
      write_text(output,
                 format == "dot" ? export_dot(instance) : export_edgelist(instance), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return error_exit(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bdncg
