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


// Acceptance runner. One line per criterion: id, PASS/FAIL, runtime, detail.
// Usage: acceptance [--only N]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bdncg/analysis.hpp"
#include "bdncg/game.hpp"
#include "bdncg/instances.hpp"
#include "bdncg/io.hpp"
#include "oracles.hpp"

using namespace bdncg;

namespace {

// Pinned limits and thresholds. Ratios are compared as exact fractions.
constexpr double kLimitAc01 = 1.0;
constexpr double kLimitAc02 = 10.0;
constexpr double kLimitAc03 = 30.0;
constexpr double kLimitAc04 = 300.0;
constexpr double kLimitAc05 = 300.0;
constexpr double kLimitAc06 = 60.0;
constexpr double kLimitAc07 = 600.0;
constexpr double kLimitAc08 = 600.0;
constexpr double kLimitAc10 = 60.0;
constexpr int kRandomGraphsPerOrder = 300;
constexpr int kRandomProfiles = 250;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (detail.tellp() > 0) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

std::string str(const Measure& m) { return m ? std::to_string(*m) : "UNBOUNDED"; }

// Stable instances collected by criteria 1 to 6 for the bound-check suite.
std::vector<Instance>& stable_pool() {
  static std::vector<Instance> pool;
  return pool;
}

bool stable(const Instance& inst) {
  return is_equilibrium(inst.spec, inst.profile).verdict == Verdict::kStable;
}

bool verify_stable(Outcome& o, const Instance& inst, const std::string& label) {
  const bool ok = stable(inst);
  o.require(ok, label + " not STABLE");
  if (ok) stable_pool().push_back(inst);
  return ok;
}

std::int64_t sc(const Instance& inst) { return *social_cost(inst.spec, inst.profile); }

void ac01(Outcome& o) {
  for (int n = 4; n <= 12; ++n) {
    for (Variant variant : {Variant::kMax, Variant::kSum}) {
      const std::int64_t bound = variant == Variant::kMax ? 2 : 2 * n - 3;
      Instance inst = star(n, StarOwner::kLeaves, variant, bound);
      const std::string label =
          "star(n=" + std::to_string(n) + "," + std::string(to_string(variant)) + ")";
      if (!verify_stable(o, inst, label)) continue;
      const OptimumEstimate opt = optimum_estimate(inst.spec);
      o.require(sc(inst) == n - 1, label + " SC=" + std::to_string(sc(inst)));
      o.require(sc(inst) == opt.value, label + " ratio != 1");
    }
  }
  if (o.pass) o.detail << "n=4..12 both variants STABLE, SC=n-1, ratio 1";
}

void ac02(Outcome& o) {
  std::int64_t prev_num = 0;
  std::int64_t prev_den = 1;
  for (int k = 3; k <= 5; ++k) {
    for (Variant variant : {Variant::kMax, Variant::kSum}) {
      Instance inst = nonuniform_clique_pendant(k, variant);
      verify_stable(o, inst,
                    "clique-pendant(k=" + std::to_string(k) + "," +
                        std::string(to_string(variant)) + ")");
    }
    Instance inst = nonuniform_clique_pendant(k, Variant::kMax);
    const std::int64_t num = sc(inst);
    const std::int64_t den = inst.spec.num_players() - 1;
    o.require(num == k * (k - 1) / 2 + 4 * k, "SC mismatch at k=" + std::to_string(k));
    o.require(num * prev_den > prev_num * den, "ratio not increasing at k=" + std::to_string(k));
    o.detail << "[k=" << k << " " << num << "/" << den << "]";
    if (k == 5) o.require(num * 5 >= 7 * den, "ratio at k=5 below 1.4");
    prev_num = num;
    prev_den = den;
  }
}

void ac03(Outcome& o) {
  Instance inst = path_hub(3, 100);
  verify_stable(o, inst, "path-hub(3,100)");
  const Measure diam = diameter(build_graph(inst.profile));
  o.require(diam == 3, "diameter " + str(diam));
  const std::int64_t num = sc(inst);
  const std::int64_t den = inst.spec.num_players() - 1;
  o.require(num == 205 && den == 105, "ratio " + std::to_string(num) + "/" + std::to_string(den));
  o.require(num * 20 >= 39 * den, "ratio below 1.95");
  if (o.pass) o.detail << "SC/(n-1)=" << num << "/" << den;
}

std::int64_t table_size(const PrimeTreeLayout& layout, Node v, int p) {
  switch (layout.role(v)) {
    case PrimeTreeLayout::Role::kStarCenter: return 0;
    case PrimeTreeLayout::Role::kInner:
    case PrimeTreeLayout::Role::kStarLeaf: return p;
    case PrimeTreeLayout::Role::kTreeLeaf:
    case PrimeTreeLayout::Role::kRoot: return p + 1;
  }
  return -1;
}

void ac04(Outcome& o) {
  for (int p : {3, 5}) {
    const std::string label = "prime-tree(p=" + std::to_string(p) + ")";
    Instance inst = prime_tree(p);
    verify_stable(o, inst, label);
    const Measure diam = diameter(build_graph(inst.profile));
    o.require(diam == 2, label + " diameter " + str(diam));
    PrimeTreeLayout layout(p);
    const StrategyProfile base = layout.base_profile();
    int mismatches = 0;
    for (Node v = 0; v < inst.spec.num_players(); ++v) {
      const StrategyProfile ext = extension_profile(base, inst.profile, v);
      const auto bought = static_cast<std::int64_t>(ext.buys(v).size());
      const BestResponse br = best_response_max(inst.spec, ext, v);
      const std::int64_t want = table_size(layout, v, p);
      if (bought != want || br.cost != want) {
        if (mismatches++ == 0) {
          o.detail << (o.pass ? "" : "; ") << label << " player " << v << " buys " << bought
                   << ", best " << str(br.cost) << ", table " << want;
        }
      }
    }
    o.require(mismatches == 0, label + " " + std::to_string(mismatches) + " table mismatches");
    const std::int64_t n = inst.spec.num_players();
    const std::int64_t num = sc(inst);
    o.require(4 * num * num >= n * (n - 1) * (n - 1), label + " ratio below sqrt(n)/2");
    if (o.pass) o.detail << label << " SC=" << num << " ";
  }
}

void ac05(Outcome& o) {
  std::vector<std::string> unstable_misses;
  for (int k = 2; k <= 6; ++k) {
    for (int h = 1; h <= 4; ++h) {
      const std::string label = "(" + std::to_string(k) + "," + std::to_string(h) + ")";
      const SumFamilyCosts costs = ring_family_costs(k, h);
      Instance inst = ring_family(k, h);
      const Graph g = build_graph(inst.profile);
      for (Node v = 0; v < costs.n; ++v) {
        const std::int64_t want = v < k ? costs.lambda_bar : costs.lambda;
        o.require(broadcast_cost(g, v) == want, label + " recurrence mismatch at " +
                                                    std::to_string(v));
      }
      verify_stable(o, ring_family(k, h, costs.lambda), label + " at lambda");
      verify_stable(o, ring_family(k, h, costs.lambda_prime - 1), label + " at lambda'-1");
      Instance edge = ring_family(k, h, costs.lambda_prime);
      if (is_equilibrium(edge.spec, edge.profile).verdict != Verdict::kUnstable) {
        unstable_misses.push_back(label);
      }
    }
  }
  if (!unstable_misses.empty()) {
    std::string list;
    for (const auto& s : unstable_misses) list += s;
    o.require(false, "not UNSTABLE at lambda' for " + list);
  }
  Instance wide = ring_family(2, 50);
  const auto m = static_cast<std::int64_t>(build_graph(wide.profile).num_edges());
  const std::int64_t den = wide.spec.num_players() - 1;
  o.require(m * 10 >= 19 * den, "m/(n-1) " + std::to_string(m) + "/" + std::to_string(den));
  if (o.pass) o.detail << "m/(n-1)=" << m << "/" << den;
}

void ac06(Outcome& o) {
  struct Case { int n, k; };
  for (auto [n, k] : {Case{8, 3}, Case{12, 3}, Case{10, 4}}) {
    const std::string label =
        "multipartite(" + std::to_string(n) + "," + std::to_string(k) + ")";
    Instance inst = multipartite_sum(n, k);
    if (!verify_stable(o, inst, label)) continue;
    const OptimumEstimate opt = optimum_estimate(inst.spec);
    o.require(sc(inst) <= 2 * opt.value, label + " SC " + std::to_string(sc(inst)) +
                                             " > 2*" + std::to_string(opt.value));
    if (o.pass) o.detail << label << " " << sc(inst) << "<=2*" << opt.value << " ";
  }
}

void ac07(Outcome& o) {
  std::mt19937_64 rng(7007);
  std::vector<Graph> graphs;
  for (int n = 1; n <= 6; ++n) {
    for (auto& g : oracle::all_connected_graphs(n)) graphs.push_back(std::move(g));
  }
  const std::size_t exhaustive = graphs.size();
  for (int i = 0; i < kRandomGraphsPerOrder; ++i) {
    graphs.push_back(oracle::random_connected_graph(7, 0.1 + 0.05 * (i % 8), rng));
  }
  int dom_mismatch = 0;
  int med_mismatch = 0;
  int cases = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    const int n = g.num_nodes();
    for (int radius : {2, 3}) {
      Instance dom = reduction_from_dominating_set(g, radius);
      const BestResponse br = best_response_max(dom.spec, dom.profile, 0);
      ++cases;
      if (br.status != BestResponseStatus::kExact || br.cost != oracle::domination_number(g)) {
        ++dom_mismatch;
      }
    }
    // The k-median side runs on every graph of order up to 5 and a stride
    // through the larger ones.
    if (n <= 5 || i % 7 == 0) {
      const std::int64_t beta = static_cast<std::int64_t>(i % (2 * n + 1));
      Instance med = reduction_from_kmedian(g, beta);
      const BestResponse br = best_response_sum(med.spec, med.profile, 0);
      const auto want = oracle::kmedian_min_k(g, beta);
      ++cases;
      if (br.status != BestResponseStatus::kExact || !want || br.cost != *want) ++med_mismatch;
    }
  }
  o.require(dom_mismatch == 0, std::to_string(dom_mismatch) + " domination mismatches");
  o.require(med_mismatch == 0, std::to_string(med_mismatch) + " k-median mismatches");
  if (o.pass) {
    o.detail << cases << " cases over " << exhaustive << " exhaustive graphs (N<=6) + "
             << kRandomGraphsPerOrder << " random (N=7), 0 mismatches";
  }
}

void ac08(Outcome& o) {
  std::mt19937_64 rng(8008);
  int mismatches = 0;
  int queries = 0;
  for (int trial = 0; trial < kRandomProfiles; ++trial) {
    const int n = 2 + trial % 9;
    const StrategyProfile profile =
        oracle::random_profile(n, 0.05 + 0.05 * (trial % 6), rng);
    const GameSpec max_spec = GameSpec::uniform(Variant::kMax, n, 1 + trial % 4);
    const GameSpec sum_spec = GameSpec::uniform(Variant::kSum, n, (n - 1) + trial % (2 * n));
    for (const GameSpec* spec : {&max_spec, &sum_spec}) {
      for (Node v = 0; v < n; ++v) {
        ++queries;
        const auto expected = oracle::best_response(*spec, profile, v);
        const BestResponse got = best_response(*spec, profile, v);
        const bool ok = expected.strategy
                            ? got.status == BestResponseStatus::kExact &&
                                  got.strategy == *expected.strategy
                            : got.status == BestResponseStatus::kInfeasible;
        if (!ok) ++mismatches;
      }
    }
  }
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail << kRandomProfiles << " profiles, " << queries << " queries, 0 mismatches";
}

void ac09(Outcome& o) {
  static const std::vector<std::string> kNames = {
      "gamma_bound", "delta_bound", "ball_growth", "self_centered_rule", "sum_slack_rule"};
  int evaluated = 0;
  int skipped = 0;
  for (const Instance& inst : stable_pool()) {
    const BoundReport r = report(inst, is_equilibrium(inst.spec, inst.profile));
    for (const Check& c : r.checks) {
      if (std::find(kNames.begin(), kNames.end(), c.name) == kNames.end()) continue;
      if (c.verdict == CheckVerdict::kSkipped) {
        ++skipped;
        continue;
      }
      ++evaluated;
      o.require(c.verdict == CheckVerdict::kPass,
                instance_label(inst.provenance) + " " + c.name + " " + str(c.measured) +
                    " vs " + str(c.bound));
    }
  }
  o.require(!stable_pool().empty(), "no stable instances collected");
  if (o.pass) {
    o.detail << stable_pool().size() << " instances, " << evaluated << " checks passed, "
             << skipped << " not applicable (nonuniform bounds)";
  }
}

void ac10(Outcome& o) {
  Instance inst = gadget_with_pendants(petersen(), 20, 2);
  const EquilibriumReport eq = is_equilibrium(inst.spec, inst.profile);
  o.detail << "verdict " << to_string(eq.verdict);
  o.require(eq.verdict != Verdict::kUnknown, "solver hit its limit");
  if (eq.verdict == Verdict::kStable) {
    const std::int64_t num = *eq.social_cost;
    const std::int64_t den = inst.spec.num_players() - 1;
    o.detail << " SC/(n-1)=" << num << "/" << den;
    o.require(num == 75, "SC " + std::to_string(num));
    o.require(2 * num >= 5 * den, "ratio below 2.5");
  }
}

struct Criterion {
  int id;
  std::function<void(Outcome&)> run;
  double limit_seconds;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria = {
      {1, ac01, kLimitAc01}, {2, ac02, kLimitAc02}, {3, ac03, kLimitAc03},
      {4, ac04, kLimitAc04}, {5, ac05, kLimitAc05}, {6, ac06, kLimitAc06},
      {7, ac07, kLimitAc07}, {8, ac08, kLimitAc08}, {9, ac09, 0.0},
      {10, ac10, kLimitAc10},
  };
  // The bound suite draws on the instances of criteria 1 to 6.
  if (only == 9) {
    for (int id = 1; id <= 6; ++id) {
      Outcome scratch;
      criteria[id - 1].run(scratch);
    }
  }
  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0) {
      o.require(seconds < c.limit_seconds, "over time limit");
    }
    if (!o.pass) ++failures;
    char line[64];
    std::snprintf(line, sizeof line, "AC%02d %s %.3fs ", c.id, o.pass ? "PASS" : "FAIL",
                  seconds);
    std::cout << line << o.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
