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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "bdncg/error.hpp"
#include "bdncg/instances.hpp"
#include "bdncg/io.hpp"
#include "oracles.hpp"

using namespace bdncg;

namespace {

ErrorCode code_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("star and complete") {
  Instance s = star(5, StarOwner::kLeaves, Variant::kMax, 2);
  CHECK(build_graph(s.profile).num_edges() == 4);
  CHECK(s.expected.social_cost == 4);
  Instance c = complete(4);
  CHECK(build_graph(c.profile).num_edges() == 6);
  CHECK(c.expected.stable == true);
  CHECK(social_cost(c.spec, c.profile) == 6);
}

TEST_CASE("clique with pendant paths") {
  for (int k = 3; k <= 6; ++k) {
    for (Variant variant : {Variant::kMax, Variant::kSum}) {
      Instance inst = nonuniform_clique_pendant(k, variant);
      CHECK(inst.spec.num_players() == 5 * k);
      CHECK(build_graph(inst.profile).num_edges() ==
            static_cast<std::size_t>(k * (k - 1) / 2 + 4 * k));
      CHECK_FALSE(inst.spec.is_uniform());
    }
  }
  Instance k4 = nonuniform_clique_pendant(4, Variant::kSum);
  CHECK(k4.spec.bound(0) == 39);
  CHECK(k4.spec.bound(19) == 400);
  CHECK(nonuniform_clique_pendant(3, Variant::kMax).expected.social_cost == 15);
  CHECK_THROWS_AS(nonuniform_clique_pendant(2, Variant::kMax), Error);
}

TEST_CASE("path with hubs") {
  Instance a = path_hub(3, 5);
  CHECK(a.spec.num_players() == 11);
  CHECK(social_cost(a.spec, a.profile) == 15);
  CHECK(diameter(build_graph(a.profile)) == 3);
  Instance b = path_hub(2, 1);
  CHECK(b.spec.num_players() == 5);
  CHECK(b.expected.social_cost == 5);
}

TEST_CASE("prime construction counts and structure") {
  for (int p : {3, 5, 7}) {
    PrimeTreeLayout layout(p);
    Instance inst = prime_tree(p);
    const Graph g = build_graph(inst.profile);
    const std::size_t expected_edges = (p + p * p) + p * p + 1 + p * (p - 1) / 2 +
                                       p * (p * (p - 1) / 2) + p * p * p;
    CHECK(inst.spec.num_players() == 2 * p * p + p + 2);
    CHECK(g.num_edges() == expected_edges);
    CHECK(g == layout.graph());
    CHECK(diameter(g) == 2);
    // Every star group dominates the tree leaves.
    for (int i = 0; i < p; ++i) {
      for (int i2 = 0; i2 < p; ++i2) {
        for (int j2 = 0; j2 < p; ++j2) {
          bool dominated = false;
          for (int j = 0; j < p; ++j) {
            dominated = dominated || g.has_edge(layout.star_leaf(i, j), layout.tree_leaf(i2, j2));
          }
          CHECK(dominated);
        }
      }
    }
    // Tree leaves under different inner nodes share a star leaf.
    for (int a = 0; a < p * p; ++a) {
      for (int b = 0; b < p * p; ++b) {
        if (a / p == b / p) continue;
        const Node x = layout.tree_leaf(a / p, a % p);
        const Node y = layout.tree_leaf(b / p, b % p);
        bool shared = false;
        for (int i = 0; i < p && !shared; ++i) {
          for (int j = 0; j < p && !shared; ++j) {
            const Node u = layout.star_leaf(i, j);
            shared = g.has_edge(u, x) && g.has_edge(u, y);
          }
        }
        CHECK(shared);
      }
    }
  }
  CHECK(prime_tree(3).expected.social_cost == 61);
  CHECK(prime_tree(5).expected.social_cost == 241);
  CHECK(code_of([] { prime_tree(9); }) == ErrorCode::kNotPrime);
  CHECK(code_of([] { prime_tree(4); }) == ErrorCode::kNotPrime);
}

TEST_CASE("extension profiles keep the graph") {
  Instance inst = prime_tree(3);
  PrimeTreeLayout layout(3);
  const StrategyProfile base = layout.base_profile();
  for (Node v = 0; v < inst.spec.num_players(); ++v) {
    StrategyProfile ext = extension_profile(base, inst.profile, v);
    CHECK(build_graph(ext) == build_graph(inst.profile));
  }
}

TEST_CASE("multipartite construction") {
  struct Case { int n, k; };
  for (auto [n, k] : {Case{8, 3}, Case{12, 3}, Case{10, 4}, Case{6, 1}, Case{5, 0}, Case{9, 2},
                      Case{7, 3}}) {
    Instance inst = multipartite_sum(n, k);
    const Graph g = build_graph(inst.profile);
    const int groups = n / (k + 1);
    for (Node v = 0; v < groups * (k + 1); ++v) CHECK(g.degree(v) == n - 1 - k);
    for (Node v = 0; v < n; ++v) CHECK(*broadcast_cost(g, v) <= inst.spec.bound(v));
    for (Node v = groups * (k + 1); v < n; ++v) CHECK(inst.profile.buys(v).empty());
  }
  Instance k44 = multipartite_sum(8, 3);
  CHECK(k44.spec.bound(0) == 10);
  CHECK(social_cost(k44.spec, k44.profile) == 16);
  CHECK(build_graph(multipartite_sum(5, 0).profile).num_edges() == 10);
  CHECK_THROWS_AS(multipartite_sum(5, 4), Error);
}

TEST_CASE("ring family recurrences equal measured broadcast costs") {
  CHECK(ring_family_costs(2, 1).lambda == 4);
  CHECK(ring_family_costs(2, 1).lambda_bar == 4);
  CHECK(ring_family_costs(2, 1).lambda_prime == 5);
  CHECK(ring_family_costs(3, 2).lambda == 15);
  CHECK(ring_family_costs(3, 2).lambda_bar == 14);
  for (int k = 2; k <= 8; ++k) {
    for (int h = 1; h <= 5; ++h) {
      const SumFamilyCosts costs = ring_family_costs(k, h);
      Instance inst = ring_family(k, h);
      const Graph g = build_graph(inst.profile);
      CHECK(costs.n == (h + 1) * k);
      CHECK(g.num_edges() == static_cast<std::size_t>(2 * k * h));
      for (Node hub = 0; hub < k; ++hub) CHECK(broadcast_cost(g, hub) == costs.lambda_bar);
      for (Node v = k; v < costs.n; ++v) CHECK(broadcast_cost(g, v) == costs.lambda);
      CHECK(costs.lambda_bar <= costs.lambda);
    }
  }
  // Consecutive stability windows chain up for graphs of the same order.
  for (int k = 2; k <= 7; ++k) {
    for (int t = 1; t <= 4; ++t) {
      const int n = k * (k + 1) * t;
      CHECK(ring_family_costs(k + 1, n / (k + 1) - 1).lambda <=
            ring_family_costs(k, n / k - 1).lambda_prime);
    }
  }
}

TEST_CASE("gadgets") {
  Instance p = gadget_with_pendants(petersen(), 20, 2);
  CHECK(p.spec.num_players() == 30);
  CHECK(p.profile.total_purchases() == 75);
  CHECK(diameter(build_graph(p.profile)) == 2);
  CHECK(code_of([] { gadget_with_pendants(petersen(), 5, 3); }) == ErrorCode::kGadgetMismatch);
  CHECK(code_of([] { gadget_with_pendants(path_graph(4), 5, 3); }) ==
        ErrorCode::kGadgetMismatch);
  const Graph cubic = load_graph(BDNCG_TEST_DATA "/gadget20.json");
  CHECK(cubic.num_nodes() == 20);
  CHECK(regular_degree(cubic) == 3);
  CHECK(diameter(cubic) == 3);
  CHECK(is_self_centered(cubic));
  Instance padded = gadget_with_pendants(cubic, 100, 3);
  CHECK(padded.spec.num_players() == 120);
  CHECK(padded.profile.total_purchases() == 30 + 300);
}

TEST_CASE("reductions track domination and k-median optima") {
  Instance c4 = reduction_from_dominating_set(cycle_graph(4), 3);
  CHECK(c4.spec.num_players() == 13);
  CHECK(best_response_max(c4.spec, c4.profile, 0).cost == oracle::domination_number(cycle_graph(4)));
  Instance p4 = reduction_from_kmedian(path_graph(4), 4);
  CHECK(best_response_sum(p4.spec, p4.profile, 0).cost == 1);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 8;
    Graph g = oracle::random_connected_graph(n, 0.2, rng);
    const int radius = 2 + trial % 3;
    Instance dom = reduction_from_dominating_set(g, radius);
    CHECK(dom.spec.num_players() == n + 2 * n * (radius - 2) + 1);
    CHECK(best_response_max(dom.spec, dom.profile, 0).cost == oracle::domination_number(g));
    if (n <= 8) {
      const std::int64_t beta = trial % (2 * n);
      Instance med = reduction_from_kmedian(g, beta);
      CHECK(best_response_sum(med.spec, med.profile, 0).cost == oracle::kmedian_min_k(g, beta));
    }
  }
  CHECK_THROWS_AS(reduction_from_dominating_set(Graph(3), 2), Error);
}
