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

#include "bdncg/instances.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "bdncg/error.hpp"

namespace bdncg {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(ErrorCode::kInvalidArgument, message);
}

std::int64_t count_edges(const StrategyProfile& profile) {
  return static_cast<std::int64_t>(build_graph(profile).num_edges());
}

}  // namespace

StarOwner parse_star_owner(std::string_view text) {
  if (text == "center" || text == "CENTER") return StarOwner::kCenter;
  if (text == "leaves" || text == "LEAVES") return StarOwner::kLeaves;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown star owner '" + std::string(text) + "'");
}

Instance star(int n, StarOwner owner, Variant variant, std::int64_t bound) {
  require(n >= 2, "star needs n >= 2");
  std::vector<std::vector<Node>> buys(n);
  for (Node leaf = 1; leaf < n; ++leaf) {
    if (owner == StarOwner::kCenter) {
      buys[0].push_back(leaf);
    } else {
      buys[leaf].push_back(0);
    }
  }
  Instance out{GameSpec::uniform(variant, n, bound), StrategyProfile(std::move(buys)),
               {"star", {{"n", n}, {"owner_leaves", owner == StarOwner::kLeaves}}},
               {}};
  const int diam = n >= 3 ? 2 : 1;
  const std::int64_t leaf_broadcast = 2LL * n - 3;
  const bool within = variant == Variant::kMax ? bound >= diam : bound >= leaf_broadcast;
  out.expected.stable = within;
  out.expected.diameter = diam;
  if (within) out.expected.social_cost = n - 1;
  out.provenance.params["bound"] = bound;
  return out;
}

Instance complete(int n, Variant variant, std::int64_t bound) {
  require(n >= 2, "complete needs n >= 2");
  Graph g = complete_graph(n);
  Instance out{GameSpec::uniform(variant, n, bound), lower_index_profile(g),
               {"complete", {{"n", n}, {"bound", bound}}},
               {}};
  const bool tight = variant == Variant::kMax ? bound == 1 : bound == n - 1;
  if (tight) out.expected.stable = true;
  out.expected.social_cost = static_cast<std::int64_t>(n) * (n - 1) / 2;
  out.expected.diameter = 1;
  return out;
}

Instance nonuniform_clique_pendant(int k, Variant variant) {
  require(k >= 3, "clique-pendant needs k >= 3");
  const int n = 5 * k;
  std::vector<std::vector<Node>> buys(n);
  for (Node i = 0; i < k; ++i) {
    for (Node j = i + 1; j < k; ++j) buys[i].push_back(j);
    const Node first = k + 4 * i;
    buys[first].push_back(i);
    buys[first + 1].push_back(first);
    buys[first + 2].push_back(i);
    buys[first + 3].push_back(first + 2);
  }
  std::vector<std::int64_t> bounds(n);
  for (Node v = 0; v < n; ++v) {
    if (variant == Variant::kMax) {
      bounds[v] = v < k ? 3 : 5;
    } else {
      bounds[v] = v < k ? 11LL * k - 5 : static_cast<std::int64_t>(n) * n;
    }
  }
  Instance out{GameSpec(variant, std::move(bounds)), StrategyProfile(std::move(buys)),
               {"clique-pendant", {{"k", k}}},
               {}};
  out.expected.stable = true;
  out.expected.social_cost = static_cast<std::int64_t>(k) * (k - 1) / 2 + 4LL * k;
  out.expected.diameter = 5;
  out.expected.optimum = n - 1;
  return out;
}

Instance path_hub(int radius, int hubs) {
  require(radius >= 2, "path-hub needs R >= 2");
  require(hubs >= 1, "path-hub needs h >= 1");
  const int path_len = 2 * radius;
  const int n = path_len + hubs;
  std::vector<std::vector<Node>> buys(n);
  for (Node j = 0; j + 1 < path_len; ++j) buys[j].push_back(j + 1);
  for (Node v = path_len; v < n; ++v) buys[v] = {0, path_len - 1};
  Instance out{GameSpec::uniform(Variant::kMax, n, radius),
               StrategyProfile(std::move(buys)),
               {"path-hub", {{"R", radius}, {"h", hubs}}},
               {}};
  out.expected.stable = true;
  out.expected.diameter = radius;
  out.expected.social_cost = (2LL * radius - 1) + 2LL * hubs;
  return out;
}

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

PrimeTreeLayout::PrimeTreeLayout(int p) : p_(p) {
  if (p < 3) throw Error(ErrorCode::kInvalidArgument, "prime-tree needs p >= 3");
  if (!is_prime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
}

PrimeTreeLayout::Role PrimeTreeLayout::role(Node v) const {
  if (v == root()) return Role::kRoot;
  if (v < tree_leaf(0, 0)) return Role::kInner;
  if (v < star_center()) return Role::kTreeLeaf;
  if (v == star_center()) return Role::kStarCenter;
  return Role::kStarLeaf;
}

StrategyProfile PrimeTreeLayout::base_profile() const {
  std::vector<std::vector<Node>> buys(num_nodes());
  for (int i = 0; i < p_; ++i) buys[root()].push_back(inner(i));
  buys[root()].push_back(star_center());
  for (int i2 = 0; i2 < p_; ++i2) {
    for (int j2 = 0; j2 < p_; ++j2) {
      auto& s = buys[tree_leaf(i2, j2)];
      s.push_back(inner(i2));
      for (int i = 0; i < p_; ++i) {
        const int j = ((j2 - i2 * i) % p_ + p_) % p_;
        s.push_back(star_leaf(i, j));
      }
    }
  }
  for (int i = 0; i < p_; ++i) {
    for (int j = 0; j < p_; ++j) buys[star_leaf(i, j)].push_back(star_center());
  }
  return StrategyProfile(std::move(buys));
}

Graph PrimeTreeLayout::graph() const {
  std::vector<Edge> edges = build_graph(base_profile()).edges();
  for (int a = 0; a < p_; ++a) {
    for (int b = a + 1; b < p_; ++b) {
      edges.emplace_back(inner(a), inner(b));
      for (int i = 0; i < p_; ++i) edges.emplace_back(star_leaf(i, a), star_leaf(i, b));
    }
  }
  return Graph(num_nodes(), edges);
}

Instance prime_tree(int p) {
  PrimeTreeLayout layout(p);
  auto buys = layout.base_profile().all_buys();
  for (int a = 0; a < p; ++a) {
    for (int b = a + 1; b < p; ++b) {
      buys[layout.inner(a)].push_back(layout.inner(b));
      for (int i = 0; i < p; ++i) {
        buys[layout.star_leaf(i, a)].push_back(layout.star_leaf(i, b));
      }
    }
  }
  const int n = layout.num_nodes();
  Instance out{GameSpec::uniform(Variant::kMax, n, 2), StrategyProfile(std::move(buys)),
               {"prime-tree", {{"p", p}}},
               {}};
  out.expected.stable = true;
  out.expected.diameter = 2;
  out.expected.social_cost = count_edges(out.profile);
  return out;
}

StrategyProfile extension_profile(const StrategyProfile& base,
                                  const StrategyProfile& full, Node v) {
  require(base.num_players() == full.num_players(), "profile size mismatch");
  const Graph base_graph = build_graph(base);
  const Graph full_graph = build_graph(full);
  auto buys = base.all_buys();
  for (Node x : full_graph.neighbors(v)) {
    if (!base_graph.has_edge(v, x)) buys[v].push_back(x);
  }
  for (Node u = 0; u < full.num_players(); ++u) {
    if (u == v) continue;
    for (Node x : full.buys(u)) {
      if (x != v) buys[u].push_back(x);
    }
  }
  return StrategyProfile(std::move(buys));
}

Instance multipartite_sum(int n, int k) {
  require(n >= 2, "multipartite needs n >= 2");
  require(k >= 0 && k <= n - 2, "multipartite needs 0 <= k <= n-2");
  const int size = k + 1;
  const int groups = n / size;
  auto group_of = [&](Node v) { return v < groups * size ? 1 + v / size : 0; };
  std::vector<std::vector<Node>> buys(n);
  for (Node a = 0; a < n; ++a) {
    for (Node b = a + 1; b < n; ++b) {
      // Groups are laid out in order with the remainder last, so the lower
      // id is always the buyer under both ownership rules.
      if (group_of(a) != group_of(b)) buys[a].push_back(b);
    }
  }
  Instance out{GameSpec::uniform(Variant::kSum, n, static_cast<std::int64_t>(n) - 1 + k),
               StrategyProfile(std::move(buys)),
               {"multipartite", {{"n", n}, {"k", k}}},
               {}};
  out.expected.stable = true;
  out.expected.social_cost = count_edges(out.profile);
  return out;
}

SumFamilyCosts ring_family_costs(int k, int h) {
  require(k >= 2, "ring needs k >= 2");
  require(h >= 1, "ring needs h >= 1");
  auto order = [h](int hubs) { return static_cast<std::int64_t>(h + 1) * hubs; };
  std::int64_t lambda = 2 * order(2) - 4;
  std::int64_t lambda_bar = order(2);
  for (int j = 2; j < k; ++j) {
    const bool next_even = (j + 1) % 2 == 0;
    lambda += order(j) + (next_even ? h : 1);
    lambda_bar += order(j) + (next_even ? 1 : h);
  }
  SumFamilyCosts out;
  out.k = k;
  out.h = h;
  out.n = static_cast<int>(order(k));
  out.lambda = lambda;
  out.lambda_bar = lambda_bar;
  out.lambda_prime = std::min(lambda, lambda_bar) + order(k) - 1 - k;
  return out;
}

Instance ring_family(int k, int h, std::optional<std::int64_t> bound) {
  const SumFamilyCosts costs = ring_family_costs(k, h);
  const std::int64_t b = bound.value_or(costs.lambda);
  std::vector<std::vector<Node>> buys(costs.n);
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < h; ++c) buys[k + i * h + c] = {i, (i + 1) % k};
  }
  Instance out{GameSpec::uniform(Variant::kSum, costs.n, b),
               StrategyProfile(std::move(buys)),
               {"ring", {{"k", k}, {"h", h}, {"B", b}}},
               {}};
  if (b >= costs.lambda && b < costs.lambda_prime) out.expected.stable = true;
  out.expected.social_cost = 2LL * k * h;
  out.expected.diameter = k;
  return out;
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, edges);
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Graph(n, edges);
}

StrategyProfile lower_index_profile(const Graph& graph) {
  std::vector<std::vector<Node>> buys(graph.num_nodes());
  for (const auto& [a, b] : graph.edges()) buys[a].push_back(b);
  return StrategyProfile(std::move(buys));
}

Instance gadget_with_pendants(const Graph& gadget, int n_pendants, int radius) {
  require(n_pendants >= 0, "pendant count must be non-negative");
  auto mismatch = [](const std::string& why) {
    return Error(ErrorCode::kGadgetMismatch, why);
  };
  if (radius < 2) throw mismatch("gadget radius must be at least 2");
  const auto degree = regular_degree(gadget);
  if (!degree || *degree < 1) throw mismatch("gadget is not regular");
  const Measure diam = diameter(gadget);
  if (!diam || *diam != radius) {
    throw mismatch("gadget diameter differs from R=" + std::to_string(radius));
  }
  if (!is_self_centered(gadget)) throw mismatch("gadget is not self-centered");

  const int order = gadget.num_nodes();
  std::vector<Node> anchors;
  if (radius == 2) {
    std::vector<bool> blocked(order, false);
    for (Node v = 0; v < order; ++v) {
      if (blocked[v]) continue;
      anchors.push_back(v);
      for (Node u : gadget.neighbors(v)) blocked[u] = true;
    }
  } else {
    for (Node v = 0; v < order; ++v) anchors.push_back(v);
  }

  auto buys = lower_index_profile(gadget).all_buys();
  buys.resize(order + n_pendants);
  for (int t = 0; t < n_pendants; ++t) {
    auto nb = gadget.neighbors(anchors[t % anchors.size()]);
    buys[order + t].assign(nb.begin(), nb.end());
  }
  const int n = order + n_pendants;
  Instance out{GameSpec::uniform(Variant::kMax, n, radius),
               StrategyProfile(std::move(buys)),
               {"gadget",
                {{"order", order}, {"pendants", n_pendants}, {"R", radius},
                 {"degree", *degree}}},
               {}};
  return out;
}

Instance reduction_from_dominating_set(const Graph& graph, int radius) {
  require(radius >= 2, "domination reduction needs R >= 2");
  require(graph.num_nodes() >= 1 && is_connected(graph),
          "domination reduction needs a connected graph");
  const int num = graph.num_nodes();
  const int tail = radius - 2;
  const int n = num + 2 * num * tail + 1;
  std::vector<std::vector<Node>> buys(n);
  for (const auto& [a, b] : graph.edges()) buys[a + 1].push_back(b + 1);
  Node next = num + 1;
  for (Node x = 0; x < num; ++x) {
    for (int copy = 0; copy < 2; ++copy) {
      Node prev = x + 1;
      for (int step = 0; step < tail; ++step) {
        buys[next].push_back(prev);
        prev = next++;
      }
    }
  }
  return Instance{GameSpec::uniform(Variant::kMax, n, radius),
                  StrategyProfile(std::move(buys)),
                  {"reduce-domset",
                   {{"N", num}, {"R", radius},
                    {"edges", static_cast<std::int64_t>(graph.num_edges())}}},
                  {}};
}

Instance reduction_from_kmedian(const Graph& graph, std::int64_t beta) {
  require(beta >= 0, "k-median reduction needs beta >= 0");
  require(graph.num_nodes() >= 1 && is_connected(graph),
          "k-median reduction needs a connected graph");
  const int num = graph.num_nodes();
  std::vector<std::vector<Node>> buys(num + 1);
  for (const auto& [a, b] : graph.edges()) buys[a + 1].push_back(b + 1);
  return Instance{GameSpec::uniform(Variant::kSum, num + 1, beta + num),
                  StrategyProfile(std::move(buys)),
                  {"reduce-kmedian",
                   {{"N", num}, {"beta", beta},
                    {"edges", static_cast<std::int64_t>(graph.num_edges())}}},
                  {}};
}

}  // namespace bdncg
