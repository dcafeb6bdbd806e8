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

#include "bdncg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bdncg/error.hpp"

namespace bdncg {

namespace {

void check_node(int n, Node v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "node " + std::to_string(v) + " out of range [0, " +
                    std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int num_nodes) {
  if (num_nodes < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative node count");
  }
  adj_.resize(num_nodes);
}

Graph::Graph(int num_nodes, std::span<const Edge> edges) : Graph(num_nodes) {
  for (auto [u, v] : edges) {
    check_node(num_nodes, u);
    check_node(num_nodes, v);
    if (u == v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at node " + std::to_string(u));
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    num_edges_ += list.size();
  }
  num_edges_ /= 2;
}

bool Graph::has_edge(Node u, Node v) const {
  const auto& list = adj_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Node u = 0; u < num_nodes(); ++u) {
    for (Node v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edges(std::span<const Edge> extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(num_nodes(), all);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop;
  drop.reserve(removed.size());
  for (auto [u, v] : removed) drop.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const auto& e : edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(num_nodes(), kept);
}

Graph Graph::induced(std::span<const Node> nodes) const {
  std::vector<int> index(num_nodes(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    check_node(num_nodes(), nodes[i]);
    if (index[nodes[i]] != -1) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate node in induced set");
    }
    index[nodes[i]] = static_cast<int>(i);
  }
  std::vector<Edge> kept;
  for (auto [u, v] : edges()) {
    if (index[u] >= 0 && index[v] >= 0) kept.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(nodes.size()), kept);
}

DistanceVector bfs(const Graph& graph, Node source) {
  return bfs(graph, source, BfsLimits{});
}

DistanceVector bfs(const Graph& graph, Node source, const BfsLimits& limits) {
  const int n = graph.num_nodes();
  check_node(n, source);
  std::vector<int> dist(n, DistanceVector::kUnreachable);
  dist[source] = 0;
  std::queue<Node> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    Node x = frontier.front();
    frontier.pop();
    if (limits.max_depth && dist[x] >= *limits.max_depth) continue;
    for (Node y : graph.neighbors(x)) {
      if (limits.excluded && y == *limits.excluded) continue;
      if (dist[y] == DistanceVector::kUnreachable) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return DistanceVector(source, std::move(dist));
}

Measure eccentricity(const Graph& graph, Node v) {
  auto d = bfs(graph, v);
  std::int64_t best = 0;
  for (int x : d.values()) {
    if (x == DistanceVector::kUnreachable) return std::nullopt;
    best = std::max<std::int64_t>(best, x);
  }
  return best;
}

Measure broadcast_cost(const Graph& graph, Node v) {
  auto d = bfs(graph, v);
  std::int64_t total = 0;
  for (int x : d.values()) {
    if (x == DistanceVector::kUnreachable) return std::nullopt;
    total += x;
  }
  return total;
}

std::vector<Measure> eccentricities(const Graph& graph) {
  std::vector<Measure> out;
  out.reserve(graph.num_nodes());
  for (Node v = 0; v < graph.num_nodes(); ++v) {
    out.push_back(eccentricity(graph, v));
  }
  return out;
}

Measure diameter(const Graph& graph) {
  std::int64_t best = 0;
  for (const auto& e : eccentricities(graph)) {
    if (!e) return std::nullopt;
    best = std::max(best, *e);
  }
  return best;
}

Measure radius(const Graph& graph) {
  if (graph.num_nodes() == 0) return 0;
  auto ecc = eccentricities(graph);
  std::int64_t best = 0;
  bool first = true;
  for (const auto& e : ecc) {
    if (!e) return std::nullopt;
    if (first || *e < best) best = *e;
    first = false;
  }
  return best;
}

bool is_self_centered(const Graph& graph) {
  if (graph.num_nodes() == 0) return true;
  auto ecc = eccentricities(graph);
  for (const auto& e : ecc) {
    if (!e || *e != *ecc.front()) return false;
  }
  return true;
}

bool is_connected(const Graph& graph) {
  if (graph.num_nodes() == 0) return true;
  auto d = bfs(graph, 0);
  return std::none_of(d.values().begin(), d.values().end(),
                      [](int x) { return x == DistanceVector::kUnreachable; });
}

Graph graph_power(const Graph& graph, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative graph power");
  if (k == 0) return Graph(graph.num_nodes());
  std::vector<Edge> edges;
  for (Node u = 0; u < graph.num_nodes(); ++u) {
    auto d = bfs(graph, u, BfsLimits{.max_depth = k, .excluded = std::nullopt});
    for (Node v = u + 1; v < graph.num_nodes(); ++v) {
      if (d.reachable(v)) edges.emplace_back(u, v);
    }
  }
  return Graph(graph.num_nodes(), edges);
}

BallProfile ball_profile(const Graph& graph, int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative ball radius");
  BallProfile profile;
  profile.radius = k;
  profile.sizes.reserve(graph.num_nodes());
  for (Node u = 0; u < graph.num_nodes(); ++u) {
    auto d = bfs(graph, u, BfsLimits{.max_depth = k, .excluded = std::nullopt});
    int size = static_cast<int>(
        std::count_if(d.values().begin(), d.values().end(),
                      [](int x) { return x != DistanceVector::kUnreachable; }));
    profile.sizes.push_back(size);
  }
  profile.min_size = profile.sizes.empty()
                         ? 0
                         : *std::min_element(profile.sizes.begin(),
                                             profile.sizes.end());
  return profile;
}

int min_degree(const Graph& graph) {
  if (graph.num_nodes() == 0) return 0;
  int best = graph.degree(0);
  for (Node v = 1; v < graph.num_nodes(); ++v) {
    best = std::min(best, graph.degree(v));
  }
  return best;
}

std::optional<int> regular_degree(const Graph& graph) {
  if (graph.num_nodes() == 0) return std::nullopt;
  int d = graph.degree(0);
  for (Node v = 1; v < graph.num_nodes(); ++v) {
    if (graph.degree(v) != d) return std::nullopt;
  }
  return d;
}

}  // namespace bdncg
