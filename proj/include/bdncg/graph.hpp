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

#ifndef BDNCG_GRAPH_HPP
#define BDNCG_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bdncg {

using Node = int;
using Edge = std::pair<Node, Node>;

/// A finite non-negative quantity, or std::nullopt when it is unbounded
/// (some node is unreachable). Never encoded as a large finite number.
using Measure = std::optional<std::int64_t>;

/// Immutable undirected simple graph on nodes 0..n-1 with sorted
/// adjacency lists. Derived graphs (G+F, G-F, G[U]) are new objects.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_nodes);

  /// Duplicate edges (in either orientation) merge into one. Self-loops and
  /// out-of-range endpoints throw Error(kInvalidArgument).
  Graph(int num_nodes, std::span<const Edge> edges);

  int num_nodes() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  std::span<const Node> neighbors(Node v) const { return adj_.at(v); }
  int degree(Node v) const { return static_cast<int>(adj_.at(v).size()); }
  bool has_edge(Node u, Node v) const;

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph with_edges(std::span<const Edge> extra) const;
  Graph without_edges(std::span<const Edge> removed) const;

  /// Subgraph induced by `nodes`; node nodes[i] becomes node i.
  Graph induced(std::span<const Node> nodes) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Node>> adj_;
  std::size_t num_edges_ = 0;
};

/// Hop distances from one source. Entries outside the source's component
/// hold kUnreachable.
class DistanceVector {
 public:
  static constexpr int kUnreachable = -1;

  DistanceVector(Node source, std::vector<int> dist)
      : source_(source), dist_(std::move(dist)) {}

  Node source() const noexcept { return source_; }
  int size() const noexcept { return static_cast<int>(dist_.size()); }
  bool reachable(Node u) const { return dist_.at(u) != kUnreachable; }
  int operator[](Node u) const { return dist_[u]; }
  std::span<const int> values() const noexcept { return dist_; }

 private:
  Node source_;
  std::vector<int> dist_;
};

/// Options for a truncated BFS. Nodes beyond max_depth are reported as
/// unreachable; the excluded node is never entered (nor used as a relay).
struct BfsLimits {
  std::optional<int> max_depth;
  std::optional<Node> excluded;
};

DistanceVector bfs(const Graph& graph, Node source);
DistanceVector bfs(const Graph& graph, Node source, const BfsLimits& limits);

Measure eccentricity(const Graph& graph, Node v);
Measure broadcast_cost(const Graph& graph, Node v);

/// Eccentricity of every node, in node order.
std::vector<Measure> eccentricities(const Graph& graph);

Measure diameter(const Graph& graph);
Measure radius(const Graph& graph);

/// True iff the graph is connected and every eccentricity is equal.
bool is_self_centered(const Graph& graph);
bool is_connected(const Graph& graph);

/// E(G^k) = {(u, v) : 1 <= d(u, v) <= k}. k = 0 yields the edgeless graph.
Graph graph_power(const Graph& graph, int k);

struct BallProfile {
  int radius = 0;
  std::vector<int> sizes;  // |ball(u, radius)| per node
  int min_size = 0;
};

BallProfile ball_profile(const Graph& graph, int k);

int min_degree(const Graph& graph);

/// Common degree when every node has the same degree.
std::optional<int> regular_degree(const Graph& graph);

}  // namespace bdncg

#endif  // BDNCG_GRAPH_HPP
