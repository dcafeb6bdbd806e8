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

#ifndef BDNCG_INSTANCES_HPP
#define BDNCG_INSTANCES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "bdncg/game.hpp"
#include "bdncg/graph.hpp"

namespace bdncg {

struct Provenance {
  std::string family;
  std::map<std::string, std::int64_t> params;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Claims a generator makes about its output; every field is optional and
/// checkable against the analysis results.
struct ExpectedClaims {
  std::optional<bool> stable;
  std::optional<std::int64_t> social_cost;
  std::optional<int> diameter;
  std::optional<std::int64_t> optimum;

  friend bool operator==(const ExpectedClaims&, const ExpectedClaims&) = default;
};

struct Instance {
  GameSpec spec;
  StrategyProfile profile;
  Provenance provenance;
  ExpectedClaims expected;

  friend bool operator==(const Instance&, const Instance&) = default;
};

enum class StarOwner { kCenter, kLeaves };

StarOwner parse_star_owner(std::string_view text);

/// K_{1,n-1} with node 0 as the center.
Instance star(int n, StarOwner owner, Variant variant, std::int64_t bound);

/// K_n, each edge bought by its lower endpoint.
Instance complete(int n, Variant variant = Variant::kMax, std::int64_t bound = 1);

/// Clique on nodes 0..k-1; clique node i carries two pendant paths
/// i - k+4i - k+4i+1 and i - k+4i+2 - k+4i+3, each edge bought by the
/// endpoint farther from the clique. Bounds: MAX 3 on the clique and 5
/// elsewhere; SUM 11k-5 on the clique and n^2 elsewhere.
Instance nonuniform_clique_pendant(int k, Variant variant);

/// Path 0..2R-1 (node j buys j+1) plus h hubs 2R..2R+h-1, each buying the
/// two path endpoints. Uniform MAX bound R.
Instance path_hub(int radius, int hubs);

/// Node numbering of the prime construction for prime p.
class PrimeTreeLayout {
 public:
  enum class Role { kRoot, kInner, kTreeLeaf, kStarCenter, kStarLeaf };

  explicit PrimeTreeLayout(int p);

  int p() const noexcept { return p_; }
  int num_nodes() const noexcept { return 2 * p_ * p_ + p_ + 2; }
  Node root() const noexcept { return 0; }
  Node inner(int i) const noexcept { return 1 + i; }
  Node tree_leaf(int i, int j) const noexcept { return 1 + p_ + i * p_ + j; }
  Node star_center() const noexcept { return 1 + p_ + p_ * p_; }
  Node star_leaf(int i, int j) const noexcept { return 2 + p_ + p_ * p_ + i * p_ + j; }
  Role role(Node v) const;

  /// The graph: tree, star, root link, inner clique, star-group cliques and
  /// the modular cross edges star_leaf(i,j) ~ tree_leaf(i2,j2) whenever
  /// j + i2*i = j2 (mod p).
  Graph graph() const;

  /// The base assignment: root and tree leaves buy every incident edge,
  /// star leaves buy the edge to the star center, everyone else buys nothing.
  StrategyProfile base_profile() const;

 private:
  int p_;
};

bool is_prime(std::int64_t value);

/// Throws Error(kNotPrime) for non-prime p and kInvalidArgument for p < 3.
/// Purchases extend the base assignment; the remaining clique edges go to
/// the lower endpoint. Uniform MAX bound 2.
Instance prime_tree(int p);

/// Player v buys everything of `base` plus every edge of G(full) at v not
/// already present in G(base); the others keep their `base` purchases plus
/// their `full` purchases not pointing at v. The graph equals G(full).
StrategyProfile extension_profile(const StrategyProfile& base,
                                  const StrategyProfile& full, Node v);

/// Complete multipartite graph with h = floor(n/(k+1)) groups of size k+1
/// (nodes first) and a remainder group of size n mod (k+1) (nodes last).
/// Edges into the remainder group are bought by the other endpoint, all
/// other edges by the endpoint in the lower group. SUM bound n-1+k.
Instance multipartite_sum(int n, int k);

struct SumFamilyCosts {
  int k = 0;
  int h = 0;
  int n = 0;
  std::int64_t lambda = 0;      // broadcast cost of a two-edge player
  std::int64_t lambda_bar = 0;  // broadcast cost of a hub
  std::int64_t lambda_prime = 0;
};

SumFamilyCosts ring_family_costs(int k, int h);

/// k hubs 0..k-1 buying nothing and h copies per hub index i, copy c being
/// node k+i*h+c and buying hubs i and (i+1) mod k. SUM bound `bound`,
/// defaulting to the two-edge players' broadcast cost.
Instance ring_family(int k, int h, std::optional<std::int64_t> bound = std::nullopt);

Graph petersen();
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

/// The gadget (regular of degree d, self-centered, diameter R) plus
/// n_pendants extra nodes, each buying the d neighbours of one gadget
/// node. Anchors cycle through all gadget nodes for R >= 3 and through the
/// greedy maximal independent set for R = 2. Gadget edges go to the lower
/// endpoint. Throws Error(kGadgetMismatch) if the gadget fails validation.
Instance gadget_with_pendants(const Graph& gadget, int n_pendants, int radius);

/// An isolated player 0 next to a copy of the connected graph (node x
/// becomes x+1), with two bought paths of R-2 nodes hanging off every copy
/// node. Uniform MAX bound R. Player 0's best-response size is the
/// domination number of the graph.
Instance reduction_from_dominating_set(const Graph& graph, int radius);

/// An isolated player 0 next to a copy of the connected graph, uniform SUM
/// bound beta + N. Player 0's best-response size is the least k whose
/// k-median cost is at most beta.
Instance reduction_from_kmedian(const Graph& graph, std::int64_t beta);

/// The profile realising `graph` with each edge bought by its lower endpoint.
StrategyProfile lower_index_profile(const Graph& graph);

}  // namespace bdncg

#endif  // BDNCG_INSTANCES_HPP
