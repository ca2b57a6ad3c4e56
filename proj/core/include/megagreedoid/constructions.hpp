#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "megagreedoid/ground_set.hpp"
#include "megagreedoid/megagreedoid.hpp"
#include "megagreedoid/rational.hpp"
#include "megagreedoid/subset.hpp"

namespace mg {

// Endpoint of a full edge: a ground index, or kRoot.
struct GraphEdge {
  static constexpr int kRoot = -1;
  int u;
  int v;

  // Endpoints ordered u <= v, root first.
  GraphEdge normalized() const { return u <= v ? *this : GraphEdge{v, u}; }
  auto operator<=>(const GraphEdge&) const = default;
};

// A connected multigraph on I ∪ {root}. Parallel edges carry multiplicity;
// half-edges are single endpoints in I left behind by restriction.
class RootedMultigraph {
 public:
  static constexpr int kRoot = GraphEdge::kRoot;

  // Throws ConnectivityError if I ∪ {root} is disconnected through full edges,
  // MalformedInput on loops, bad indices, or a root label that collides.
  RootedMultigraph(GroundSet ground, std::string root, std::vector<GraphEdge> full_edges,
                   std::vector<int> half_edges = {});

  const GroundSet& ground() const { return ground_; }
  const std::string& root() const { return root_; }
  const std::vector<GraphEdge>& full_edges() const { return full_edges_; }
  const std::vector<int>& half_edges() const { return half_edges_; }

  // Whether s ∪ {root} induces a connected subgraph.
  bool is_connected_with_root(Subset s) const;

  // Multiset equality of edges and half-edges, same ground order and root.
  bool operator==(const RootedMultigraph& other) const;

 private:
  GroundSet ground_;
  std::string root_;
  std::vector<GraphEdge> full_edges_;  // sorted, normalized
  std::vector<int> half_edges_;        // sorted
};

// A = { S : S ∪ {root} connected }, r(S) = number of full edges with an
// endpoint in S and the other in I, plus half-edges anchored in S.
Megagreedoid from_rooted_graph(const RootedMultigraph& g);

// Subgraph on s ∪ {root}; full edges from s to I - s become half-edges at
// their s endpoint. Throws InfeasibleSet if s ∪ {root} is not connected.
RootedMultigraph graph_restrict(const RootedMultigraph& g, Subset s);
// Contracts s ∪ {root} into the root; parallel edges are kept.
RootedMultigraph graph_contract(const RootedMultigraph& g, Subset s);
// Union glued at the root (labels must be disjoint).
RootedMultigraph graph_product(const RootedMultigraph& g, const RootedMultigraph& h);

// A finite partial order, given by cover pairs (a < b) and closed on ingestion.
class Poset {
 public:
  Poset() = default;
  // Throws InvalidPoset if the relation has a cycle.
  Poset(GroundSet ground, std::vector<std::pair<int, int>> relations);

  const GroundSet& ground() const { return ground_; }
  bool less(int a, int b) const { return Subset(strictly_below_[static_cast<std::size_t>(b)]).contains(a); }
  Subset strictly_below(int x) const { return Subset(strictly_below_[static_cast<std::size_t>(x)]); }
  bool is_lower_ideal(Subset s) const;

  // Cover relations of the closure, sorted.
  std::vector<std::pair<int, int>> covers() const;

  bool operator==(const Poset& other) const;

 private:
  GroundSet ground_;
  std::vector<std::uint32_t> strictly_below_;
};

// Induced subposet on an ideal, and on its complement.
Poset poset_restrict(const Poset& p, Subset ideal);
Poset poset_contract(const Poset& p, Subset ideal);
Poset poset_product(const Poset& p, const Poset& q);

// Lower ideals with cardinality rank.
Megagreedoid from_poset(const Poset& p);

// A set function on all of 2^I; normalized so that value(∅) = 0.
class RankTable {
 public:
  RankTable() = default;
  // values[mask] for every mask of the ground set.
  RankTable(GroundSet ground, std::vector<Rational> values);

  const GroundSet& ground() const { return ground_; }
  const Rational& operator()(Subset s) const { return values_.at(s.mask()); }
  const std::vector<Rational>& values() const { return values_; }

  bool operator==(const RankTable& other) const = default;

 private:
  GroundSet ground_;
  std::vector<Rational> values_;
};

RankTable table_restrict(const RankTable& t, Subset s);
RankTable table_contract(const RankTable& t, Subset s);
RankTable table_product(const RankTable& t, const RankTable& u);

// Checks integrality, r(A) <= |A|, monotonicity and local exchange.
// Throws InvalidGreedoid naming the failing axiom and witness.
void validate_greedoid(const RankTable& t);
// S is rank feasible when r(S ∪ X) <= r(S) + |X| for all X ⊆ I - S.
bool is_rank_feasible(const RankTable& t, Subset s);

// Rank-feasible sets with the greedoid rank. Validates first.
Megagreedoid from_greedoid(const RankTable& t);
// A = 2^I. Throws InvalidPolymatroid on non-monotone or non-submodular input.
Megagreedoid from_polymatroid(const RankTable& t);

// Greedoid rank of a poset: largest lower ideal contained in S.
RankTable poset_greedoid_rank(const Poset& p);

}  // namespace mg
