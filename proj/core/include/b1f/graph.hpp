#pragma once

// Circulant graphs, perfect matchings and the cycle structure of their unions.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "b1f/errors.hpp"

namespace b1f {

using Vertex = int;

// An undirected edge, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

using EdgeList = std::vector<Edge>;

// Circ(order, connections): vertices Z_order, v ~ w iff the circular distance
// between them is one of the connection distances.
class CirculantGraph {
 public:
  // Sorts the distances. Throws Error with OddOrder, DistanceOutOfRange or
  // DuplicateDistance.
  CirculantGraph(int order, std::vector<int> connections);

  int order() const noexcept { return order_; }
  std::span<const int> connections() const noexcept { return connections_; }

  // A distance of order/2 contributes one neighbour, any other distance two.
  int regularity() const noexcept { return regularity_; }
  std::size_t edge_count() const noexcept { return static_cast<std::size_t>(order_) * regularity_ / 2; }

  // Circular distance representative in [0, order/2].
  int distance(Vertex a, Vertex b) const noexcept;
  bool has_edge(Vertex a, Vertex b) const noexcept;
  bool has_edge(const Edge& e) const noexcept { return has_edge(e.u, e.v); }

  // Ascending neighbour labels of v.
  std::vector<Vertex> neighbours(Vertex v) const;
  // Every edge, sorted.
  EdgeList edges() const;

  Vertex wrap(long long x) const noexcept;

  std::string name() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  int order_;
  std::vector<int> connections_;
  int regularity_;
};

CirculantGraph make_circulant(int order, std::vector<int> connections);

// gcd(order, d_1, ..., d_k) == 1.
bool is_connected(const CirculantGraph& g);

// A perfect matching stored as a fixed-point-free involution.
class OneFactor {
 public:
  // Throws Error(NotPerfectMatching) unless the edges cover each of the
  // `order` vertices exactly once.
  OneFactor(int order, std::span<const Edge> edges);
  explicit OneFactor(std::vector<Vertex> partner);

  int order() const noexcept { return static_cast<int>(partner_.size()); }
  Vertex partner(Vertex v) const noexcept { return partner_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> partners() const noexcept { return partner_; }
  bool contains(const Edge& e) const noexcept;
  EdgeList edges() const;

  friend bool operator==(const OneFactor&, const OneFactor&) = default;
  friend auto operator<=>(const OneFactor&, const OneFactor&) = default;

 private:
  std::vector<Vertex> partner_;
};

// The type of a pair of 1-factors: cycle lengths of their union, descending.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> lengths);

  std::span<const int> lengths() const noexcept { return lengths_; }
  int total() const noexcept;
  std::size_t cycle_count() const noexcept { return lengths_.size(); }
  bool is_hamiltonian(int order) const noexcept { return lengths_.size() == 1 && lengths_[0] == order; }

  // Exponent notation, e.g. "[8,4^4]".
  std::string to_string() const;
  // Accepts "[8,4,4]" or "[8,4^2]"; throws std::invalid_argument.
  static CycleType parse(std::string_view text);

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> lengths_;
};

// A validated partition of a circulant graph's edges into perfect matchings.
class OneFactorisation {
 public:
  const CirculantGraph& graph() const noexcept { return graph_; }
  std::span<const OneFactor> factors() const noexcept { return factors_; }
  const OneFactor& factor(std::size_t i) const { return factors_.at(i); }
  std::size_t size() const noexcept { return factors_.size(); }

  // Index of the factor holding e; -1 if e is not an edge of the graph.
  int factor_of(const Edge& e) const noexcept;

  // Same partition with factors sorted; equal partitions compare equal.
  OneFactorisation canonical() const;
  // Relabels vertices by v -> sign*v + shift (mod order). Automorphism of any
  // circulant when sign is +1 or -1.
  OneFactorisation relabelled(int sign, int shift) const;
  OneFactorisation permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const OneFactorisation&, const OneFactorisation&) = default;

 private:
  friend OneFactorisation validate_factorisation(const CirculantGraph&, std::vector<OneFactor>);
  OneFactorisation(CirculantGraph g, std::vector<OneFactor> factors)
      : graph_(std::move(g)), factors_(std::move(factors)) {}

  CirculantGraph graph_;
  std::vector<OneFactor> factors_;
};

// Checks that every factor is a perfect matching of g, that factors are
// pairwise edge-disjoint and that together they cover every edge. Throws
// Error with NotPerfectMatching, EdgeNotInGraph, OverlappingFactors or
// IncompleteCover.
OneFactorisation validate_factorisation(const CirculantGraph& g, std::vector<OneFactor> factors);
OneFactorisation validate_factorisation(const CirculantGraph& g, std::span<const EdgeList> factors);

using Cycle = std::vector<Vertex>;

// Cycles of f1 u f2. Each cycle starts at its minimum vertex and leaves along
// f1; cycles are ordered by minimum vertex. Throws FactorsShareEdge.
std::vector<Cycle> union_cycles(const OneFactor& f1, const OneFactor& f2);
CycleType cycle_type(const OneFactor& f1, const OneFactor& f2);

// Circ(order, d1) ~= Circ(order, d2) via a unit multiplier. Only defined for
// two-element connection sets; throws UnsupportedConnectionSetSize otherwise.
bool connection_sets_isomorphic(int order, std::span<const int> d1, std::span<const int> d2);

}  // namespace b1f
