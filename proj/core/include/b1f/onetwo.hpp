#pragma once

// Circ(2n,{1,2}): explicit 2-balanced factorisations and a checker for the
// structural facts every 1-factorisation of this graph obeys.

#include <array>
#include <string>
#include <vector>

#include "b1f/graph.hpp"

namespace b1f::onetwo {

enum class EdgeSpan { OneEdge, TwoEdge };

// Distance class of an edge of Circ(2n,{1,2}); throws WrongConnectionSet for
// an edge of any other distance.
EdgeSpan span_of(const CirculantGraph& g, const Edge& e);

// The three edges crossing the bisector of the 1-edge {v, v+1}:
// {v-1,v+1}, {v,v+1}, {v,v+2}.
struct Configuration {
  Edge anchor;
  std::array<Edge, 3> members;
  std::array<int, 3> factor;  // factor index of each member
  int k = 0;                  // distinct factors among the members
};

// Throws WrongConnectionSet unless F factorises Circ(2n,{1,2}) with n >= 3.
Configuration configuration_class(const OneFactorisation& f, Vertex v);

OneFactorisation construct_order8();

// n = 0 (mod 3), n > 3; factors R, G, B, Y with G = R+2, B = G+2.
OneFactorisation construct_rotation(int n);

struct StructureReport {
  bool configurations_two_or_three = true;
  bool two_configuration_two_edges_match = true;
  bool alternating = true;
  bool three_configuration_neighbours_match = true;
  bool out_two_edges = true;
  bool even_two_edges_per_factor = true;
  bool all_one_edge_factor = true;
  bool yellow_unions_hamiltonian = true;
  bool pair_cycles_zero_or_two_one_edges = true;
  bool cycle_count_matches = true;

  int yellow = -1;                     // factor index playing the all-1-edge role
  std::vector<std::string> failures;   // one line per failed check instance

  bool all_pass() const noexcept { return failures.empty(); }
};

StructureReport verify_structure_lemmas(const OneFactorisation& f);

}  // namespace b1f::onetwo
