#pragma once

// 3-balanced 1-factorisations of the two connected cubic circulants
// Circ(2n,{1,n}) and Circ(2n,{2,n}).

#include <vector>

#include "b1f/graph.hpp"

namespace b1f::cubic {

enum class Family { OneN, TwoN };

struct CubicFamily {
  Family kind;
  int n;  // the graph has order 2n
};

// Circ(2n,{1,n}) for n = 6 or n >= 8. Throws ParameterError
// (ParameterOutOfRange) otherwise; n = 7 carries ProvenNonexistent.
OneFactorisation construct_one_n(int n);

// Circ(2n,{2,n}) for odd n >= 9. Even n throws DisconnectedParameter.
OneFactorisation construct_two_n(int n);

OneFactorisation construct(const CubicFamily& family);

// The three pair types the closed-form formulas predict, sorted.
std::vector<CycleType> expected_types_cubic(const CubicFamily& family);

}  // namespace b1f::cubic
