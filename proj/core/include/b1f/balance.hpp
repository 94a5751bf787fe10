#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "b1f/graph.hpp"

namespace b1f {

using PairProfile = std::map<CycleType, int>;
using FactorPair = std::pair<std::size_t, std::size_t>;

// How many of the C(r,2) factor pairs have each type.
PairProfile pair_profile(const OneFactorisation& f);

struct BalanceReport {
  std::map<FactorPair, CycleType> pair_types;  // keys (i, j) with i < j
  PairProfile profile;
  // Set iff every type occurs equally often; then it is the number of types.
  std::optional<int> balanced_m;
  bool is_uniform = false;  // 1-balanced
  bool is_perfect = false;  // uniform with a Hamiltonian common type

  bool is_balanced() const noexcept { return balanced_m.has_value(); }
  bool is_m_balanced(int m) const noexcept { return balanced_m == m; }
  std::string verdict() const;  // "MBalanced(3)" or "Unbalanced"
};

BalanceReport classify_balance(const OneFactorisation& f);

// m can only be the number of balanced types if it divides C(r,2).
bool is_feasible(int regularity, int m) noexcept;

}  // namespace b1f
