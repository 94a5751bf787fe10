#pragma once

// Circ(2n,{1,3}): the explicit base factorisations, the gap / Condition C
// predicates and the four-vertex extension with its type bookkeeping.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "b1f/balance.hpp"
#include "b1f/graph.hpp"

namespace b1f::onethree {

struct GapWitness {
  std::size_t factor = 0;
  Vertex v = 0;  // gap at (v, v+1)
};

// True iff f avoids {v,v+1}, {v-2,v+1}, {v,v+3} and {v-1,v+2}. Throws
// WrongConnectionSet unless g is Circ(2n,{1,3}).
bool has_gap(const CirculantGraph& g, const OneFactor& f, Vertex v);

// order[i] is the factor index playing F_{i+1}: gaps at (i,i+1) for
// i = 0..3, {2,3} in F_1 and {1,2} in F_4.
struct ConditionCCertificate {
  std::array<std::size_t, 4> order{};
};

std::optional<ConditionCCertificate> satisfies_condition_c(const OneFactorisation& f);

// An isomorphic copy v -> s*v + t (s = +-1) that satisfies Condition C, if
// any rotation or reflection yields one. Returns f itself when it already does.
std::optional<OneFactorisation> condition_c_form(const OneFactorisation& f);

// Factor F_i keeps endpoints below i and shifts the rest by 4, then gains
// {i,i+3} and {i+1,i+2}. Throws ConditionCNotSatisfied.
OneFactorisation extend_once(const OneFactorisation& f);
OneFactorisation extend(const OneFactorisation& f, int k);

// Factor pairs in certificate order: R = F_1, B = F_2, G = F_3, Y = F_4.
enum class PairRole { RB, BG, GY, RG, BY, RY };
inline constexpr std::array<PairRole, 6> kPairRoles{PairRole::RB, PairRole::BG, PairRole::GY,
                                                    PairRole::RG, PairRole::BY, PairRole::RY};
const char* to_string(PairRole role) noexcept;

enum class ConditionRow {
  OneOnCycle,      // RB: 1
  TwoOnCycle,      // BG: 2
  ThreeOnCycle,    // GY: 3
  OneTwoShared,    // RG: 1 and 2 on one cycle
  OneTwoSplit,     // RG: 1 and 2 on different cycles
  TwoThreeShared,  // BY: 2 and 3 on one cycle
  TwoThreeSplit,   // BY: 2 and 3 on different cycles
  ZeroOnCycle,     // RY: 0
};

struct VertexCondition {
  PairRole role = PairRole::RB;
  FactorPair factors;              // actual factor indices, smaller first
  ConditionRow row = ConditionRow::OneOnCycle;
  std::vector<Vertex> special;     // the row's special vertices
  std::vector<int> cycle_lengths;  // length of the cycle through each special vertex
  bool shared = true;              // all special vertices on one cycle
};

// Throws ConditionCNotSatisfied.
VertexCondition vertex_condition(const OneFactorisation& f, PairRole role);

// Pair types of extend(f, k), keyed by factor indices (i < j). Throws
// ConditionCNotSatisfied.
std::map<FactorPair, CycleType> predict_types(const OneFactorisation& f, int k);

// (m, order) pairs with a transcribed base.
std::vector<std::pair<int, int>> supported_bases();

// Throws UnsupportedBase.
OneFactorisation base_factorisation(int m, int order);

// An m-B1F of Circ(2n,{1,3}), m in {2,3,6}. Throws ParameterError.
OneFactorisation construct_13(int m, int n);

}  // namespace b1f::onethree
