#pragma once

// 2-balanced factorisations of Circ(3*ell*a, {1, ell}) and
// Circ(3*ell*a, {1, 2*ell}) built from one factor and the rotation v -> v + ell.

#include <string>
#include <vector>

#include "b1f/graph.hpp"

namespace b1f::rotation {

enum class Variant { Span, DoubleSpan };

struct RotationParams {
  int ell = 2;  // even, positive
  int a = 1;
  Variant variant = Variant::Span;

  int order() const noexcept { return 3 * ell * a; }
  // {1, ell} or {1, 2*ell}
  std::vector<int> connection_set() const;
};

const char* to_string(Variant v) noexcept;
// "span" / "double-span"; throws Error(InvalidParams).
Variant parse_variant(const std::string& text);

// Throws Error(InvalidParams) for odd ell, a < 1, n <= 3, or a chord length
// that is not below order/2.
void check_params(const RotationParams& p);

// Factors F1, F2 = F1 + ell, F3 = F2 + ell, F4 = {x, x+1 : x odd}.
OneFactorisation construct_general(const RotationParams& p);

// [a(ell+4), 4^{a(ell/2-1)}] and [6^{ell*a/2}], sorted.
std::vector<CycleType> expected_types_general(const RotationParams& p);

}  // namespace b1f::rotation
