#include "b1f/rotation.hpp"

#include <algorithm>

#include "construct_util.hpp"

namespace b1f::rotation {

std::vector<int> RotationParams::connection_set() const {
  return {1, variant == Variant::Span ? ell : 2 * ell};
}

const char* to_string(Variant v) noexcept {
  return v == Variant::Span ? "span" : "double-span";
}

Variant parse_variant(const std::string& text) {
  if (text == "span") return Variant::Span;
  if (text == "double-span") return Variant::DoubleSpan;
  throw Error(ErrorCode::InvalidParams, "unknown variant '" + text + "' (expected span or double-span)");
}

void check_params(const RotationParams& p) {
  if (p.ell <= 0 || p.ell % 2 != 0) throw Error(ErrorCode::InvalidParams, "ell must be even and positive");
  if (p.a < 1) throw Error(ErrorCode::InvalidParams, "a must be positive");
  const int n = p.order() / 2;
  if (n <= 3) throw Error(ErrorCode::InvalidParams, "order 3*ell*a must exceed 6");
  const int chord = p.connection_set()[1];
  if (chord >= n) {
    throw Error(ErrorCode::InvalidParams, "chord length " + std::to_string(chord) + " must be below order/2 = " +
                                              std::to_string(n) + (p.variant == Variant::DoubleSpan ? " (double-span needs a >= 2)" : ""));
  }
}

OneFactorisation construct_general(const RotationParams& p) {
  check_params(p);
  const CirculantGraph g(p.order(), p.connection_set());
  const long long order = p.order();
  const long long ell = p.ell;
  const long long window = 3 * ell;
  const long long chord = g.connections()[1];
  // 1-edges of F1 start at these residues modulo 3*ell.
  const long long ones_from = p.variant == Variant::Span ? 2 * ell : ell;

  std::vector<detail::FactorBuilder> rotating(3, detail::FactorBuilder(g));
  detail::FactorBuilder odd(g);
  for (long long x = 0; x < order; ++x) {
    const long long r = x % window;
    const bool chord_start = r < ell;
    const bool one_start = r >= ones_from && r < ones_from + ell && (r - ones_from) % 2 == 0;
    if (!chord_start && !one_start) continue;
    const long long y = chord_start ? x + chord : x + 1;
    for (long long i = 0; i < 3; ++i) rotating[static_cast<std::size_t>(i)].add(x + i * ell, y + i * ell);
  }
  for (long long x = 1; x < order; x += 2) odd.add(x, x + 1);
  return detail::assemble(g, {rotating[0].take(), rotating[1].take(), rotating[2].take(), odd.take()});
}

std::vector<CycleType> expected_types_general(const RotationParams& p) {
  check_params(p);
  std::vector<int> first{p.a * (p.ell + 4)};
  first.insert(first.end(), static_cast<std::size_t>(p.a * (p.ell / 2 - 1)), 4);
  std::vector<CycleType> out{CycleType(std::move(first)),
                             CycleType(std::vector<int>(static_cast<std::size_t>(p.ell * p.a / 2), 6))};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace b1f::rotation
