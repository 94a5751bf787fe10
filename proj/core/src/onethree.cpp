#include "b1f/onethree.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "construct_util.hpp"

namespace b1f::onethree {

namespace {

struct Base {
  int m;
  int order;
  std::vector<EdgeList> factors;  // R, B, G, Y as printed
};

// The printed (3,18) list skips vertices 14 and 15 and runs up to 19; it is
// stored here with 16..19 moved down to 14..17.
const std::vector<Base>& bases() {
  static const std::vector<Base> table{
    {2, 10, {
        {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}},
        {{0, 3}, {1, 2}, {4, 7}, {5, 8}, {6, 9}},
        {{0, 9}, {1, 4}, {2, 5}, {3, 6}, {7, 8}},
        {{0, 7}, {1, 8}, {2, 9}, {3, 4}, {5, 6}},
    }},
    {2, 12, {
        {{0, 1}, {2, 5}, {3, 4}, {6, 9}, {7, 10}, {8, 11}},
        {{0, 3}, {1, 4}, {2, 11}, {5, 6}, {7, 8}, {9, 10}},
        {{0, 11}, {1, 10}, {2, 3}, {4, 5}, {6, 7}, {8, 9}},
        {{0, 9}, {1, 2}, {3, 6}, {4, 7}, {5, 8}, {10, 11}},
    }},
    {2, 14, {
        {{0, 13}, {1, 4}, {2, 3}, {5, 8}, {6, 7}, {9, 12}, {10, 11}},
        {{0, 1}, {2, 5}, {3, 6}, {4, 7}, {8, 9}, {10, 13}, {11, 12}},
        {{0, 11}, {1, 12}, {2, 13}, {3, 4}, {5, 6}, {7, 8}, {9, 10}},
        {{0, 3}, {1, 2}, {4, 5}, {6, 9}, {7, 10}, {8, 11}, {12, 13}},
    }},
    {2, 16, {
        {{0, 15}, {1, 4}, {2, 3}, {5, 8}, {6, 9}, {7, 10}, {11, 14}, {12, 13}},
        {{0, 13}, {1, 14}, {2, 5}, {3, 4}, {6, 7}, {8, 9}, {10, 11}, {12, 15}},
        {{0, 1}, {2, 15}, {3, 6}, {4, 5}, {7, 8}, {9, 10}, {11, 12}, {13, 14}},
        {{0, 3}, {1, 2}, {4, 7}, {5, 6}, {8, 11}, {9, 12}, {10, 13}, {14, 15}},
    }},
    {3, 12, {
        {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 11}},
        {{0, 3}, {1, 2}, {4, 7}, {5, 6}, {8, 11}, {9, 10}},
        {{0, 11}, {1, 10}, {2, 5}, {3, 4}, {6, 9}, {7, 8}},
        {{0, 9}, {1, 4}, {2, 11}, {3, 6}, {5, 8}, {7, 10}},
    }},
    {3, 14, {
        {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}, {10, 13}, {11, 12}},
        {{0, 13}, {1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 12}, {10, 11}},
        {{0, 3}, {1, 4}, {2, 5}, {6, 9}, {7, 10}, {8, 11}, {12, 13}},
        {{0, 11}, {1, 12}, {2, 13}, {3, 6}, {4, 7}, {5, 8}, {9, 10}},
    }},
    {3, 16, {
        {{0, 1}, {2, 3}, {4, 5}, {6, 9}, {7, 8}, {10, 13}, {11, 14}, {12, 15}},
        {{0, 3}, {1, 4}, {2, 15}, {5, 6}, {7, 10}, {8, 11}, {9, 12}, {13, 14}},
        {{0, 15}, {1, 14}, {2, 5}, {3, 6}, {4, 7}, {8, 9}, {10, 11}, {12, 13}},
        {{0, 13}, {1, 2}, {3, 4}, {5, 8}, {6, 7}, {9, 10}, {11, 12}, {14, 15}},
    }},
    {3, 18, {
        {{0, 15}, {1, 4}, {2, 3}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}, {16, 17}},
        {{0, 17}, {1, 16}, {2, 5}, {3, 4}, {6, 7}, {8, 9}, {10, 11}, {12, 13}, {14, 15}},
        {{0, 1}, {2, 17}, {3, 6}, {4, 7}, {5, 8}, {9, 12}, {10, 13}, {11, 14}, {15, 16}},
        {{0, 3}, {1, 2}, {4, 5}, {6, 9}, {7, 10}, {8, 11}, {12, 15}, {13, 16}, {14, 17}},
    }},
    {3, 20, {
        {{0, 19}, {1, 4}, {2, 3}, {5, 8}, {6, 9}, {7, 10}, {11, 14}, {12, 13}, {15, 16}, {17, 18}},
        {{0, 17}, {1, 18}, {2, 5}, {3, 4}, {6, 7}, {8, 11}, {9, 12}, {10, 13}, {14, 15}, {16, 19}},
        {{0, 1}, {2, 19}, {3, 6}, {4, 5}, {7, 8}, {9, 10}, {11, 12}, {13, 16}, {14, 17}, {15, 18}},
        {{0, 3}, {1, 2}, {4, 7}, {5, 6}, {8, 9}, {10, 11}, {12, 15}, {13, 14}, {16, 17}, {18, 19}},
    }},
    {6, 18, {
        {{0, 1}, {2, 3}, {4, 5}, {6, 9}, {7, 8}, {10, 11}, {12, 13}, {14, 17}, {15, 16}},
        {{0, 17}, {1, 2}, {3, 4}, {5, 6}, {7, 10}, {8, 9}, {11, 14}, {12, 15}, {13, 16}},
        {{0, 3}, {1, 4}, {2, 5}, {6, 7}, {8, 11}, {9, 12}, {10, 13}, {14, 15}, {16, 17}},
        {{0, 15}, {1, 16}, {2, 17}, {3, 6}, {4, 7}, {5, 8}, {9, 10}, {11, 12}, {13, 14}},
    }},
    {6, 20, {
        {{0, 19}, {1, 4}, {2, 3}, {5, 8}, {6, 7}, {9, 10}, {11, 12}, {13, 16}, {14, 17}, {15, 18}},
        {{0, 1}, {2, 5}, {3, 6}, {4, 7}, {8, 9}, {10, 13}, {11, 14}, {12, 15}, {16, 19}, {17, 18}},
        {{0, 17}, {1, 18}, {2, 19}, {3, 4}, {5, 6}, {7, 10}, {8, 11}, {9, 12}, {13, 14}, {15, 16}},
        {{0, 3}, {1, 2}, {4, 5}, {6, 9}, {7, 8}, {10, 11}, {12, 13}, {14, 15}, {16, 17}, {18, 19}},
    }},
    {6, 22, {
        {{0, 19}, {1, 4}, {2, 3}, {5, 6}, {7, 8}, {9, 12}, {10, 11}, {13, 14}, {15, 16}, {17, 18}, {20, 21}},
        {{0, 21}, {1, 20}, {2, 5}, {3, 6}, {4, 7}, {8, 11}, {9, 10}, {12, 13}, {14, 15}, {16, 17}, {18, 19}},
        {{0, 1}, {2, 21}, {3, 4}, {5, 8}, {6, 9}, {7, 10}, {11, 12}, {13, 16}, {14, 17}, {15, 18}, {19, 20}},
        {{0, 3}, {1, 2}, {4, 5}, {6, 7}, {8, 9}, {10, 13}, {11, 14}, {12, 15}, {16, 19}, {17, 20}, {18, 21}},
    }},
  };
  return table;
}

void require_one_three(const CirculantGraph& g) {
  const auto d = g.connections();
  if (d.size() != 2 || d[0] != 1 || d[1] != 3 || g.order() < 8) {
    throw Error(ErrorCode::WrongConnectionSet, g.name() + " is not Circ(2n,{1,3}) with n >= 4");
  }
}

ConditionCCertificate require_certificate(const OneFactorisation& f) {
  auto cert = satisfies_condition_c(f);
  if (!cert) throw Error(ErrorCode::ConditionCNotSatisfied, "factorisation of " + f.graph().name() + " does not satisfy Condition C");
  return *cert;
}

struct RoleSpec {
  int first;   // position in certificate order
  int second;
  std::vector<Vertex> special;
};

RoleSpec role_spec(PairRole role) {
  switch (role) {
    case PairRole::RB: return {0, 1, {1}};
    case PairRole::BG: return {1, 2, {2}};
    case PairRole::GY: return {2, 3, {3}};
    case PairRole::RG: return {0, 2, {1, 2}};
    case PairRole::BY: return {1, 3, {2, 3}};
    case PairRole::RY: return {0, 3, {0}};
  }
  return {0, 1, {1}};
}

ConditionRow row_for(PairRole role, bool shared) {
  switch (role) {
    case PairRole::RB: return ConditionRow::OneOnCycle;
    case PairRole::BG: return ConditionRow::TwoOnCycle;
    case PairRole::GY: return ConditionRow::ThreeOnCycle;
    case PairRole::RG: return shared ? ConditionRow::OneTwoShared : ConditionRow::OneTwoSplit;
    case PairRole::BY: return shared ? ConditionRow::TwoThreeShared : ConditionRow::TwoThreeSplit;
    case PairRole::RY: return ConditionRow::ZeroOnCycle;
  }
  return ConditionRow::OneOnCycle;
}

// Lengths of the union cycles plus, for each special vertex, the index of the
// cycle through it.
struct Located {
  std::vector<int> lengths;
  std::vector<std::size_t> cycle_of_special;
};

Located locate(const OneFactor& a, const OneFactor& b, const std::vector<Vertex>& special) {
  const auto cycles = union_cycles(a, b);
  Located out;
  std::vector<std::size_t> cycle_of(static_cast<std::size_t>(a.order()));
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    out.lengths.push_back(static_cast<int>(cycles[c].size()));
    for (Vertex v : cycles[c]) cycle_of[static_cast<std::size_t>(v)] = c;
  }
  for (Vertex v : special) out.cycle_of_special.push_back(cycle_of[static_cast<std::size_t>(v)]);
  return out;
}

[[noreturn]] void below_threshold(int m, int n, int threshold) {
  const std::string what = std::to_string(m) + "-B1F of Circ(" + std::to_string(2 * n) + ",{1,3})";
  if (n < 4) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::Degenerate,
                         "no " + what + ": the graph is not 4-regular for n < 4");
  }
  throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::ProvenNonexistent,
                       "no " + what + " (needs n >= " + std::to_string(threshold) + ")");
}

}  // namespace

bool has_gap(const CirculantGraph& g, const OneFactor& f, Vertex v) {
  require_one_three(g);
  if (f.order() != g.order()) throw Error(ErrorCode::OrderMismatch, "factor order differs from " + g.name());
  const long long x = v;
  const std::array<Edge, 4> forbidden{Edge(g.wrap(x), g.wrap(x + 1)), Edge(g.wrap(x - 2), g.wrap(x + 1)),
                                      Edge(g.wrap(x), g.wrap(x + 3)), Edge(g.wrap(x - 1), g.wrap(x + 2))};
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const Edge& e) { return f.contains(e); });
}

std::optional<ConditionCCertificate> satisfies_condition_c(const OneFactorisation& f) {
  const auto& g = f.graph();
  require_one_three(g);
  if (f.size() != 4) return std::nullopt;
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  do {
    bool ok = f.factor(order[0]).contains(Edge(2, 3)) && f.factor(order[3]).contains(Edge(1, 2));
    for (std::size_t i = 0; ok && i < 4; ++i) ok = has_gap(g, f.factor(order[i]), static_cast<Vertex>(i));
    if (ok) return ConditionCCertificate{order};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::optional<OneFactorisation> condition_c_form(const OneFactorisation& f) {
  require_one_three(f.graph());
  for (int sign : {1, -1}) {
    for (int shift = 0; shift < f.graph().order(); ++shift) {
      auto image = f.relabelled(sign, shift);
      if (satisfies_condition_c(image)) return image;
    }
  }
  return std::nullopt;
}

OneFactorisation extend_once(const OneFactorisation& f) {
  const auto cert = require_certificate(f);
  const int order = f.graph().order();
  const CirculantGraph g(order + 4, {1, 3});
  std::vector<EdgeList> out(4);
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex t = static_cast<Vertex>(i) + 1;
    auto lift = [t](Vertex v) { return v < t ? v : v + 4; };
    auto& edges = out[cert.order[i]];
    for (const Edge& e : f.factor(cert.order[i]).edges()) edges.emplace_back(lift(e.u), lift(e.v));
    edges.emplace_back(t, t + 3);
    edges.emplace_back(t + 1, t + 2);
  }
  return detail::assemble(g, std::move(out));
}

OneFactorisation extend(const OneFactorisation& f, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidParams, "extension count must be non-negative");
  if (k == 0) {
    require_certificate(f);
    return f;
  }
  OneFactorisation current = extend_once(f);
  for (int i = 1; i < k; ++i) current = extend_once(current);
  return current;
}

const char* to_string(PairRole role) noexcept {
  switch (role) {
    case PairRole::RB: return "RB";
    case PairRole::BG: return "BG";
    case PairRole::GY: return "GY";
    case PairRole::RG: return "RG";
    case PairRole::BY: return "BY";
    case PairRole::RY: return "RY";
  }
  return "?";
}

VertexCondition vertex_condition(const OneFactorisation& f, PairRole role) {
  const auto cert = require_certificate(f);
  const auto spec = role_spec(role);
  const std::size_t a = cert.order[static_cast<std::size_t>(spec.first)];
  const std::size_t b = cert.order[static_cast<std::size_t>(spec.second)];
  const auto located = locate(f.factor(a), f.factor(b), spec.special);

  VertexCondition vc;
  vc.role = role;
  vc.factors = {std::min(a, b), std::max(a, b)};
  vc.special = spec.special;
  for (std::size_t c : located.cycle_of_special) vc.cycle_lengths.push_back(located.lengths[c]);
  vc.shared = std::adjacent_find(located.cycle_of_special.begin(), located.cycle_of_special.end(),
                                 std::not_equal_to<>()) == located.cycle_of_special.end();
  vc.row = row_for(role, vc.shared);
  return vc;
}

std::map<FactorPair, CycleType> predict_types(const OneFactorisation& f, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidParams, "extension count must be non-negative");
  const auto cert = require_certificate(f);
  std::map<FactorPair, CycleType> out;
  for (PairRole role : kPairRoles) {
    const auto spec = role_spec(role);
    const std::size_t a = cert.order[static_cast<std::size_t>(spec.first)];
    const std::size_t b = cert.order[static_cast<std::size_t>(spec.second)];
    auto located = locate(f.factor(a), f.factor(b), spec.special);
    const auto& at = located.cycle_of_special;
    if (at.size() == 2 && at[0] != at[1]) {
      located.lengths[at[0]] += 2 * k;
      located.lengths[at[1]] += 2 * k;
    } else {
      located.lengths[at[0]] += 4 * k;
    }
    out.emplace(FactorPair{std::min(a, b), std::max(a, b)}, CycleType(std::move(located.lengths)));
  }
  return out;
}

std::vector<std::pair<int, int>> supported_bases() {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : bases()) out.emplace_back(b.m, b.order);
  return out;
}

OneFactorisation base_factorisation(int m, int order) {
  for (const auto& b : bases()) {
    if (b.m == m && b.order == order) return detail::assemble(CirculantGraph(order, {1, 3}), b.factors);
  }
  throw Error(ErrorCode::UnsupportedBase,
              "no base " + std::to_string(m) + "-B1F of Circ(" + std::to_string(order) + ",{1,3})");
}

OneFactorisation construct_13(int m, int n) {
  int threshold = 0;
  switch (m) {
    case 2: threshold = 5; break;
    case 3: threshold = 6; break;
    case 6: threshold = 9; break;
    default:
      throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::Unsupported,
                           "Circ(2n,{1,3}) constructions exist for m in {2,3,6}, not m = " + std::to_string(m));
  }
  if (n < threshold) below_threshold(m, n, threshold);

  const int order = 2 * n;
  int base = 0;
  switch (m) {
    case 2: base = n <= 6 ? order : (n % 2 == 1 ? 14 : 16); break;
    case 3: base = n <= 8 ? order : (n % 2 == 1 ? 18 : 20); break;
    case 6: base = n == 9 ? 18 : (n % 2 == 0 ? 20 : 22); break;
  }
  auto f = base_factorisation(m, base);
  return base == order ? f : extend(f, (order - base) / 4);
}

}  // namespace b1f::onethree
