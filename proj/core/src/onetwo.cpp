#include "b1f/onetwo.hpp"

#include <algorithm>
#include <set>

#include "construct_util.hpp"

namespace b1f::onetwo {

namespace {

void require_one_two(const CirculantGraph& g) {
  const auto d = g.connections();
  if (d.size() != 2 || d[0] != 1 || d[1] != 2 || g.order() < 6) {
    throw Error(ErrorCode::WrongConnectionSet, g.name() + " is not Circ(2n,{1,2}) with n >= 3");
  }
}

}  // namespace

EdgeSpan span_of(const CirculantGraph& g, const Edge& e) {
  require_one_two(g);
  switch (g.distance(e.u, e.v)) {
    case 1: return EdgeSpan::OneEdge;
    case 2: return EdgeSpan::TwoEdge;
    default: throw Error(ErrorCode::WrongConnectionSet, to_string(e) + " is not an edge of " + g.name());
  }
}

Configuration configuration_class(const OneFactorisation& f, Vertex v) {
  const auto& g = f.graph();
  require_one_two(g);
  Configuration c;
  c.anchor = Edge(g.wrap(v), g.wrap(v + 1LL));
  c.members = {Edge(g.wrap(v - 1LL), g.wrap(v + 1LL)), c.anchor, Edge(g.wrap(v), g.wrap(v + 2LL))};
  std::set<int> distinct;
  for (std::size_t i = 0; i < 3; ++i) {
    c.factor[i] = f.factor_of(c.members[i]);
    distinct.insert(c.factor[i]);
  }
  c.k = static_cast<int>(distinct.size());
  return c;
}

OneFactorisation construct_order8() {
  const CirculantGraph g(8, {1, 2});
  return detail::assemble(g, {
                                 {{0, 1}, {2, 3}, {4, 5}, {6, 7}},
                                 {{0, 2}, {1, 3}, {4, 6}, {5, 7}},
                                 {{0, 6}, {1, 7}, {2, 4}, {3, 5}},
                                 {{0, 7}, {1, 2}, {3, 4}, {5, 6}},
                             });
}

OneFactorisation construct_rotation(int n) {
  if (n >= 5 && n % 3 != 0) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::ProvenNonexistent,
                         "Circ(2n,{1,2}) has no B1F when n = 1,2 (mod 3) and n >= 5");
  }
  if (n <= 3 || n % 3 != 0) {
    throw ParameterError(ErrorCode::ParameterOutOfRange, RangeReason::Unsupported,
                         "rotation construction needs n = 0 (mod 3) and n > 3");
  }
  const CirculantGraph g(2 * n, {1, 2});
  const long long order = 2LL * n;
  detail::FactorBuilder r(g), gr(g), b(g), y(g);
  for (long long x = 0; x < order; ++x) {
    switch (x % 6) {
      case 0: gr.add(x, x + 2); break;
      case 1: r.add(x, x + 1); b.add(x, x + 2); break;
      case 2: b.add(x, x + 2); break;
      case 3: gr.add(x, x + 1); r.add(x, x + 2); break;
      case 4: r.add(x, x + 2); break;
      case 5: b.add(x, x + 1); gr.add(x, x + 2); break;
    }
    if (x % 2 == 0) y.add(x, x + 1);
  }
  return detail::assemble(g, {r.take(), gr.take(), b.take(), y.take()});
}

StructureReport verify_structure_lemmas(const OneFactorisation& f) {
  const auto& g = f.graph();
  require_one_two(g);
  const int n = g.order();
  StructureReport rep;
  auto fail = [&rep](bool& flag, std::string line) {
    flag = false;
    rep.failures.push_back(std::move(line));
  };
  auto colour = [&](long long a, long long b) { return f.factor_of(Edge(g.wrap(a), g.wrap(b))); };

  std::vector<Configuration> conf;
  conf.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) conf.push_back(configuration_class(f, v));

  int yellow = -1;
  for (Vertex v = 0; v < n; ++v) {
    const auto& c = conf[static_cast<std::size_t>(v)];
    const auto& next = conf[static_cast<std::size_t>((v + 1) % n)];
    const std::string at = " at anchor " + to_string(c.anchor);
    if (c.k != 2 && c.k != 3) fail(rep.configurations_two_or_three, "configuration is a " + std::to_string(c.k) + "-configuration" + at);
    if (c.k == 2 && c.factor[0] != c.factor[2]) fail(rep.two_configuration_two_edges_match, "2-configuration with differently coloured 2-edges" + at);
    if (c.k == next.k) fail(rep.alternating, "adjacent configurations both k=" + std::to_string(c.k) + at);
    if (c.k == 3) {
      const int before = colour(v - 1LL, v);
      const int after = colour(v + 1LL, v + 2LL);
      if (before != after) fail(rep.three_configuration_neighbours_match, "1-edges around 3-configuration differ" + at);
    }
    const bool same_out = colour(v, v + 2LL) == colour(v + 1LL, v + 3LL);
    if ((c.k == 2 && same_out) || (c.k == 3 && !same_out)) fail(rep.out_two_edges, "out 2-edges rule broken" + at);
    if (c.k == 2 && yellow == -1) yellow = c.factor[1];
  }

  std::vector<int> two_edges(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const Edge& e : f.factor(i).edges()) two_edges[i] += g.distance(e.u, e.v) == 2;
    if (two_edges[i] % 2 != 0) fail(rep.even_two_edges_per_factor, "factor " + std::to_string(i) + " has an odd number of 2-edges");
  }

  if (yellow == -1 || two_edges[static_cast<std::size_t>(yellow)] != 0) {
    const auto it = std::find(two_edges.begin(), two_edges.end(), 0);
    yellow = it == two_edges.end() ? -1 : static_cast<int>(it - two_edges.begin());
  }
  rep.yellow = yellow;
  if (yellow == -1) {
    fail(rep.all_one_edge_factor, "no factor consists entirely of 1-edges");
    rep.yellow_unions_hamiltonian = false;
    rep.pair_cycles_zero_or_two_one_edges = false;
    rep.cycle_count_matches = false;
    return rep;
  }

  const auto& y = f.factor(static_cast<std::size_t>(yellow));
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (static_cast<int>(i) == yellow) continue;
    others.push_back(i);
    if (!cycle_type(f.factor(i), y).is_hamiltonian(n)) {
      fail(rep.yellow_unions_hamiltonian, "factor " + std::to_string(i) + " with yellow is not a Hamilton cycle");
    }
  }

  for (std::size_t a = 0; a < others.size(); ++a) {
    for (std::size_t b = a + 1; b < others.size(); ++b) {
      const auto cycles = union_cycles(f.factor(others[a]), f.factor(others[b]));
      int total = 0;
      for (const auto& cyc : cycles) {
        int ones = 0;
        for (std::size_t i = 0; i < cyc.size(); ++i) ones += g.distance(cyc[i], cyc[(i + 1) % cyc.size()]) == 1;
        total += ones;
        if (ones != 0 && ones != 2) {
          fail(rep.pair_cycles_zero_or_two_one_edges, "a cycle of factors " + std::to_string(others[a]) + "," +
                                                          std::to_string(others[b]) + " has " + std::to_string(ones) + " 1-edges");
        }
      }
      const std::size_t expected = total > 0 ? static_cast<std::size_t>(total / 2) : 2;
      if (cycles.size() != expected) {
        fail(rep.cycle_count_matches, "factors " + std::to_string(others[a]) + "," + std::to_string(others[b]) + " have " +
                                          std::to_string(cycles.size()) + " cycles, expected " + std::to_string(expected));
      }
    }
  }
  return rep;
}

}  // namespace b1f::onetwo
