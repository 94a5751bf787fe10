#include <gtest/gtest.h>

#include <numeric>

#include "b1f/balance.hpp"
#include "b1f/cubic.hpp"
#include "b1f/onetwo.hpp"
#include "b1f/onethree.hpp"
#include "b1f/search.hpp"
#include "oracles.hpp"

namespace b1f {
namespace {

using Status = ExistenceOutcome::Status;

std::set<oracle::FactorSet> enumerated(const CirculantGraph& g, SearchOptions opts = {}) {
  std::set<oracle::FactorSet> out;
  enumerate_factorisations(g, opts, [&](const OneFactorisation& f) {
    EXPECT_TRUE(out.insert(oracle::as_factor_set(f)).second) << "duplicate in " << g.name();
    return true;
  });
  return out;
}

TEST(Search, CompleteGraphOnFourVertices) {
  EXPECT_EQ(collect_factorisations(CirculantGraph(4, {1, 2})).size(), 1u);
}

TEST(Search, CompleteBipartiteThreeThree) {
  const CirculantGraph g(6, {1, 3});
  const auto colourings = oracle::count_proper_colourings(g);
  EXPECT_EQ(colourings % 6, 0u);
  EXPECT_EQ(collect_factorisations(g).size(), colourings / 6);
  SearchOptions all;
  all.symmetry_break = false;
  EXPECT_EQ(collect_factorisations(g, all).size(), colourings);
}

TEST(Search, EqualsNaiveGeneratorUpToOrderTen) {
  for (int order = 4; order <= 10; order += 2) {
    for (int a = 1; a <= order / 2; ++a) {
      for (int b = a + 1; b <= order / 2; ++b) {
        if (std::gcd(order, std::gcd(a, b)) != 1) continue;
        const CirculantGraph g(order, {a, b});
        EXPECT_EQ(enumerated(g), oracle::naive_factorisations(g)) << g.name();
      }
    }
  }
}

TEST(Search, WithoutSymmetryBreakingEveryLabellingAppears) {
  const CirculantGraph g(8, {1, 3});
  const auto broken = collect_factorisations(g).size();
  SearchOptions opts;
  opts.symmetry_break = false;
  EXPECT_EQ(collect_factorisations(g, opts).size(), broken * 24);
}

TEST(Search, EveryResultValidatesAndVertexZeroIsOrdered) {
  const CirculantGraph g(12, {1, 3});
  for (const auto& f : collect_factorisations(g)) {
    const auto nb = g.neighbours(0);
    for (std::size_t i = 0; i < nb.size(); ++i) EXPECT_EQ(f.factor_of(Edge(0, nb[i])), static_cast<int>(i));
  }
}

TEST(Search, LimitAndBudget) {
  const CirculantGraph g(14, {1, 3});
  SearchOptions opts;
  opts.limit = 5;
  std::uint64_t seen = 0;
  const auto r = enumerate_factorisations(g, opts, [&](const OneFactorisation&) { return ++seen, true; });
  EXPECT_EQ(r.count, 5u);
  EXPECT_FALSE(r.complete);

  opts = {};
  opts.node_budget = 50;
  const auto cut = enumerate_factorisations(g, opts, [](const OneFactorisation&) { return true; });
  EXPECT_FALSE(cut.complete);
  EXPECT_EQ(cut.nodes, 50u);
  EXPECT_EQ(exists_mb1f(CirculantGraph(16, {1, 3}), 6, opts).status, Status::Unknown);

  const auto full = enumerate_factorisations(g, {}, [](const OneFactorisation&) { return true; });
  EXPECT_TRUE(full.complete);
  opts.node_budget = full.nodes;
  EXPECT_TRUE(enumerate_factorisations(g, opts, [](const OneFactorisation&) { return true; }).complete);

  EXPECT_THROW(check_options(SearchOptions{.limit = 0}), Error);
  EXPECT_THROW(check_options(SearchOptions{.node_budget = 0}), Error);
  EXPECT_THROW(check_options(SearchOptions{.workers = 0}), Error);
}

TEST(Search, VisitorCanStop) {
  int calls = 0;
  const auto r = enumerate_factorisations(CirculantGraph(12, {1, 3}), {}, [&](const OneFactorisation&) {
    return ++calls < 3;
  });
  EXPECT_EQ(calls, 3);
  EXPECT_FALSE(r.complete);
}

TEST(Search, Errors) {
  auto code = [](const CirculantGraph& g) {
    try {
      collect_factorisations(g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidParams;
  };
  EXPECT_EQ(code(CirculantGraph(12, {1, 2, 3})), ErrorCode::NotRegular34);
  EXPECT_EQ(code(CirculantGraph(12, {1})), ErrorCode::NotRegular34);
  EXPECT_EQ(code(CirculantGraph(12, {2, 4})), ErrorCode::Disconnected);
  EXPECT_EQ(code(CirculantGraph(16, {2, 8})), ErrorCode::Disconnected);
}

TEST(Search, ParallelMatchesSequential) {
  for (const auto& g : {CirculantGraph(14, {1, 3}), CirculantGraph(16, {2, 5}), CirculantGraph(18, {1, 9})}) {
    const auto one = collect_factorisations(g);
    for (unsigned w : {2u, 4u}) {
      SearchOptions opts;
      opts.workers = w;
      EXPECT_EQ(collect_factorisations(g, opts), one) << g.name() << " workers=" << w;
    }
  }
}

TEST(Search, ParallelBudgetAndLimitMatchSequential) {
  const CirculantGraph g(16, {1, 3});
  for (std::uint64_t budget : {1ull, 37ull, 500ull, 4000ull}) {
    SearchOptions seq;
    seq.node_budget = budget;
    SearchOptions par = seq;
    par.workers = 4;
    std::vector<OneFactorisation> a, b;
    const auto ra = enumerate_factorisations(g, seq, [&](const OneFactorisation& f) { return a.push_back(f), true; });
    const auto rb = enumerate_factorisations(g, par, [&](const OneFactorisation& f) { return b.push_back(f), true; });
    EXPECT_EQ(a, b) << budget;
    EXPECT_EQ(ra.nodes, rb.nodes) << budget;
    EXPECT_EQ(ra.complete, rb.complete) << budget;
  }
  SearchOptions lim;
  lim.limit = 7;
  SearchOptions lim4 = lim;
  lim4.workers = 4;
  EXPECT_EQ(collect_factorisations(g, lim), collect_factorisations(g, lim4));
  for (int m : {1, 2, 3}) {
    const auto s = exists_mb1f(g, m);
    const auto p = exists_mb1f(g, m, lim4);
    EXPECT_EQ(s.status, p.status);
    EXPECT_EQ(s.nodes, p.nodes);
    EXPECT_EQ(s.witness, p.witness);
  }
}

TEST(Existence, PaperClaims) {
  EXPECT_EQ(exists_mb1f(CirculantGraph(14, {1, 7}), 3).status, Status::NotFound);
  EXPECT_EQ(exists_mb1f(CirculantGraph(14, {2, 7}), 3).status, Status::NotFound);
  EXPECT_EQ(exists_mb1f(CirculantGraph(16, {1, 3}), 6).status, Status::NotFound);
  EXPECT_EQ(exists_mb1f(CirculantGraph(12, {1, 6}), 3).status, Status::Found);
  const auto found = exists_mb1f(CirculantGraph(18, {1, 3}), 6);
  ASSERT_EQ(found.status, Status::Found);
  EXPECT_TRUE(classify_balance(*found.witness).is_m_balanced(6));
}

TEST(Existence, NoBalancedFactorisationOfOneTwoForNFiveAndSeven) {
  for (int n : {5, 7}) {
    for (const auto& f : collect_factorisations(CirculantGraph(2 * n, {1, 2}))) {
      EXPECT_FALSE(classify_balance(f).is_balanced()) << n;
    }
  }
}

TEST(Existence, ConstructionsAreFoundBySearch) {
  std::vector<std::pair<OneFactorisation, int>> built{
      {cubic::construct_one_n(6), 3},  {cubic::construct_one_n(8), 3},  {onetwo::construct_order8(), 2},
      {onetwo::construct_rotation(6), 2}};
  for (auto [m, order] : onethree::supported_bases()) {
    if (order <= 16) built.emplace_back(onethree::base_factorisation(m, order), m);
  }
  for (const auto& [f, m] : built) {
    EXPECT_EQ(exists_mb1f(f.graph(), m).status, Status::Found) << f.graph().name() << " m=" << m;
  }
}

TEST(Existence, ProfileMatchesSingleQueries) {
  const CirculantGraph g(12, {1, 3});
  const std::array<int, 4> ms{1, 2, 3, 6};
  const auto profile = existence_profile(g, ms);
  for (int m : ms) {
    const auto single = exists_mb1f(g, m);
    EXPECT_EQ(profile.at(m).status, single.status) << m;
    EXPECT_EQ(profile.at(m).witness, single.witness) << m;
  }
}

TEST(Table, SmallOrders) {
  const auto rows = existence_table(10);
  auto find = [&](int order, std::vector<int> set) -> const TableRow& {
    for (const auto& r : rows) {
      if (r.order == order && r.connection_set == set) return r;
    }
    throw std::runtime_error("row missing");
  };
  EXPECT_EQ(find(4, {1, 2}).cells.at(1), TableCell::Found);
  EXPECT_EQ(find(4, {1, 2}).cells.at(2), TableCell::Infeasible);
  const auto& r8 = find(8, {1, 2});
  EXPECT_EQ(r8.cells.at(1), TableCell::None);
  EXPECT_EQ(r8.cells.at(2), TableCell::Found);
  EXPECT_EQ(r8.cells.at(3), TableCell::None);
  EXPECT_EQ(r8.cells.at(6), TableCell::None);
  EXPECT_EQ(find(10, {1, 3}).cells.at(2), TableCell::Found);
  // One row per isomorphism class: {3,4} on 10 vertices is {1,2} times 3.
  for (const auto& r : rows) EXPECT_FALSE(r.order == 10 && r.connection_set == (std::vector<int>{3, 4}));
  EXPECT_TRUE(std::is_sorted(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.order, a.connection_set) < std::tie(b.order, b.connection_set);
  }));
  EXPECT_THROW(existence_table(9), Error);
}

TEST(Table, FourteenOneThreeHasTwoBalanced) {
  const auto rows = existence_table(14);
  bool seen = false;
  for (const auto& r : rows) {
    if (r.order == 14 && r.connection_set == std::vector<int>{1, 3}) {
      seen = true;
      EXPECT_EQ(r.cells.at(2), TableCell::Found);
    }
  }
  EXPECT_TRUE(seen);
}

}  // namespace
}  // namespace b1f
