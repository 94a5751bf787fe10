#include <gtest/gtest.h>

#include <set>

#include "b1f/balance.hpp"
#include "b1f/onethree.hpp"

namespace b1f {
namespace {

using onethree::PairRole;

std::map<FactorPair, CycleType> actual_types(const OneFactorisation& f) {
  return classify_balance(f).pair_types;
}

std::set<CycleType> distinct(const OneFactorisation& f) {
  std::set<CycleType> out;
  for (const auto& [pair, t] : actual_types(f)) out.insert(t);
  return out;
}

std::set<CycleType> parse_all(std::initializer_list<const char*> texts) {
  std::set<CycleType> out;
  for (const char* t : texts) out.insert(CycleType::parse(t));
  return out;
}

TEST(Gap, BaseFourteen) {
  const auto f = onethree::base_factorisation(2, 14);
  const auto& g = f.graph();
  EXPECT_TRUE(onethree::has_gap(g, f.factor(0), 0));
  EXPECT_FALSE(onethree::has_gap(g, f.factor(0), 2));  // {2,3} in R
  for (std::size_t i = 0; i < 4; ++i) {
    for (const Edge& e : f.factor(i).edges()) {
      if (g.distance(e.u, e.v) == 1) {
        const Vertex v = (e.v - e.u == 1) ? e.u : e.v;
        EXPECT_FALSE(onethree::has_gap(g, f.factor(i), v));
      }
    }
  }
  EXPECT_THROW(onethree::has_gap(CirculantGraph(14, {1, 2}), f.factor(0), 0), Error);
}

TEST(ConditionC, PrintedBasesThatSatisfyIt) {
  for (auto [m, order] : std::vector<std::pair<int, int>>{{2, 14}, {2, 16}, {3, 18}, {3, 20}, {6, 20}, {6, 22}}) {
    const auto cert = onethree::satisfies_condition_c(onethree::base_factorisation(m, order));
    ASSERT_TRUE(cert) << m << "," << order;
    EXPECT_EQ(cert->order, (std::array<std::size_t, 4>{0, 1, 2, 3})) << m << "," << order;
  }
}

TEST(ConditionC, PrintedBasesThatDoNot) {
  for (auto [m, order] : std::vector<std::pair<int, int>>{{2, 10}, {2, 12}, {3, 12}, {3, 14}, {3, 16}, {6, 18}}) {
    EXPECT_FALSE(onethree::satisfies_condition_c(onethree::base_factorisation(m, order))) << m << "," << order;
  }
}

TEST(ConditionC, RotatedForms) {
  for (auto [m, order] : std::vector<std::pair<int, int>>{{2, 12}, {3, 14}, {3, 16}, {6, 18}}) {
    const auto base = onethree::base_factorisation(m, order);
    const auto form = onethree::condition_c_form(base);
    ASSERT_TRUE(form) << m << "," << order;
    EXPECT_TRUE(onethree::satisfies_condition_c(*form));
    EXPECT_EQ(classify_balance(*form).profile, classify_balance(base).profile);
  }
  for (auto [m, order] : std::vector<std::pair<int, int>>{{2, 10}, {3, 12}}) {
    EXPECT_FALSE(onethree::condition_c_form(onethree::base_factorisation(m, order))) << m << "," << order;
  }
  const auto b14 = onethree::base_factorisation(2, 14);
  EXPECT_EQ(*onethree::condition_c_form(b14), b14);
}

TEST(Bases, PrintedTypes) {
  const std::map<std::pair<int, int>, std::set<CycleType>> printed{
      {{2, 10}, parse_all({"[10]", "[6,4]"})},
      {{2, 12}, parse_all({"[12]", "[8,4]"})},
      {{2, 14}, parse_all({"[14]", "[10,4]"})},
      {{2, 16}, parse_all({"[16]", "[12,4]"})},
      {{3, 12}, parse_all({"[12]", "[6,6]", "[4,4,4]"})},
      {{3, 14}, parse_all({"[14]", "[10,4]", "[8,6]"})},
      {{3, 16}, parse_all({"[12,4]", "[10,6]", "[8,8]"})},
      {{3, 18}, parse_all({"[18]", "[14,4]", "[12,6]"})},
      {{3, 20}, parse_all({"[16,4]", "[14,6]", "[12,8]"})},
      {{6, 18}, parse_all({"[18]", "[14,4]", "[12,6]", "[10,8]", "[10,4,4]", "[8,6,4]"})},
      {{6, 20}, parse_all({"[20]", "[16,4]", "[14,6]", "[12,8]", "[12,4,4]", "[10,6,4]"})},
      // Printed as [8,8,4], which cannot cover 22 vertices.
      {{6, 22}, parse_all({"[22]", "[18,4]", "[16,6]", "[14,8]", "[14,4,4]", "[8,8,6]"})},
  };
  ASSERT_EQ(onethree::supported_bases().size(), printed.size());
  for (auto [m, order] : onethree::supported_bases()) {
    const auto f = onethree::base_factorisation(m, order);
    EXPECT_EQ(f.graph(), CirculantGraph(order, {1, 3}));
    EXPECT_TRUE(classify_balance(f).is_m_balanced(m)) << m << "," << order;
    EXPECT_EQ(distinct(f), printed.at({m, order})) << m << "," << order;
  }
  EXPECT_THROW(onethree::base_factorisation(2, 18), Error);
  EXPECT_THROW(onethree::base_factorisation(4, 16), Error);
}

struct Bullet {
  PairRole role;
  int length;
};

// The vertex conditions stated for each base: the special vertices of each
// pair lie on one cycle of the given length.
TEST(VertexCondition, PrintedBullets) {
  const std::map<std::pair<int, int>, std::vector<Bullet>> bullets{
      {{2, 14}, {{PairRole::RB, 14}, {PairRole::BG, 10}, {PairRole::GY, 10}, {PairRole::RG, 10}, {PairRole::BY, 14}, {PairRole::RY, 14}}},
      {{2, 16}, {{PairRole::RB, 12}, {PairRole::BG, 12}, {PairRole::GY, 16}, {PairRole::RG, 12}, {PairRole::BY, 16}, {PairRole::RY, 16}}},
      {{3, 18}, {{PairRole::RB, 18}, {PairRole::BG, 14}, {PairRole::GY, 18}, {PairRole::RG, 12}, {PairRole::BY, 12}, {PairRole::RY, 14}}},
      {{3, 20}, {{PairRole::RB, 14}, {PairRole::BG, 14}, {PairRole::GY, 16}, {PairRole::RG, 12}, {PairRole::BY, 12}, {PairRole::RY, 16}}},
      {{6, 20}, {{PairRole::RB, 14}, {PairRole::BG, 16}, {PairRole::GY, 12}, {PairRole::RG, 12}, {PairRole::BY, 10}, {PairRole::RY, 20}}},
      {{6, 22}, {{PairRole::RB, 18}, {PairRole::BG, 16}, {PairRole::GY, 22}, {PairRole::RG, 8}, {PairRole::BY, 14}, {PairRole::RY, 14}}},
  };
  for (const auto& [key, list] : bullets) {
    const auto f = onethree::base_factorisation(key.first, key.second);
    for (const Bullet& b : list) {
      const auto vc = onethree::vertex_condition(f, b.role);
      EXPECT_TRUE(vc.shared) << key.second << " " << onethree::to_string(b.role);
      for (int len : vc.cycle_lengths) EXPECT_EQ(len, b.length) << key.second << " " << onethree::to_string(b.role);
    }
  }
}

TEST(VertexCondition, Rows) {
  const auto f = onethree::base_factorisation(2, 16);
  const auto rb = onethree::vertex_condition(f, PairRole::RB);
  EXPECT_EQ(rb.row, onethree::ConditionRow::OneOnCycle);
  EXPECT_EQ(rb.special, std::vector<Vertex>{1});
  EXPECT_EQ(rb.factors, (FactorPair{0, 1}));
  const auto by = onethree::vertex_condition(f, PairRole::BY);
  EXPECT_EQ(by.row, onethree::ConditionRow::TwoThreeShared);
  EXPECT_EQ(by.special, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(by.cycle_lengths, (std::vector<int>{16, 16}));
  EXPECT_EQ(onethree::vertex_condition(f, PairRole::RY).row, onethree::ConditionRow::ZeroOnCycle);
  EXPECT_THROW(onethree::vertex_condition(onethree::base_factorisation(2, 10), PairRole::RB), Error);
}

TEST(Extension, OneStep) {
  const auto e14 = onethree::extend_once(onethree::base_factorisation(2, 14));
  EXPECT_EQ(e14.graph(), CirculantGraph(18, {1, 3}));
  EXPECT_EQ(distinct(e14), parse_all({"[18]", "[14,4]"}));
  EXPECT_TRUE(onethree::satisfies_condition_c(e14));

  const auto e16 = onethree::extend_once(onethree::base_factorisation(2, 16));
  EXPECT_EQ(distinct(e16), parse_all({"[20]", "[16,4]"}));

  const auto twice = onethree::extend_once(e14);
  EXPECT_EQ(twice.graph().order(), 22);
  EXPECT_TRUE(onethree::satisfies_condition_c(twice));
  EXPECT_EQ(twice, onethree::extend(onethree::base_factorisation(2, 14), 2));

  EXPECT_THROW(onethree::extend_once(onethree::base_factorisation(3, 12)), Error);
  EXPECT_THROW(onethree::extend(onethree::base_factorisation(2, 14), -1), Error);
}

TEST(Extension, InsertedEdges) {
  const auto base = onethree::base_factorisation(2, 14);
  const auto e = onethree::extend_once(base);
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex t = static_cast<Vertex>(i) + 1;
    EXPECT_TRUE(e.factor(i).contains(Edge(t, t + 3)));
    EXPECT_TRUE(e.factor(i).contains(Edge(t + 1, t + 2)));
  }
  // {0,13} in R has one endpoint below the threshold 1.
  EXPECT_TRUE(e.factor(0).contains(Edge(0, 17)));
}

TEST(Prediction, Examples) {
  const auto b14 = onethree::base_factorisation(2, 14);
  PairProfile want{{CycleType({22}), 3}, {CycleType({18, 4}), 3}};
  PairProfile got;
  for (const auto& [pair, t] : onethree::predict_types(b14, 2)) ++got[t];
  EXPECT_EQ(got, want);

  const auto b20 = onethree::base_factorisation(3, 20);
  got.clear();
  for (const auto& [pair, t] : onethree::predict_types(b20, 1)) ++got[t];
  EXPECT_EQ(got, (PairProfile{{CycleType({20, 4}), 2}, {CycleType({18, 6}), 2}, {CycleType({16, 8}), 2}}));

  const auto b18 = onethree::base_factorisation(3, 18);
  EXPECT_EQ(onethree::predict_types(b18, 0), actual_types(b18));
}

std::vector<OneFactorisation> condition_c_bases() {
  std::vector<OneFactorisation> out;
  for (auto [m, order] : onethree::supported_bases()) {
    if (auto form = onethree::condition_c_form(onethree::base_factorisation(m, order))) out.push_back(*form);
  }
  return out;
}

TEST(Extension, SoundnessUpToTenSteps) {
  const auto bases = condition_c_bases();
  EXPECT_EQ(bases.size(), 10u);
  for (const auto& base : bases) {
    OneFactorisation current = base;
    for (int k = 0; k <= 10; ++k) {
      if (k > 0) current = onethree::extend_once(current);
      ASSERT_EQ(current.graph().order(), base.graph().order() + 4 * k);
      ASSERT_TRUE(onethree::satisfies_condition_c(current)) << base.graph().name() << " k=" << k;
      EXPECT_EQ(actual_types(current), onethree::predict_types(base, k)) << base.graph().name() << " k=" << k;
    }
  }
}

// Cycles of the base that avoid a pair's special set reappear relabelled in
// the extension; the cycles through it gain the window vertices.
TEST(Extension, PathSurgery) {
  struct Surgery {
    PairRole role;
    std::vector<Vertex> removed;                // S
    std::vector<std::vector<Vertex>> replaced;  // S-vertices -> their image paths
    Vertex fixed_below;                         // f(v) = v for v < fixed_below
  };
  const std::vector<Surgery> table{
      {PairRole::RB, {1}, {{1, 4, 3, 2, 5}}, 1},
      {PairRole::BG, {2}, {{2, 5, 4, 3, 6}}, 2},
      {PairRole::GY, {3}, {{3, 6, 5, 4, 7}}, 3},
      {PairRole::RG, {1, 2}, {{1, 4, 5}, {2, 3, 6}}, 1},
      {PairRole::BY, {2, 3}, {{2, 5, 6}, {3, 4, 7}}, 2},
      {PairRole::RY, {0, 1, 2, 3, 4}, {{0, 3, 2, 1, 4, 7, 6, 5, 8}}, 0},
  };
  for (const auto& base : condition_c_bases()) {
    const auto ext = onethree::extend_once(base);
    for (const auto& s : table) {
      const auto vc = onethree::vertex_condition(base, s.role);
      auto image_sets = [&](const OneFactorisation& f, bool lift) {
        std::multiset<std::set<Vertex>> out;
        for (const auto& cycle : union_cycles(f.factor(vc.factors.first), f.factor(vc.factors.second))) {
          std::set<Vertex> vs;
          for (Vertex v : cycle) {
            const bool special = std::find(s.removed.begin(), s.removed.end(), v) != s.removed.end();
            if (!lift) {
              vs.insert(v);
            } else if (!special) {
              vs.insert(v < s.fixed_below ? v : v + 4);
            } else if (s.role == PairRole::RY) {
              if (v == 0) vs.insert(s.replaced[0].begin(), s.replaced[0].end());
            } else {
              const auto& path = s.replaced[static_cast<std::size_t>(
                  std::find(s.removed.begin(), s.removed.end(), v) - s.removed.begin())];
              vs.insert(path.begin(), path.end());
            }
          }
          out.insert(vs);
        }
        return out;
      };
      EXPECT_EQ(image_sets(base, true), image_sets(ext, false))
          << base.graph().name() << " " << onethree::to_string(s.role);
    }
  }
}

TEST(Construct13, Dispatch) {
  const auto f = onethree::construct_13(2, 11);
  EXPECT_EQ(f.graph(), CirculantGraph(22, {1, 3}));
  EXPECT_EQ(f, onethree::extend(onethree::base_factorisation(2, 14), 2));
  EXPECT_EQ(distinct(f), parse_all({"[22]", "[18,4]"}));
  EXPECT_EQ(onethree::construct_13(6, 9), onethree::base_factorisation(6, 18));
  EXPECT_EQ(onethree::construct_13(3, 7), onethree::base_factorisation(3, 14));
  EXPECT_EQ(onethree::construct_13(6, 12), onethree::extend(onethree::base_factorisation(6, 20), 1));
  EXPECT_EQ(onethree::construct_13(6, 13), onethree::extend(onethree::base_factorisation(6, 22), 1));
}

TEST(Construct13, Sweep) {
  const std::map<int, int> first{{2, 5}, {3, 6}, {6, 9}};
  for (const auto& [m, lo] : first) {
    for (int n = lo; n <= 40; ++n) {
      const auto f = onethree::construct_13(m, n);
      EXPECT_EQ(f.graph(), CirculantGraph(2 * n, {1, 3}));
      EXPECT_TRUE(classify_balance(f).is_m_balanced(m)) << m << "," << n;
    }
  }
}

TEST(Construct13, Refusals) {
  auto reason = [](int m, int n) {
    try {
      onethree::construct_13(m, n);
    } catch (const ParameterError& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParameterOutOfRange);
      return e.reason();
    }
    ADD_FAILURE() << m << "," << n;
    return RangeReason::Unsupported;
  };
  EXPECT_EQ(reason(3, 5), RangeReason::ProvenNonexistent);
  EXPECT_EQ(reason(3, 4), RangeReason::ProvenNonexistent);
  EXPECT_EQ(reason(2, 4), RangeReason::ProvenNonexistent);
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(reason(6, n), RangeReason::ProvenNonexistent);
  EXPECT_EQ(reason(2, 3), RangeReason::Degenerate);
  EXPECT_EQ(reason(4, 10), RangeReason::Unsupported);
  EXPECT_EQ(reason(1, 10), RangeReason::Unsupported);
}

}  // namespace
}  // namespace b1f
