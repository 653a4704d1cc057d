#include <gtest/gtest.h>

#include <optional>

#include "parking/simulate.hpp"

using namespace parking;

namespace {
std::vector<std::optional<int>> spots(std::initializer_list<int> v) {
  std::vector<std::optional<int>> out;
  for (int x : v) out.push_back(x == 0 ? std::nullopt : std::optional<int>(x));
  return out;
}
}  // namespace

TEST(Park, ConstantRuleExample) {
  EXPECT_EQ(park(Preference({5, 3, 3, 5, 4}), 3).assignment, spots({5, 3, 2, 4, 1}));
}

TEST(Park, UnparkedCarLeaves) {
  const Preference a({7, 8, 7, 5, 8, 4, 5, 2});
  const auto out = park(a, 2);
  EXPECT_EQ(out.assignment, spots({7, 8, 6, 5, 0, 4, 3, 2}));
  EXPECT_FALSE(out.all_parked());
  EXPECT_EQ(park(a, 4).assignment, spots({7, 8, 6, 5, 4, 3, 2, 1}));
}

TEST(Park, RuleVectorExamples) {
  const Preference a({4, 3, 3, 4, 1});
  EXPECT_EQ(park(a, RuleVector({1, 1, 0, 1, 1})).assignment, spots({4, 3, 5, 0, 1}));
  EXPECT_EQ(park(a, RuleVector({0, 0, 1, 0, 0})).assignment, spots({4, 3, 2, 5, 1}));
  EXPECT_EQ(park(a, RuleVector({0, 0, 0, 2, 0})).assignment, spots({4, 3, 5, 2, 1}));
}

TEST(Park, MinStepTrace) {
  const Preference a({4, 9, 5, 9, 5, 8, 7, 9, 4, 6});
  const auto out = park(a, RuleVector({0, 0, 0, 0, 2, 0, 0, 3, 2, 5}));
  EXPECT_EQ(out.assignment, spots({4, 9, 5, 10, 3, 8, 7, 6, 2, 1}));
  EXPECT_EQ(out.total_backward(), 12);
  EXPECT_EQ(out.total_forward(), 1);
}

TEST(Park, ThirteenCars) {
  const Preference a({5, 10, 11, 1, 5, 11, 10, 4, 3, 9, 10, 8, 3});
  EXPECT_EQ(park(a, 1).assignment, spots({5, 10, 11, 1, 4, 12, 9, 3, 2, 8, 13, 7, 6}));
  EXPECT_EQ(park(a, RuleVector({0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1, 1})).assignment,
            spots({5, 10, 11, 1, 6, 12, 9, 4, 3, 8, 13, 7, 2}));
}

TEST(Park, TwoBackwardSteps) {
  EXPECT_EQ(park(Preference({8, 4, 7, 1, 6, 8, 7, 5, 10, 1}), 2).assignment,
            spots({8, 4, 7, 1, 6, 9, 5, 3, 10, 2}));
}

TEST(Park, StandardRuleAndLengthCheck) {
  EXPECT_EQ(park(Preference({1, 2}), RuleVector({0, 0})).assignment, spots({1, 2}));
  EXPECT_THROW(park(Preference({1, 2}), RuleVector({0})), InvalidInput);
  EXPECT_THROW(RuleVector({-1}), InvalidInput);
}

TEST(Strategy, Examples) {
  EXPECT_TRUE(is_strategy(Preference({3, 3, 2}), 1));
  EXPECT_FALSE(is_strategy(Preference({2, 3, 3}), 1));
  EXPECT_TRUE(is_strategy(Preference({3, 3, 3, 2, 3, 3, 3}), RuleVector({0, 0, 0, 0, 7, 0, 0})));
}

TEST(Strategy, FastPathMatchesPark) {
  const std::vector<std::vector<int>> prefs{{5, 3, 3, 5, 4}, {7, 8, 7, 5, 8, 4, 5, 2}, {2, 3, 3}, {1, 1, 1}};
  for (const auto& p : prefs) {
    const int n = static_cast<int>(p.size());
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(parks_all_constant(p, k, n), park(Preference(p), k).all_parked());
      std::vector<int> lim(p.size(), k);
      EXPECT_EQ(parks_all(p, lim, n), park(Preference(p), k).all_parked());
    }
  }
}

TEST(Strategy, WideLotUsesSlowPath) {
  std::vector<int> p(70);
  for (int i = 0; i < 70; ++i) p[static_cast<std::size_t>(i)] = 70 - i;
  p[1] = 70;
  EXPECT_EQ(parks_all_constant(p, 1, 70), park(Preference(p), 1).all_parked());
  EXPECT_EQ(parks_all_constant(p, 0, 70), park(Preference(p), 0).all_parked());
}

TEST(Circular, Wraps) {
  const auto out = park_circular(Preference({3, 3}, 3));
  EXPECT_EQ(out.occupied, (std::vector<int>{1, 3}));
  EXPECT_EQ(out.assignment, (std::vector<int>{3, 1}));
  EXPECT_EQ(park_circular(Preference({1}, 2)).occupied, (std::vector<int>{1}));
  EXPECT_THROW(park_circular(Preference({1, 1})), InvalidInput);
}

TEST(Rules, Parse) {
  EXPECT_EQ(parse_rules("k=3", 2, 5).values(), (std::vector<int>{3, 3}));
  EXPECT_EQ(parse_rules("k=inf", 2, 5).values(), (std::vector<int>{5, 5}));
  EXPECT_EQ(parse_rules("inf", 2, 5).values(), (std::vector<int>{5, 5}));
  EXPECT_EQ(parse_rules("0, inf,2", 3, 4).values(), (std::vector<int>{0, 4, 2}));
  EXPECT_THROW(parse_rules("0,1", 3, 3), InvalidInput);
  EXPECT_THROW(parse_rules("k=-1", 3, 3), InvalidInput);
  EXPECT_THROW(parse_rules("0,x,1", 3, 3), InvalidInput);
  EXPECT_EQ(format_rules(RuleVector({0, 2, 1})), "0,2,1");
}

TEST(Rules, Order) {
  EXPECT_TRUE(RuleVector({0, 1, 1}).leq(RuleVector({0, 1, 2})));
  EXPECT_FALSE(RuleVector({0, 2, 0}).leq(RuleVector({0, 1, 2})));
  EXPECT_EQ(RuleVector({0, 1, 2}).rank(), 3);
}
