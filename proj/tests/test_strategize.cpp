#include <gtest/gtest.h>

#include <set>

#include "parking/strategize.hpp"

using namespace parking;

namespace {
const Preference kTen({4, 9, 5, 9, 5, 8, 7, 9, 4, 6});
const Preference kThirteen({5, 10, 11, 1, 5, 11, 10, 4, 3, 9, 10, 8, 3});
}  // namespace

TEST(MinStep, WorkedExample) {
  const auto plan = min_step_strategy(kTen);
  EXPECT_EQ(plan.rho.values(), (std::vector<int>{0, 0, 0, 0, 2, 0, 0, 3, 2, 5}));
  EXPECT_EQ(plan.total, 12);
  for (const auto& [j, set] : plan.sets) EXPECT_EQ(static_cast<int>(set.size()), deficiency_profile(kTen).u(j));
}

TEST(MinStep, SmallExamples) {
  EXPECT_EQ(min_step_strategy(Preference({3, 3, 2, 4})).rho.values(), (std::vector<int>{0, 1, 1, 0}));
  const auto pf = min_step_strategy(Preference({1, 1, 2}));
  EXPECT_EQ(pf.total, 0);
  EXPECT_TRUE(pf.sets.empty());
}

TEST(MinStep, AllMinimizers) {
  const auto list = enumerate_min_step_strategies(kTen);
  EXPECT_EQ(list.count, Count(2));
  std::set<std::vector<int>> got;
  for (const auto& p : list.plans) got.insert(p.rho.values());
  const std::set<std::vector<int>> want{{0, 0, 0, 0, 2, 0, 0, 3, 2, 5}, {0, 0, 0, 1, 2, 1, 1, 0, 2, 5}};
  EXPECT_EQ(got, want);
  EXPECT_EQ(enumerate_min_step_strategies(Preference({1, 2, 3})).plans.size(), 1U);
}

TEST(MinStep, TotalSteps) {
  EXPECT_EQ(min_total_steps(kTen), 13);
  EXPECT_EQ(min_forward_steps(kTen), 1);
  EXPECT_EQ(min_total_steps(Preference({1, 2, 3, 4})), 0);
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(min_total_steps(Preference(std::vector<int>(static_cast<std::size_t>(n), 1))), n * (n - 1) / 2);
}

TEST(MinCars, Examples) {
  const auto plan = min_cars_strategy(kTen);
  EXPECT_EQ(plan.tilde_t, (std::vector<int>{8, 9, 10}));
  const auto out = park(kTen, plan.rho);
  const std::vector<std::optional<int>> want{4, 9, 5, 10, 6, 8, 7, 3, 2, 1};
  EXPECT_EQ(out.assignment, want);

  EXPECT_EQ(min_cars_strategy(Preference({3, 3, 3, 2, 3, 3, 3})).tilde_t, (std::vector<int>{7}));
  const auto small = min_cars_strategy(Preference({3, 3, 2, 4}));
  EXPECT_EQ(small.tilde_t, (std::vector<int>{4}));
  EXPECT_EQ(small.rho.values(), (std::vector<int>{0, 0, 0, 4}));
}

TEST(Filter, Preference) {
  EXPECT_EQ(principal_filter_preference(RuleVector::zeros(4)).values(), (std::vector<int>{4, 3, 2, 1}));
  EXPECT_EQ(principal_filter_preference(RuleVector({0, 1, 2, 3})).values(), (std::vector<int>{4, 4, 4, 4}));
  EXPECT_THROW(principal_filter_preference(RuleVector({1, 0})), InvalidInput);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize_strategy(Preference({4, 3, 3, 4, 1}), RuleVector({0, 0, 3, 0, 0})).values(),
            (std::vector<int>{0, 0, 1, 0, 0}));
  EXPECT_EQ(normalize_strategy(Preference({1, 1, 2}), RuleVector({2, 2, 2})).values(), (std::vector<int>{0, 0, 0}));
  const RuleVector all = RuleVector::constant(10, 10);
  const auto norm = normalize_strategy(kTen, all);
  EXPECT_TRUE(norm.leq(all));
  EXPECT_EQ(park(kTen, norm).assignment, park(kTen, all).assignment);
  EXPECT_THROW(normalize_strategy(Preference({2, 3, 3}), RuleVector({0, 0, 0})), InvalidInput);
}

TEST(MinOnes, Examples) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> a{n};
    for (int v = n; v >= 2; --v) a.push_back(v);
    std::vector<int> want(static_cast<std::size_t>(n), 1);
    want[0] = 0;
    EXPECT_EQ(min_ones_strategy(Preference(a)).values(), want);
  }
  EXPECT_EQ(min_ones_strategy(Preference({1, 1, 3})).rank(), 0);
  const auto rho = min_ones_strategy(kThirteen);
  EXPECT_EQ(rho.rank(), 4);
  EXPECT_TRUE(is_strategy(kThirteen, rho));
  // chain (10,10,9,8) at {2,7,10,12}, and car 13 backs into spot 2
  EXPECT_EQ(rho.values(), (std::vector<int>{0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1}));
}

TEST(MinOnes, Precondition) {
  EXPECT_THROW(min_ones_strategy(Preference({2, 3, 3})), PreconditionError);
  EXPECT_THROW(min_ones_strategy(Preference({5, 3, 3, 5, 4})), PreconditionError);
}
