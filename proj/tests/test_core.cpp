#include <gtest/gtest.h>

#include "parking/core.hpp"

using namespace parking;

TEST(Preference, CountsMultiplicity) {
  Preference a({5, 3, 3, 5, 4}, 5);
  EXPECT_EQ(a.multiplicity(3), 2);
  EXPECT_EQ(a.multiplicity(1), 0);
  EXPECT_TRUE(a.classical());
  EXPECT_EQ(a.at(1), 5);
}

TEST(Preference, RejectsOutOfRange) {
  EXPECT_THROW(Preference({6, 1}, 5), InvalidInput);
  EXPECT_THROW(Preference({0, 1}, 5), InvalidInput);
  EXPECT_THROW(Preference({1, 1, 1}, 2), InvalidInput);
  EXPECT_THROW(make_preference({}, 0), InvalidInput);
}

TEST(Preference, AdmitsPartialLots) {
  Preference a({2, 2}, 5);
  EXPECT_EQ(a.cars(), 2);
  EXPECT_EQ(a.spots(), 5);
  EXPECT_FALSE(a.classical());
}

TEST(Deficiency, WorkedExample) {
  const auto p = deficiency_profile(Preference({5, 3, 3, 5, 4}));
  EXPECT_EQ(p.u(1), 0);
  EXPECT_EQ(p.u(2), 1);
  EXPECT_EQ(p.u(3), 2);
  EXPECT_EQ(p.u(4), 1);
  EXPECT_EQ(p.u(5), 1);
  ASSERT_EQ(p.intervals().size(), 1U);
  EXPECT_EQ(p.intervals()[0], (Interval{2, 5}));
}

TEST(Deficiency, SingleInteriorInterval) {
  const auto p = deficiency_profile(Preference({8, 4, 7, 1, 6, 8, 7, 5, 10, 1}));
  ASSERT_EQ(p.intervals().size(), 1U);
  EXPECT_EQ(p.intervals()[0], (Interval{4, 7}));
  EXPECT_EQ(p.u_set(), (std::vector<int>{4, 5, 6, 7}));
}

TEST(Deficiency, EmptyForIdentity) {
  const auto p = deficiency_profile(Preference({1, 2, 3, 4}));
  EXPECT_TRUE(p.u_set().empty());
  for (int j = 1; j <= 4; ++j) EXPECT_EQ(p.u(j), 0);
}

TEST(Deficiency, IntervalShape) {
  // p has u(p) = 1, nobody prefers p-1, at least two prefer q
  for (const auto& alpha : {Preference({8, 4, 7, 1, 6, 8, 7, 5, 10, 1}), Preference({3, 3, 1, 6, 6, 5})}) {
    const auto p = deficiency_profile(alpha);
    for (const auto& iv : p.intervals()) {
      EXPECT_EQ(p.u(iv.lo), 1);
      EXPECT_EQ(alpha.multiplicity(iv.lo - 1), 0);
      EXPECT_GE(alpha.multiplicity(iv.hi), 2);
    }
  }
}

TEST(Deficiency, TwoFormulasAgree) {
  // u(j) = j - 1 - #{cars preferring < j}
  const Preference a({4, 9, 5, 9, 5, 8, 7, 9, 4, 6});
  const auto p = deficiency_profile(a);
  for (int j = 2; j <= 10; ++j) {
    int below = 0;
    for (int i = 1; i < j; ++i) below += a.multiplicity(i);
    EXPECT_EQ(p.u(j), j - 1 - below) << "j=" << j;
  }
}

TEST(Transform, RestrictThenTranslate) {
  const Preference a({4, 4, 3, 2, 3});
  const std::vector<int> j{1, 2};
  const auto r = translate(restrict_to(a, j), 3);
  EXPECT_EQ(r.values(), (std::vector<int>{1, 1}));
  EXPECT_EQ(r.spots(), 2);
  EXPECT_EQ(transform(Preference({4, 4}, 5), transform_kind::Translate{3}).values(), (std::vector<int>{1, 1}));
}

TEST(Transform, TranslateZeroIsIdentity) {
  const Preference a({5, 3, 3, 5, 4});
  EXPECT_EQ(translate(a, 0), a);
}

TEST(Transform, TranslateRejectsLargeShift) {
  EXPECT_THROW(translate(Preference({5, 3, 3, 5, 4}), 3), InvalidInput);
  EXPECT_THROW(translate(Preference({5, 3, 3, 5, 4}), -1), InvalidInput);
}

TEST(Transform, RestrictKeepsOrderAndSpots) {
  const Preference a({5, 3, 3, 5, 4});
  const std::vector<int> j{4, 2};
  const auto r = restrict_to(a, j);
  EXPECT_EQ(r.values(), (std::vector<int>{3, 5}));
  EXPECT_EQ(r.spots(), 5);
}

TEST(Transform, ReflectThetaIsInvolution) {
  const Preference a({2, 2, 3, 4});
  ASSERT_EQ(deficiency_profile(a).u_set(), (std::vector<int>{2}));
  const auto b = reflect_theta(a);
  EXPECT_EQ(reflect_theta(b), a);
  EXPECT_THROW(reflect_theta(Preference({1, 2})), InvalidInput);
}

TEST(Transform, ReflectThetaComplementsU) {
  // for U = [2,k+1]: j in U of the image iff n-j+3 is not in U of the original
  const int n = 5;
  for (const auto& a : {Preference({5, 5, 5, 5, 5}), Preference({4, 4, 4, 4, 4}), Preference({2, 2, 3, 4, 5})}) {
    const auto pa = deficiency_profile(a);
    const auto pb = deficiency_profile(reflect_theta(a));
    for (int j = 2; j <= n; ++j) EXPECT_EQ(pb.in_u(j), !pa.in_u(n - j + 3)) << format_preference(a) << " j=" << j;
  }
}

TEST(Transform, TranslateAtZeroOfU) {
  // u of tau_{j-1}(alpha|_J) at i equals u_alpha(i+j-1) when u_alpha(j) = 0
  const Preference a({8, 4, 7, 1, 6, 8, 7, 5, 10, 1});
  const auto pa = deficiency_profile(a);
  const int j = 3;
  ASSERT_EQ(pa.u(j), 0);
  std::vector<int> pos;
  for (int i = 1; i <= a.cars(); ++i)
    if (a.at(i) >= j) pos.push_back(i);
  const auto sub = translate(Preference(restrict_to(a, pos).values(), a.spots()), j - 1);
  const auto ps = deficiency_profile(sub);
  for (int i = 2; i <= sub.spots(); ++i) EXPECT_EQ(ps.u(i), pa.u(i + j - 1));
}

TEST(Transform, SortsAndComplement) {
  const Preference a({5, 3, 3, 5, 4});
  EXPECT_EQ(sort_asc(a).values(), (std::vector<int>{3, 3, 4, 5, 5}));
  EXPECT_EQ(sort_desc(a).values(), (std::vector<int>{5, 5, 4, 3, 3}));
  EXPECT_EQ(complement(a).values(), (std::vector<int>{1, 3, 3, 1, 2}));
  EXPECT_EQ(transform(a, transform_kind::SortAsc{}), sort_asc(a));
}

TEST(Text, ParsesAndFormats) {
  EXPECT_EQ(parse_preference("5,3,3,5,4"), Preference({5, 3, 3, 5, 4}));
  EXPECT_EQ(parse_preference(" 2, 2@5"), Preference({2, 2}, 5));
  EXPECT_EQ(format_preference(Preference({2, 2}, 5)), "2,2@5");
  EXPECT_EQ(format_preference(Preference({5, 3, 3, 5, 4})), "5,3,3,5,4");
  EXPECT_THROW(parse_preference("a,b"), InvalidInput);
  EXPECT_THROW(parse_preference("1,,2"), InvalidInput);
  EXPECT_THROW(parse_preference("6,1@5"), InvalidInput);
}
