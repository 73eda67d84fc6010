#include "braidrep/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

using braidrep::Permutation;

namespace {

std::vector<Permutation> all_of_degree(int n) {
  std::vector<int> one_line(n);
  std::iota(one_line.begin(), one_line.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_one_line(one_line));
  } while (std::next_permutation(one_line.begin(), one_line.end()));
  return out;
}

}  // namespace

TEST(Permutation, IdentityAndApply) {
  Permutation id(4);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.degree(), 4);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(id.apply(i), i);
  EXPECT_THROW(id.apply(0), std::out_of_range);
  EXPECT_THROW(id.apply(5), std::out_of_range);
  EXPECT_THROW(Permutation(0), std::invalid_argument);
}

TEST(Permutation, ComposeAppliesLeftFactorFirst) {
  const Permutation s1 = Permutation::transposition(3, 1, 2);
  const Permutation s2 = Permutation::transposition(3, 2, 3);
  // 1 -> 2 under s1, then 2 -> 3 under s2.
  const Permutation p = compose(s1, s2);
  EXPECT_EQ(p, Permutation::from_one_line({3, 1, 2}));
  EXPECT_EQ(compose(s2, s1), Permutation::from_one_line({2, 3, 1}));
  EXPECT_THROW(compose(s1, Permutation(4)), std::invalid_argument);
}

TEST(Permutation, FromCyclesDisjoint) {
  EXPECT_EQ(Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
            Permutation::from_one_line({2, 1, 4, 3}));
}

TEST(Permutation, FromCyclesNonDisjointComposesLeftToRight) {
  const Permutation p = Permutation::from_cycles(4, {{2, 3}, {1, 2}, {3, 4}, {2, 3}});
  EXPECT_EQ(p, Permutation::from_one_line({3, 4, 1, 2}));
}

TEST(Permutation, FromCyclesErrors) {
  EXPECT_THROW(Permutation::from_cycles(3, {{1, 4}}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 2}}), std::invalid_argument);
}

TEST(Permutation, FromOneLineErrors) {
  EXPECT_THROW(Permutation::from_one_line({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_one_line({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation::from_one_line({1, 3}), std::invalid_argument);
}

TEST(Permutation, CyclesAreMinLedAndSorted) {
  const Permutation p = Permutation::from_one_line({3, 5, 1, 7, 2, 8, 4, 6});
  const std::vector<std::vector<int>> want = {{1, 3}, {2, 5}, {4, 7}, {6, 8}};
  EXPECT_EQ(p.cycles(), want);
  EXPECT_EQ(p.inversions(), 10);
  EXPECT_TRUE(Permutation(5).cycles().empty());
}

TEST(Permutation, CyclesOmitFixedPoints) {
  const Permutation p = Permutation::from_one_line({1, 3, 2, 4});
  const std::vector<std::vector<int>> want = {{2, 3}};
  EXPECT_EQ(p.cycles(), want);
}

TEST(Permutation, Inverse) {
  const Permutation p = Permutation::from_one_line({3, 1, 2});
  EXPECT_EQ(p.inverse(), Permutation::from_one_line({2, 3, 1}));
  for (const auto& w : all_of_degree(4)) {
    EXPECT_TRUE(compose(w, w.inverse()).is_identity());
    EXPECT_TRUE(compose(w.inverse(), w).is_identity());
  }
}

TEST(Permutation, CycleRoundTripExhaustive) {
  for (const auto& w : all_of_degree(5))
    EXPECT_EQ(Permutation::from_cycles(5, w.cycles()), w);
}

TEST(Permutation, ComposeAssociativeExhaustiveS3) {
  const auto all = all_of_degree(3);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
}

TEST(Permutation, TextForms) {
  const Permutation p = Permutation::from_one_line({3, 1, 2});
  EXPECT_EQ(p.one_line_text(), "[3,1,2]");
  EXPECT_EQ(Permutation::from_one_line({2, 1, 4, 3}).cycle_text(), "(1,2)(3,4)");
  EXPECT_EQ(Permutation(3).cycle_text(), "()");
  EXPECT_EQ(Permutation(3).one_line_text(), "[1,2,3]");
}

TEST(Permutation, ParseOneLine) {
  EXPECT_EQ(Permutation::parse("[2,1,4,3]"), Permutation::from_one_line({2, 1, 4, 3}));
  EXPECT_EQ(Permutation::parse(" [ 2 , 1 ] "), Permutation::from_one_line({2, 1}));
  EXPECT_THROW(Permutation::parse("[2,1,4,3]", 3), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("[2,1] x"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("[2,1"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("[2,,1]"), std::invalid_argument);
}

TEST(Permutation, ParseCycles) {
  EXPECT_EQ(Permutation::parse("(1,2)(3,4)", 4), Permutation::from_one_line({2, 1, 4, 3}));
  EXPECT_EQ(Permutation::parse("(1,2)"), Permutation::from_one_line({2, 1}));
  EXPECT_EQ(Permutation::parse("()"), Permutation(1));
  EXPECT_EQ(Permutation::parse("()", 5), Permutation(5));
  // No separator means one (multi-digit) point, not two.
  EXPECT_EQ(Permutation::parse("(12)").degree(), 12);
  EXPECT_THROW(Permutation::parse("(1,2)", 1), std::invalid_argument);
  EXPECT_THROW(Permutation::parse(""), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("xyz"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("(1,2"), std::invalid_argument);
}

TEST(Permutation, ParseRoundTripsExhaustiveS4) {
  for (const auto& w : all_of_degree(4)) {
    EXPECT_EQ(Permutation::parse(w.one_line_text()), w);
    EXPECT_EQ(Permutation::parse(w.cycle_text(), 4), w);
  }
}

TEST(Permutation, InversionsMatchSortingDistance) {
  // Inversions of w equal inversions of w^-1.
  for (const auto& w : all_of_degree(5)) EXPECT_EQ(w.inversions(), w.inverse().inversions());
  EXPECT_EQ(Permutation::from_one_line({5, 4, 3, 2, 1}).inversions(), 10);
  EXPECT_EQ(Permutation(5).inversions(), 0);
}

TEST(Permutation, HashAgreesWithEquality) {
  const auto all = all_of_degree(4);
  for (const auto& a : all)
    for (const auto& b : all)
      if (a == b) EXPECT_EQ(a.hash(), b.hash());
  // Distinct elements of S_4 should not all collide.
  std::size_t distinct = 0;
  for (std::size_t i = 1; i < all.size(); ++i)
    if (all[i].hash() != all[0].hash()) ++distinct;
  EXPECT_GT(distinct, 0u);
}
