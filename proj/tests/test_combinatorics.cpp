#include <gtest/gtest.h>

#include <vector>

#include "turanlab/combinatorics.hpp"
#include "turanlab/selftest.hpp"

using namespace turanlab;

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(12, 4), 495);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(ElemSym, Examples) {
  const std::vector<std::int64_t> twos2{2, 2};
  const std::vector<std::int64_t> twos3{2, 2, 2};
  EXPECT_EQ(elem_sym(twos2, 2), 4);
  EXPECT_EQ(elem_sym(twos3, 3), 8);
  EXPECT_EQ(elem_sym(twos3, 0), 1);
  EXPECT_EQ(elem_sym(std::vector<std::int64_t>{}, 0), 1);
  EXPECT_EQ(elem_sym(twos2, 3), 0);
  EXPECT_EQ(elem_sym(twos2, -1), 0);
}

TEST(ElemSym, MatchesSubsetEnumeration) {
  const std::vector<std::vector<std::int64_t>> tuples = {{3, 1, 4, 1, 5}, {0, 0, 7}, {8, 8, 8, 8, 8, 8}, {2}};
  for (const auto& t : tuples) {
    for (int r = -1; r <= 7; ++r) EXPECT_EQ(elem_sym(t, r), elem_sym_by_subsets(t, r)) << "r=" << r;
  }
}

TEST(BalancedParts, SizesAndLabels) {
  EXPECT_EQ(balanced_part_sizes(5, 3), (std::vector<int>{2, 2, 1}));
  EXPECT_EQ(balanced_part_sizes(6, 3), (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(balanced_part_labels(5, 3), (std::vector<int>{0, 0, 1, 1, 2}));
  EXPECT_EQ(balanced_part_labels(4, 2), (std::vector<int>{0, 0, 1, 1}));
  // more parts than items: every item alone
  EXPECT_EQ(balanced_part_labels(3, 5), (std::vector<int>{0, 1, 2}));
}

TEST(KSubsets, ColexOrderAndCount) {
  std::vector<VertexSet> seen;
  for_each_k_subset(4, 2, [&](VertexSet s) {
    seen.push_back(s);
    return true;
  });
  EXPECT_EQ(seen, (std::vector<VertexSet>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100}));
  int count = 0;
  for_each_k_subset(10, 4, [&](VertexSet) { return ++count < 7; });
  EXPECT_EQ(count, 7);
}
