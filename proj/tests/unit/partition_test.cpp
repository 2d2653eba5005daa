// Copyright 2026 The simcore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simcore/partition.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "simcore/errors.hpp"
#include "support/oracles.hpp"

namespace simcore {
namespace {

using Row = std::vector<std::uint64_t>;

TEST(PartitionTest, RejectsIncreasingOrZeroParts) {
  EXPECT_THROW(Partition({1, 2}), InvalidArgument);
  EXPECT_THROW(Partition({3, 0}), InvalidArgument);
  EXPECT_NO_THROW(Partition({3, 3, 1}));
}

TEST(PartitionTest, EmptyPartitionHasSizeZero) {
  const Partition p;
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.size(), 0u);
}

TEST(PartitionTest, SizeOverflowIsReported) {
  const Partition p({UINT64_MAX, 1});
  EXPECT_THROW(p.size(), OverflowError);
}

TEST(HookLengthsTest, MatchesFigureForSevenTwoOne) {
  const HookMatrix hooks = HookLengths(Partition({7, 2, 1}));
  ASSERT_EQ(hooks.size(), 3u);
  EXPECT_EQ(hooks[0], (Row{9, 7, 5, 4, 3, 2, 1}));
  EXPECT_EQ(hooks[1], (Row{3, 1}));
  EXPECT_EQ(hooks[2], (Row{1}));
}

TEST(HookLengthsTest, EmptyPartitionGivesEmptyMatrix) {
  EXPECT_TRUE(HookLengths(Partition()).empty());
}

TEST(HookLengthsTest, FirstColumnOfSevenTwoTwo) {
  const HookMatrix hooks = HookLengths(Partition({7, 2, 2}));
  EXPECT_EQ(hooks[0][0], 9u);
  EXPECT_EQ(hooks[1][0], 3u);
  EXPECT_EQ(hooks[2][0], 2u);
}

TEST(BetaSetTest, StoresElementsStrictlyDecreasing) {
  const BetaSet b({2, 9, 3});
  EXPECT_EQ(b.elements(), (Row{9, 3, 2}));
  EXPECT_TRUE(b.contains(3));
  EXPECT_FALSE(b.contains(4));
  EXPECT_THROW(BetaSet({1, 1}), InvalidArgument);
}

TEST(BetaSetTest, ExamplesFromDefinition) {
  EXPECT_EQ(ToBetaSet(Partition({7, 2, 2})), BetaSet({9, 3, 2}));
  EXPECT_EQ(ToBetaSet(Partition()), BetaSet());
  EXPECT_EQ(ToBetaSet(Partition({7, 6, 5})), BetaSet({9, 7, 5}));
}

TEST(BetaSetTest, FromBetaSetInvertsExamples) {
  EXPECT_EQ(FromBetaSet(BetaSet({9, 3, 2})), Partition({7, 2, 2}));
  EXPECT_EQ(FromBetaSet(BetaSet()), Partition());
  EXPECT_EQ(FromBetaSet(BetaSet({9, 7, 5})), Partition({7, 6, 5}));
}

TEST(BetaSetTest, FromBetaSetRejectsNonMinimalSet) {
  // {3, 1, 0} would induce a zero part.
  EXPECT_THROW(FromBetaSet(BetaSet({3, 1, 0})), InvalidArgument);
  EXPECT_THROW(SizeFromBeta(BetaSet({0})), InvalidArgument);
}

TEST(BetaSetTest, SizeFromBetaExamples) {
  EXPECT_EQ(SizeFromBeta(BetaSet({9, 3, 2})), 11u);
  EXPECT_EQ(SizeFromBeta(BetaSet()), 0u);
  EXPECT_EQ(SizeFromBeta(BetaSet({9, 7, 5})), 18u);
}

TEST(BetaSetTest, SizeFromBetaReportsOverflow) {
  EXPECT_THROW(SizeFromBeta(BetaSet({UINT64_MAX, UINT64_MAX - 1})),
               OverflowError);
}

TEST(TextFormatTest, ParsesWhitespaceTolerantLists) {
  EXPECT_EQ(ParsePartition(" 12, 11 ,10,8 "), Partition({12, 11, 10, 8}));
  EXPECT_EQ(ParsePartition(""), Partition());
  EXPECT_EQ(ParsePartition("   "), Partition());
  EXPECT_EQ(FormatPartition(Partition({12, 11, 10, 8, 7, 6, 4, 3, 2})),
            "12,11,10,8,7,6,4,3,2");
  EXPECT_EQ(FormatPartition(Partition()), "");
  EXPECT_EQ(ParseBetaSet("2,9,3"), BetaSet({9, 3, 2}));
  EXPECT_EQ(FormatBetaSet(BetaSet({2, 9, 3})), "9,3,2");
}

TEST(TextFormatTest, RejectsMalformedText) {
  EXPECT_THROW(ParsePartition("1,,2"), ParseError);
  EXPECT_THROW(ParsePartition("1,2"), ParseError);  // increasing
  EXPECT_THROW(ParsePartition("a"), ParseError);
  EXPECT_THROW(ParsePartition("-1"), ParseError);
  EXPECT_THROW(ParsePartition("3,"), ParseError);
  EXPECT_THROW(ParsePartition("99999999999999999999999"), ParseError);
  EXPECT_THROW(ParseBetaSet("3,3"), ParseError);
}

TEST(PartitionPropertyTest, BetaSetRoundTripAndSize) {
  std::mt19937_64 rng(20260101);
  for (int iter = 0; iter < 10000; ++iter) {
    const Partition p = testing::RandomPartition(rng, 50, 50);
    const BetaSet beta = ToBetaSet(p);
    ASSERT_EQ(beta.size(), p.length());
    ASSERT_EQ(FromBetaSet(beta), p) << p;
    ASSERT_EQ(SizeFromBeta(beta), p.size()) << p;
    ASSERT_EQ(ParsePartition(FormatPartition(p)), p);
  }
}

TEST(PartitionPropertyTest, BetaSetIsFirstColumnOfHooks) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    const Partition p = testing::RandomPartition(rng, 30, 30);
    const HookMatrix hooks = HookLengths(p);
    std::vector<std::uint64_t> first_column;
    for (const auto& row : hooks) first_column.push_back(row.front());
    ASSERT_EQ(BetaSet(first_column), ToBetaSet(p)) << p;
  }
}

TEST(PartitionPropertyTest, HooksAreTransposedUnderConjugation) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    const Partition p = testing::RandomPartition(rng, 25, 25);
    const Partition conj = testing::Conjugate(p);
    const HookMatrix hooks = HookLengths(p);
    const HookMatrix conj_hooks = HookLengths(conj);
    for (std::size_t i = 0; i < hooks.size(); ++i) {
      for (std::size_t j = 0; j < hooks[i].size(); ++j) {
        ASSERT_EQ(hooks[i][j], conj_hooks[j][i]) << p;
      }
    }
  }
}

}  // namespace
}  // namespace simcore
