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

#include "simcore/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "simcore/errors.hpp"
#include "support/oracles.hpp"

namespace simcore {
namespace {

using Entries = std::vector<std::uint64_t>;

std::vector<Entries> Drain(SequenceEnumerator e) {
  std::vector<Entries> out;
  while (auto s = e.Next()) out.push_back(s->entries());
  return out;
}

std::vector<BetaSet> Drain(CoreBetaSetEnumerator e) {
  std::vector<BetaSet> out;
  while (auto b = e.Next()) out.push_back(*b);
  return out;
}

// (a + b - 1)! / (a! b!) by exact rational accumulation.
std::uint64_t AndersonCount(std::uint64_t a, std::uint64_t b) {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint64_t i = 1; i <= a + b - 1; ++i) num *= i;  // a + b <= 17
  for (std::uint64_t i = 1; i <= a; ++i) den *= i;
  for (std::uint64_t i = 1; i <= b; ++i) den *= i;
  return num / den;
}

TEST(SequenceEnumeratorTest, SmallExamples) {
  EXPECT_EQ(Drain(SequenceEnumerator(3, 1, Family::kPlus)),
            (std::vector<Entries>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(Drain(SequenceEnumerator(2, 1, Family::kMinus)),
            (std::vector<Entries>{{0}}));
  EXPECT_EQ(Drain(SequenceEnumerator(5, 1, Family::kPlus)).size(), 8u);
}

TEST(SequenceEnumeratorTest, ExhaustedEnumeratorStaysExhausted) {
  SequenceEnumerator e(2, 1, Family::kMinus);
  EXPECT_TRUE(e.Next().has_value());
  EXPECT_FALSE(e.Next().has_value());
  EXPECT_FALSE(e.Next().has_value());
}

TEST(SequenceEnumeratorTest, MatchesBoxOracleInLexicographicOrder) {
  for (Family family : {Family::kPlus, Family::kMinus}) {
    for (Modulus t = 2; t <= 8; ++t) {
      for (std::uint64_t m = 1; m <= 4; ++m) {
        // The oracle output is sorted, so equality also pins the order.
        EXPECT_EQ(Drain(SequenceEnumerator(t, m, family)),
                  testing::BoxFilteredSequences(t, m, family))
            << "t=" << t << " m=" << m;
      }
    }
  }
}

TEST(CoreBetaSetEnumeratorTest, SmallExamples) {
  EXPECT_EQ(Drain(CoreBetaSetEnumerator(3, 4, false)).size(), 5u);
  EXPECT_EQ(Drain(CoreBetaSetEnumerator(2, 3, true)),
            (std::vector<BetaSet>{BetaSet(), BetaSet({1})}));
  for (auto [a, b] : {std::pair<Modulus, Modulus>{2, 5}, {4, 7}, {9, 8}}) {
    const auto all = Drain(CoreBetaSetEnumerator(a, b, false));
    ASSERT_FALSE(all.empty());
    EXPECT_EQ(all.front(), BetaSet());
  }
}

TEST(CoreBetaSetEnumeratorTest, RejectsNonCoprimeModuli) {
  EXPECT_THROW(CoreBetaSetEnumerator(4, 6, false), InvalidArgument);
  EXPECT_THROW(CoreBetaSetEnumerator(0, 3, false), InvalidArgument);
  EXPECT_THROW(ComputeFamilyStats(3, 9, true), InvalidArgument);
}

TEST(CoreBetaSetEnumeratorTest, ModulusOneHasOnlyTheEmptyCore) {
  EXPECT_EQ(Drain(CoreBetaSetEnumerator(2, 1, true)),
            (std::vector<BetaSet>{BetaSet()}));
}

TEST(CoreBetaSetEnumeratorTest, ResourceGuardRefusesLargeFamilies) {
  // C(41, 20) / 41 is about 6.5e9.
  EXPECT_THROW(CoreBetaSetEnumerator(20, 21, false), ResourceLimitExceeded);
  ResourceGuard generous;
  generous.max_estimated_count = UINT64_MAX;
  EXPECT_NO_THROW(CoreBetaSetEnumerator(20, 21, false, generous));
  // The distinct-only family is small and is not refused by the estimate.
  EXPECT_NO_THROW(CoreBetaSetEnumerator(20, 21, true));
  ResourceGuard tiny;
  tiny.max_poset_elements = 5;
  EXPECT_THROW(CoreBetaSetEnumerator(3, 7, true, tiny), ResourceLimitExceeded);
  EXPECT_NO_THROW(CoreBetaSetEnumerator(3, 4, true, tiny));
}

TEST(CoreBetaSetEnumeratorTest, EstimatedCountIsAndersonCount) {
  EXPECT_EQ(EstimatedCoreCount(3, 4), 5u);
  EXPECT_EQ(EstimatedCoreCount(8, 9), 1430u);
  EXPECT_EQ(EstimatedCoreCount(200, 201), UINT64_MAX);
  EXPECT_EQ(GapCount(12, 61), 330u);
}

TEST(CoreBetaSetEnumeratorTest, MatchesHookBruteForce) {
  for (Modulus a = 2; a <= 9; ++a) {
    for (Modulus b = a + 1; b <= 17; ++b) {
      if (std::gcd(a, b) != 1 || a * b - a - b > 17) continue;
      for (bool distinct : {false, true}) {
        std::vector<Partition> enumerated;
        for (const BetaSet& beta : Drain(CoreBetaSetEnumerator(a, b, distinct))) {
          enumerated.push_back(FromBetaSet(beta));
        }
        std::sort(enumerated.begin(), enumerated.end());
        auto brute = testing::HookBruteForceCores(a, b, distinct);
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(enumerated, brute) << "a=" << a << " b=" << b;
      }
    }
  }
}

TEST(CoreBetaSetEnumeratorTest, EveryEmittedSetSatisfiesBothAbacusConditions) {
  for (Modulus a = 2; a <= 9; ++a) {
    for (Modulus b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (bool distinct : {false, true}) {
        CoreBetaSetEnumerator e(a, b, distinct);
        while (auto beta = e.Next()) {
          ASSERT_TRUE(beta->normalized());
          if (!beta->empty()) ASSERT_LE(beta->max(), e.largest_gap());
          const Partition p = FromBetaSet(*beta);
          ASSERT_TRUE(IsTCore(p, a) && IsTCore(p, b)) << p;
          if (distinct) ASSERT_FALSE(HasConsecutiveElements(*beta));
        }
      }
    }
  }
}

TEST(CoreBetaSetEnumeratorTest, StreamIsDeterministic) {
  EXPECT_EQ(Drain(CoreBetaSetEnumerator(5, 7, false)),
            Drain(CoreBetaSetEnumerator(5, 7, false)));
}

TEST(ClassicalTest, AndersonOlssonStantonArmstrong) {
  for (std::uint64_t a = 2; a <= 9; ++a) {
    for (std::uint64_t b = a + 1; b <= 9; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const FamilyStats stats = ComputeFamilyStats(a, b, false);
      EXPECT_EQ(stats.count, AndersonCount(a, b)) << a << "," << b;
      EXPECT_EQ(stats.largest_size, (a * a - 1) * (b * b - 1) / 24);
      EXPECT_EQ(stats.maximizer_count, 1u);
      EXPECT_EQ(stats.average_size(),
                Rational(static_cast<std::int64_t>((a - 1) * (b - 1) * (a + b + 1)),
                         24));
    }
  }
}

TEST(FamilyStatsTest, Examples) {
  const FamilyStats three_four = ComputeFamilyStats(3, 4, false);
  EXPECT_EQ(three_four.largest_size, 5u);
  EXPECT_EQ(three_four.average_size(), Rational(2));
  EXPECT_EQ(three_four.total_size, 10u);
  const FamilyStats two_three = ComputeFamilyStats(2, 3, false);
  EXPECT_EQ(two_three.count, 2u);
  EXPECT_EQ(two_three.largest_size, 1u);
}

TEST(CountDistinctCoreTest, Examples) {
  for (Modulus t = 2; t <= 30; ++t) {
    EXPECT_EQ(CountDistinctCore(t, 1, Family::kPlus),
              testing::Fibonacci(static_cast<unsigned>(t + 1)))
        << "t=" << t;
  }
  for (std::uint64_t m = 1; m <= 10; ++m) {
    EXPECT_EQ(CountDistinctCore(2, m, Family::kMinus), m);
  }
  EXPECT_EQ(CountDistinctCore(3, 1, Family::kPlus), 3u);
  EXPECT_THROW(CountDistinctCore(200, 1000, Family::kPlus), OverflowError);
}

TEST(CountDistinctCoreTest, MatchesStreamLength) {
  for (Family family : {Family::kPlus, Family::kMinus}) {
    for (Modulus t = 2; t <= 12; ++t) {
      for (std::uint64_t m = 1; m <= 5; ++m) {
        std::uint64_t n = 0;
        SequenceEnumerator e(t, m, family);
        while (e.Next()) ++n;
        ASSERT_EQ(CountDistinctCore(t, m, family), n)
            << "t=" << t << " m=" << m;
      }
    }
  }
}

// The sequence-space oracle and the order-ideal oracle see the same
// multiset of sizes.
TEST(DualOracleTest, SizeMultisetsAgree) {
  for (Family family : {Family::kPlus, Family::kMinus}) {
    for (Modulus t = 2; t <= 8; ++t) {
      for (std::uint64_t m = 1; m <= 3; ++m) {
        testing::SizeHistogram from_sequences;
        SequenceEnumerator seqs(t, m, family);
        while (auto s = seqs.Next()) ++from_sequences[FromSequence(*s).size()];
        testing::SizeHistogram from_ideals;
        CoreBetaSetEnumerator ideals(t, SecondModulus(t, m, family), true);
        while (auto beta = ideals.Next()) ++from_ideals[SizeFromBeta(*beta)];
        ASSERT_EQ(from_sequences, from_ideals) << "t=" << t << " m=" << m;
      }
    }
  }
}

}  // namespace
}  // namespace simcore
