// tests/rng_test.cpp

// Copyright 2026  The augvox authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "augvox/rng.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include <gtest/gtest.h>

namespace augvox {
namespace {

// Reference value for SplitMix64 seeded with 0, from the published generator.
TEST(Rng, MatchesSplitMix64ReferenceVector) {
  Rng rng(0);
  EXPECT_EQ(rng.next_u64(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.next_u64(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.next_u64(), 0x06C45D188009454Full);
}

TEST(Rng, SameSeedSameSequence) {
  Rng a(12345), b(12345);
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(Rng, UniformStaysInHalfOpenUnitInterval) {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, UniformMeanNearOneHalf) {
  Rng rng(11);
  const int n = 100000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += rng.uniform();
  // 3 sigma for the mean of n U[0,1) draws.
  const double sigma = std::sqrt(1.0 / 12.0 / n);
  EXPECT_NEAR(sum / n, 0.5, 3.0 * sigma);
}

TEST(Rng, UniformRangeRespectsBounds) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform(-2.5, 7.25);
    ASSERT_GE(u, -2.5);
    ASSERT_LT(u, 7.25);
  }
  EXPECT_EQ(rng.uniform(4.0, 4.0), 4.0);
}

TEST(Rng, UniformIntCoversInclusiveRangeEvenly) {
  Rng rng(42);
  std::vector<int> counts(4, 0);
  const int n = 10000;
  for (int i = 0; i < n; ++i) {
    const auto v = rng.uniform_int(0, 3);
    ASSERT_GE(v, 0);
    ASSERT_LE(v, 3);
    ++counts[static_cast<std::size_t>(v)];
  }
  for (int c : counts) EXPECT_NEAR(c, n / 4, 300);
}

TEST(Rng, UniformIntSinglePointAndNegativeRanges) {
  Rng rng(9);
  EXPECT_EQ(rng.uniform_int(5, 5), 5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(-4, -1);
    ASSERT_GE(v, -4);
    ASSERT_LE(v, -1);
  }
  EXPECT_THROW(rng.uniform_int(2, 1), Error);
}

TEST(Rng, BernoulliRateMatchesProbability) {
  Rng rng(100);
  const int n = 100000;
  int hits = 0;
  for (int i = 0; i < n; ++i) hits += rng.bernoulli(0.25) ? 1 : 0;
  const double sigma = std::sqrt(0.25 * 0.75 / n);
  EXPECT_NEAR(static_cast<double>(hits) / n, 0.25, 3.0 * sigma);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(rng.bernoulli(0.0));
    EXPECT_TRUE(rng.bernoulli(1.0));
  }
}

TEST(DeriveSeed, Deterministic) {
  EXPECT_EQ(derive_seed(1, "utt-001", 0, "noise"),
            derive_seed(1, "utt-001", 0, "noise"));
}

TEST(DeriveSeed, DistinctAcrossEveryKeyComponent) {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t master : {1ull, 2ull})
    for (const char* key : {"utt-001", "utt-002", "utt-0010"})
      for (std::int64_t epoch : {0, 1, 7})
        for (const char* purpose : {"noise", "rir", "pitch", "controls"})
          seeds.insert(derive_seed(master, key, epoch, purpose));
  EXPECT_EQ(seeds.size(), 2u * 3u * 3u * 4u);
}

// Concatenation ambiguity: (key="ab", purpose="c") must differ from
// (key="a", purpose="bc"). The separator between key and epoch plus the
// fixed-width epoch encoding prevents collisions.
TEST(DeriveSeed, KeyAndPurposeDoNotConcatenate) {
  EXPECT_NE(derive_seed(1, "ab", 0, "c"), derive_seed(1, "a", 0, "bc"));
}

TEST(DeriveSeed, StreamsAreIndependent) {
  Rng a = make_stream(5, "item", 0, "noise");
  Rng b = make_stream(5, "item", 0, "pitch");
  int equal = 0;
  for (int i = 0; i < 64; ++i) equal += a.next_u64() == b.next_u64() ? 1 : 0;
  EXPECT_EQ(equal, 0);
}

}  // namespace
}  // namespace augvox
