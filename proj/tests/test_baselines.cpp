// Copyright 2026 The maxcover Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "maxcover/baselines.hpp"

namespace maxcover {
namespace {

std::vector<ElementList> RandomFamily(std::size_t n, std::size_t max_size, Element universe,
                                      Rng& rng) {
  std::vector<ElementList> out(n);
  for (auto& s : out) {
    std::set<Element> m;
    const std::size_t size = rng.uniform(1, max_size);
    while (m.size() < size) m.insert(rng.uniform(1, universe));
    s.assign(m.begin(), m.end());
  }
  return out;
}

// Oracle: union size of a subset given as a bitmask, via std::set.
std::size_t MaskUnion(const std::vector<ElementList>& sets, std::uint32_t mask) {
  std::set<Element> u;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (mask >> i & 1) u.insert(sets[i].begin(), sets[i].end());
  }
  return u.size();
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(15, 3), 455u);
  EXPECT_EQ(Binomial(3, 5), 0u);
  EXPECT_EQ(Binomial(67, 33), 14226520737620288370ULL);
  EXPECT_EQ(Binomial(100, 50), std::numeric_limits<std::uint64_t>::max());
}

TEST(UnionSizeTest, CountsDistinct) {
  const std::vector<ElementList> sets = {{1, 2, 3}, {3, 4}, {4, 5, 6}};
  const std::vector<std::size_t> idx = {0, 1};
  EXPECT_EQ(UnionSize(sets, idx), 4u);
}

TEST(ExactGreedyTest, EarliestIndexWinsTies) {
  const std::vector<ElementList> sets = {{1, 2}, {3, 4}, {1, 2, 3}};
  const auto g = ExactGreedy(sets, 2);
  EXPECT_EQ(g.indices, (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(g.coverage, 4u);
}

TEST(BruteForceTest, MatchesMaskOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform(1, 9);
    const auto sets = RandomFamily(n, 6, 15, rng);
    const std::size_t k = rng.uniform(1, n);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) == k) {
        best = std::max(best, MaskUnion(sets, mask));
      }
    }
    const auto bf = BruteForceOptimum(sets, k);
    EXPECT_EQ(bf.coverage, best);
    EXPECT_EQ(UnionSize(sets, bf.indices), best);
    EXPECT_TRUE(std::is_sorted(bf.indices.begin(), bf.indices.end()));
  }
}

TEST(BruteForceTest, LexicographicTieBreak) {
  const std::vector<ElementList> sets = {{1}, {2}, {1}, {2}};
  EXPECT_EQ(BruteForceOptimum(sets, 2).indices, (std::vector<std::size_t>{0, 1}));
}

TEST(BruteForceTest, CapExceeded) {
  std::vector<ElementList> sets(30, ElementList{1});
  try {
    BruteForceOptimum(sets, 15, 1000);
    FAIL() << "expected kCapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_THROW(BruteForceOptimum(sets, 0), Error);
  EXPECT_THROW(BruteForceOptimum(sets, 31), Error);
}

TEST(MinCoverTest, MatchesMaskOracle) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = rng.uniform(1, 8);
    const auto sets = RandomFamily(n, 5, 12, rng);
    const std::size_t all = MaskUnion(sets, (1u << n) - 1);
    std::size_t best = n;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (MaskUnion(sets, mask) == all) {
        best = std::min<std::size_t>(best, std::popcount(mask));
      }
    }
    EXPECT_EQ(BruteForceMinCover(sets), best);
  }
}

TEST(GreedyFloorTest, HoldsOnRandomFamilies) {
  Rng rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.uniform(2, 10);
    const auto sets = RandomFamily(n, 8, 25, rng);
    const std::size_t k = rng.uniform(1, n);
    const double floor = 1.0 - std::pow(1.0 - 1.0 / k, static_cast<double>(k));
    EXPECT_GE(static_cast<double>(ExactGreedy(sets, k).coverage) + 1e-9,
              floor * static_cast<double>(BruteForceOptimum(sets, k).coverage));
  }
}

TEST(EqualSizePadTest, SetCoverMode) {
  const std::vector<ElementList> sets = {{1, 2}, {2, 3, 4}, {9}};
  const auto padded = EqualSizePad(sets, PadMode::kSetCover);
  ASSERT_EQ(padded.size(), 4u);
  EXPECT_EQ(padded[0], (ElementList{10, 11, 12}));
  EXPECT_EQ(padded[1], (ElementList{1, 2, 10}));
  EXPECT_EQ(padded[2], (ElementList{2, 3, 4}));
  EXPECT_EQ(padded[3], (ElementList{9, 10, 11}));
  EXPECT_EQ(BruteForceMinCover(sets) + 1, BruteForceMinCover(padded));
}

TEST(EqualSizePadTest, MaxCoverMode) {
  const std::vector<ElementList> sets = {{5, 1, 3, 7}, {3}, {8, 9}};
  const auto padded = EqualSizePad(sets, PadMode::kMaxCover);
  ASSERT_EQ(padded.size(), 3u);
  EXPECT_EQ(padded[0], sets[0]);
  EXPECT_EQ(padded[1], (ElementList{3, 1, 5, 7}));
  EXPECT_EQ(padded[2], (ElementList{8, 9, 1, 3}));
  EXPECT_THROW(EqualSizePad(std::vector<ElementList>{{1}, {2, 3}}, PadMode::kMaxCover), Error);
}

TEST(EqualSizePadTest, Errors) {
  EXPECT_THROW(EqualSizePad({}, PadMode::kSetCover), Error);
  EXPECT_THROW(EqualSizePad(std::vector<ElementList>{{1}, {}}, PadMode::kSetCover), Error);
  try {
    EqualSizePad(std::vector<ElementList>{{std::numeric_limits<Element>::max()}, {1, 2}},
                 PadMode::kSetCover);
    FAIL() << "expected kOverflow";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

}  // namespace
}  // namespace maxcover
