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

#include <cmath>
#include <numeric>
#include <set>

#include "maxcover/backends.hpp"
#include "maxcover/baselines.hpp"
#include "maxcover/estimation.hpp"
#include "maxcover/greedy.hpp"

namespace maxcover {
namespace {

using Sets = std::vector<std::vector<Element>>;

CoverageInstance Build(const Sets& sets, std::size_t k, bool unsorted = false,
                       std::uint64_t seed = 1) {
  std::vector<std::shared_ptr<SetBackend>> backends;
  for (const auto& s : sets) {
    if (unsorted) {
      backends.push_back(std::make_shared<UnsortedArraySet>(s));
    } else {
      backends.push_back(std::make_shared<SortedArraySet>(s));
    }
  }
  Rng rng(seed);
  return CoverageInstance::FromBackends(std::move(backends), k, BiasProfile{}, rng);
}

Sets RandomSets(std::size_t n, std::size_t max_size, Element universe, Rng& rng) {
  Sets out(n);
  for (auto& s : out) {
    std::set<Element> members;
    const std::size_t size = rng.uniform(1, max_size);
    while (members.size() < size) members.insert(rng.uniform(1, universe));
    std::vector<Element> v(members.begin(), members.end());
    std::shuffle(v.begin(), v.end(), rng.engine());
    s = v;
  }
  return out;
}

const Strategy kAllStrategies[] = {Strategy::kMultiRound, Strategy::kSingleRound,
                                   Strategy::kSingleRoundSortOnSelect};

TEST(DeriveXiTest, Formula) {
  // beta = 1, k = 1: xi = eps * e^(-1/4) * e^(-1) / 4 = eps * e^(-1.25) / 4.
  EXPECT_NEAR(DeriveXi(0.01, 1.0, 1), 0.01 * 0.07162619921504752, 1e-15);
  EXPECT_LT(DeriveXi(0.5, 1.0, 3), DeriveXi(0.5, 1.0, 2));
  EXPECT_LE(DeriveXi(0.9, 0.5, 1), 0.9);
  EXPECT_THROW(DeriveXi(0.0, 1.0, 1), Error);
  EXPECT_THROW(DeriveXi(0.5, 0.0, 1), Error);
  EXPECT_THROW(DeriveXi(0.5, 1.5, 1), Error);
  EXPECT_THROW(DeriveXi(0.5, 1.0, 0), Error);
}

TEST(GreedyParamsTest, EpsilonPrime) {
  const auto p = GreedyParams::FromXi(0.2, 0.1, 4, Strategy::kSingleRound);
  EXPECT_DOUBLE_EQ(p.epsilon_prime, 0.2 / 16);
  const auto q = GreedyParams::FromEpsilon(0.2, 0.1, 1.0, 2, Strategy::kMultiRound);
  EXPECT_DOUBLE_EQ(q.xi, DeriveXi(0.2, 1.0, 2));
}

TEST(StrategyNameTest, RoundTrip) {
  for (Strategy s : kAllStrategies) EXPECT_EQ(ParseStrategy(StrategyName(s)), s);
  EXPECT_FALSE(ParseStrategy("lazy").has_value());
}

TEST(GreedyTest, RoundOneEstimatesEqualReportedSizes) {
  const Sets sets = {{1, 2, 3}, {3, 4}, {4, 5, 6, 7}, {9}};
  for (Strategy s : kAllStrategies) {
    CoverageInstance inst = Build(sets, 2, /*unsorted=*/true);
    const auto r = ApproximateMaximumCover(inst, GreedyParams::FromXi(0.5, 0.2, 2, s), Rng(3));
    ASSERT_EQ(r.estimates.size(), 2u);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      EXPECT_DOUBLE_EQ(r.estimates[0][i], static_cast<double>(sets[i].size()))
          << StrategyName(s) << " set " << i;
    }
    EXPECT_EQ(r.selected.front(), 2u);
  }
}

TEST(GreedyTest, ResultShape) {
  Rng gen(5);
  const Sets sets = RandomSets(8, 20, 60, gen);
  for (Strategy s : kAllStrategies) {
    CoverageInstance inst = Build(sets, 3, true);
    const auto r = ApproximateMaximumCover(inst, GreedyParams::FromXi(0.5, 0.2, 3, s), Rng(8));
    ASSERT_EQ(r.selected.size(), 3u);
    EXPECT_EQ(std::set<std::size_t>(r.selected.begin(), r.selected.end()).size(), 3u);
    EXPECT_DOUBLE_EQ(r.z, std::accumulate(r.gains.begin(), r.gains.end(), 0.0));
    EXPECT_EQ(r.z_rounded, std::llround(r.z));
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_DOUBLE_EQ(r.gains[j], r.estimates[j][r.selected[j]]);
      for (std::size_t prev = 0; prev < j; ++prev) {
        EXPECT_TRUE(std::isnan(r.estimates[j][r.selected[prev]]));
      }
    }
  }
}

TEST(GreedyTest, DeterministicAcrossThreadCounts) {
  Rng gen(9);
  const Sets sets = RandomSets(12, 30, 80, gen);
  for (Strategy s : kAllStrategies) {
    auto params = GreedyParams::FromXi(0.4, 0.2, 3, s);
    CoverageInstance a = Build(sets, 3, true);
    const auto ra = ApproximateMaximumCover(a, params, Rng(17));
    params.threads = 4;
    CoverageInstance b = Build(sets, 3, true);
    const auto rb = ApproximateMaximumCover(b, params, Rng(17));
    EXPECT_EQ(ra.selected, rb.selected) << StrategyName(s);
    EXPECT_EQ(ra.z, rb.z) << StrategyName(s);
    EXPECT_EQ(ra.counters, rb.counters) << StrategyName(s);
  }
}

// The white count of every unselected set equals a recount of its samples
// outside the union of the sets chosen before the final round.
TEST(GreedyTest, SingleRoundWhiteCountsMatchRecount) {
  Rng gen(13);
  const Sets sets = RandomSets(10, 25, 50, gen);
  CoverageInstance inst = Build(sets, 4);
  SingleRoundStrategy strategy;
  const auto r = ApproximateMaximumCover(
      inst, GreedyParams::FromXi(0.5, 0.2, 4, Strategy::kSingleRound), strategy, Rng(2));
  std::set<Element> covered;
  for (std::size_t j = 0; j + 1 < r.selected.size(); ++j) {
    covered.insert(sets[r.selected[j]].begin(), sets[r.selected[j]].end());
  }
  const std::set<std::size_t> chosen(r.selected.begin(), r.selected.end());
  const SampleCache& cache = strategy.cache();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (chosen.count(i)) continue;
    std::uint64_t white = 0;
    for (Element x : cache.samples(i)) white += covered.count(x) == 0;
    EXPECT_EQ(cache.white_count(i), white) << "set " << i;
    ASSERT_EQ(cache.samples(i).size(), cache.w());
  }
}

TEST(GreedyTest, ThreeSetExample) {
  const Sets sets = {{1, 2, 3}, {3, 4}, {4, 5, 6}};
  EXPECT_EQ(BruteForceOptimum(sets, 2).coverage, 6u);
  constexpr int kTrials = 200;
  constexpr double kGamma = 0.1;
  int failures = 0;
  for (int t = 0; t < kTrials; ++t) {
    CoverageInstance inst = Build(sets, 2);
    const auto r = ApproximateMaximumCover(
        inst, GreedyParams::FromXi(0.5, kGamma, 2, Strategy::kSingleRound), Rng(1000 + t));
    if (UnionSize(sets, r.selected) < 4) ++failures;
  }
  EXPECT_LE(failures / static_cast<double>(kTrials),
            kGamma + 3 * std::sqrt(kGamma * (1 - kGamma) / kTrials));
}

TEST(GreedyTest, BudgetEqualToSetCountSelectsEverything) {
  const Sets sets = {{1, 2}, {2, 3}, {7}};
  for (Strategy s : kAllStrategies) {
    CoverageInstance inst = Build(sets, 3, true);
    const auto r = ApproximateMaximumCover(inst, GreedyParams::FromXi(0.5, 0.2, 3, s), Rng(4));
    EXPECT_EQ(std::set<std::size_t>(r.selected.begin(), r.selected.end()),
              (std::set<std::size_t>{0, 1, 2}));
    EXPECT_EQ(UnionSize(sets, r.selected), 4u);
  }
}

TEST(GreedyTest, DisjointSetsAlwaysOptimal) {
  Sets sets;
  for (Element i = 0; i < 6; ++i) {
    std::vector<Element> s(10);
    std::iota(s.begin(), s.end(), i * 10);
    sets.push_back(s);
  }
  for (Strategy s : kAllStrategies) {
    CoverageInstance inst = Build(sets, 3, true);
    const auto r = ApproximateMaximumCover(inst, GreedyParams::FromXi(0.3, 0.1, 3, s), Rng(6));
    EXPECT_EQ(UnionSize(sets, r.selected), 30u);
    EXPECT_NEAR(r.z, 30.0, 0.3 * 30.0);
  }
}

TEST(GreedyTest, DrawCounters) {
  Rng gen(21);
  const Sets sets = RandomSets(9, 15, 40, gen);
  const std::uint64_t n = 9, k = 3;
  const double xi = 0.5, gamma = 0.2, eps_prime = xi / (4.0 * k);

  CoverageInstance single = Build(sets, k);
  const auto rs = ApproximateMaximumCover(
      single, GreedyParams::FromXi(xi, gamma, k, Strategy::kSingleRound), Rng(1));
  const std::uint64_t g = SharedSampleBudget(eps_prime, gamma, k, n);
  EXPECT_EQ(rs.samples_per_estimate, g);
  EXPECT_EQ(rs.counters.random_draws, n * g);
  EXPECT_LE(rs.counters.membership_queries, (k - 1) * n * g);

  CoverageInstance multi = Build(sets, k);
  const auto rm = ApproximateMaximumCover(
      multi, GreedyParams::FromXi(xi, gamma, k, Strategy::kMultiRound), Rng(1));
  const std::uint64_t w = SampleCount(eps_prime, gamma / (4.0 * k * n));
  EXPECT_EQ(rm.samples_per_estimate, w);
  // One estimate per remaining set per round: n + (n-1) + (n-2).
  EXPECT_EQ(rm.counters.random_draws, w * (n + (n - 1) + (n - 2)));
  EXPECT_LE(rm.counters.membership_queries, w * ((n - 1) * 1 + (n - 2) * 2));
}

TEST(GreedyTest, SortOnSelectNeedsUnsortedArrays) {
  CoverageInstance inst = Build({{1, 2}, {3}}, 1, /*unsorted=*/false);
  try {
    ApproximateMaximumCover(
        inst, GreedyParams::FromXi(0.5, 0.2, 1, Strategy::kSingleRoundSortOnSelect), Rng(1));
    FAIL() << "expected kTypeMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTypeMismatch);
  }
}

TEST(GreedyTest, SortOnSelectSortsChosenSetsOnly) {
  const Sets sets = {{9, 1, 5}, {8, 2}, {30, 20, 10, 40}};
  CoverageInstance inst = Build(sets, 2, true);
  ApproximateMaximumCover(
      inst, GreedyParams::FromXi(0.5, 0.2, 2, Strategy::kSingleRoundSortOnSelect), Rng(1));
  std::size_t sorted = 0;
  for (const auto& h : inst.handles()) {
    sorted += static_cast<const UnsortedArraySet&>(h.backend()).sorted();
  }
  EXPECT_EQ(sorted, 2u);
}

}  // namespace
}  // namespace maxcover
