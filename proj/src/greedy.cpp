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

#include "maxcover/greedy.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "maxcover/backends.hpp"
#include "maxcover/estimation.hpp"
#include "maxcover/parallel.hpp"

namespace maxcover {

namespace {

constexpr std::uint64_t kCacheStream = 0;

void RequireOpenUnit(double v, const char* name) {
  if (!(v > 0.0 && v < 1.0)) {
    throw Error(ErrorCode::kDomain,
                std::string(name) + " must lie in (0, 1), got " + std::to_string(v));
  }
}

}  // namespace

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kMultiRound: return "multi";
    case Strategy::kSingleRound: return "single";
    case Strategy::kSingleRoundSortOnSelect: return "single-sort";
  }
  return "?";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  if (name == "multi") return Strategy::kMultiRound;
  if (name == "single") return Strategy::kSingleRound;
  if (name == "single-sort") return Strategy::kSingleRoundSortOnSelect;
  return std::nullopt;
}

double DeriveXi(double epsilon, double beta, std::size_t k) {
  RequireOpenUnit(epsilon, "epsilon");
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw Error(ErrorCode::kDomain, "beta must lie in (0, 1]");
  }
  if (k < 1) throw Error(ErrorCode::kDomain, "k must be >= 1");
  const double scaled =
      epsilon * kEta * beta / (4.0 * std::exp(beta) * static_cast<double>(k));
  return std::min(scaled, epsilon);
}

GreedyParams GreedyParams::FromEpsilon(double epsilon, double gamma,
                                       double beta, std::size_t k,
                                       Strategy strategy) {
  return FromXi(DeriveXi(epsilon, beta, k), gamma, k, strategy);
}

GreedyParams GreedyParams::FromXi(double xi, double gamma, std::size_t k,
                                  Strategy strategy) {
  RequireOpenUnit(xi, "xi");
  RequireOpenUnit(gamma, "gamma");
  if (k < 1) throw Error(ErrorCode::kDomain, "k must be >= 1");
  GreedyParams p;
  p.xi = xi;
  p.gamma = gamma;
  p.epsilon_prime = xi / (4.0 * static_cast<double>(k));
  p.strategy = strategy;
  return p;
}

// ---------------------------------------------------------------------------
// SampleCache

void SampleCache::Fill(const CoverageInstance& instance, std::uint64_t w,
                       const Rng& rng, std::size_t threads) {
  const std::size_t n = instance.set_count();
  w_ = w;
  samples_.assign(n, {});
  black_.assign(n, {});
  white_.assign(n, 0);
  ParallelFor(n, threads, [&](std::size_t i) {
    const SetHandle& h = instance.handle(i);
    if (h.empty()) return;  // nothing to sample; gain stays 0
    Rng stream = rng.split(i);
    samples_[i].resize(w);
    h.random_elements(stream, samples_[i]);
    black_[i].assign(w, 0);
    white_[i] = w;
  });
}

std::uint64_t SampleCache::MarkAgainst(std::size_t i, const SetHandle& chosen) {
  std::uint64_t marked = 0;
  auto& flags = black_[i];
  const auto& list = samples_[i];
  QueryBatch batch(chosen);
  for (std::size_t j = 0; j < list.size(); ++j) {
    if (flags[j]) continue;
    if (batch.member(list[j])) {
      flags[j] = 1;
      ++marked;
    }
  }
  white_[i] -= marked;
  chosen.meter()->AddSteps(marked);
  return batch.comparisons();
}

// ---------------------------------------------------------------------------
// Strategies

std::uint64_t MultiRoundStrategy::Prepare(CoverageInstance& instance,
                                          const GreedyParams& params,
                                          const Rng&) {
  const double kn = static_cast<double>(instance.k()) *
                    static_cast<double>(instance.set_count());
  epsilon_prime_ = params.epsilon_prime;
  gamma_prime_ = params.gamma / (4.0 * kn);
  w_ = SampleCount(epsilon_prime_, gamma_prime_);
  return w_;
}

double MultiRoundStrategy::EstimateGain(
    const CoverageInstance& instance, std::span<const SetHandle* const> selected,
    std::size_t i, std::size_t round, const Rng& rng) {
  const SetHandle& h = instance.handle(i);
  instance.meter().AddSteps(1);
  if (h.empty()) return 0.0;
  Rng stream = rng.split(round + 1).split(i);
  return ApproximateDifference(selected, h, h.reported_size(), epsilon_prime_,
                               gamma_prime_, stream)
      .s;
}

std::uint64_t SingleRoundStrategy::Prepare(CoverageInstance& instance,
                                           const GreedyParams& params,
                                           const Rng& rng) {
  k_ = instance.k();
  threads_ = params.threads;
  const std::uint64_t w = SharedSampleBudget(params.epsilon_prime, params.gamma,
                                             instance.k(), instance.set_count());
  cache_.Fill(instance, w, rng.split(kCacheStream), threads_);
  last_pass_comparisons_.assign(instance.set_count(), 0);
  return w;
}

double SingleRoundStrategy::EstimateGain(const CoverageInstance& instance,
                                         std::span<const SetHandle* const>,
                                         std::size_t i, std::size_t,
                                         const Rng&) {
  instance.meter().AddSteps(1);
  const SetHandle& h = instance.handle(i);
  if (h.empty()) return 0.0;
  return static_cast<double>(cache_.white_count(i)) /
         static_cast<double>(cache_.w()) * h.reported_size();
}

void SingleRoundStrategy::AfterSelect(CoverageInstance& instance,
                                      std::size_t chosen,
                                      std::span<const std::size_t> remaining,
                                      std::size_t round) {
  ProcessSet(instance, chosen);
  // No estimate follows the k-th selection, so its marking pass is skipped.
  if (round + 1 >= k_) return;
  const SetHandle& picked = instance.handle(chosen);
  ParallelFor(remaining.size(), threads_, [&](std::size_t r) {
    const std::size_t i = remaining[r];
    last_pass_comparisons_[i] = cache_.MarkAgainst(i, picked);
  });
}

std::uint64_t SortOnSelectStrategy::Prepare(CoverageInstance& instance,
                                            const GreedyParams& params,
                                            const Rng& rng) {
  for (const auto& h : instance.handles()) {
    if (dynamic_cast<const UnsortedArraySet*>(&h.backend()) == nullptr) {
      throw Error(ErrorCode::kTypeMismatch,
                  "sort-on-select needs unsorted-array backends, set " +
                      std::to_string(h.set_id()) + " is '" +
                      std::string(h.backend().kind()) + "'");
    }
  }
  return SingleRoundStrategy::Prepare(instance, params, rng);
}

void SortOnSelectStrategy::ProcessSet(CoverageInstance& instance,
                                      std::size_t chosen) {
  auto& backend = static_cast<UnsortedArraySet&>(
      instance.mutable_handle(chosen).mutable_backend());
  const std::uint64_t m = backend.size();
  backend.SortInPlace();
  // Sorting cost, charged as m * ceil(log2 m) abstract steps.
  if (m > 1) {
    instance.meter().AddSteps(m * static_cast<std::uint64_t>(
                                      std::ceil(std::log2(static_cast<double>(m)))));
  }
}

std::unique_ptr<CoverageStrategy> MakeStrategy(Strategy s) {
  switch (s) {
    case Strategy::kMultiRound: return std::make_unique<MultiRoundStrategy>();
    case Strategy::kSingleRound: return std::make_unique<SingleRoundStrategy>();
    case Strategy::kSingleRoundSortOnSelect:
      return std::make_unique<SortOnSelectStrategy>();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy");
}

// ---------------------------------------------------------------------------
// Main loop

CoverageResult ApproximateMaximumCover(CoverageInstance& instance,
                                       const GreedyParams& params,
                                       CoverageStrategy& strategy,
                                       const Rng& rng) {
  RequireOpenUnit(params.gamma, "gamma");
  RequireOpenUnit(params.xi, "xi");
  const std::size_t n = instance.set_count();
  const std::size_t k = instance.k();

  CoverageResult result;
  result.samples_per_estimate = strategy.Prepare(instance, params, rng);

  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;
  std::vector<const SetHandle*> chosen_sets;
  std::vector<double> round_gains;

  for (std::size_t round = 0; round < k; ++round) {
    round_gains.assign(remaining.size(), 0.0);
    ParallelFor(remaining.size(), params.threads, [&](std::size_t r) {
      round_gains[r] = strategy.EstimateGain(instance, chosen_sets, remaining[r],
                                             round, rng);
    });

    // Strict > from -1: the earliest maximum wins.
    double best = -1.0;
    std::size_t best_pos = 0;
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      if (round_gains[r] > best) {
        best = round_gains[r];
        best_pos = r;
      }
    }
    instance.meter().AddSteps(remaining.size());

    auto& row = result.estimates.emplace_back(
        n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t r = 0; r < remaining.size(); ++r) {
      row[remaining[r]] = round_gains[r];
    }

    const std::size_t chosen = remaining[best_pos];
    result.selected.push_back(chosen);
    result.gains.push_back(best);
    result.z += best;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_pos));
    chosen_sets.push_back(&instance.handle(chosen));
    strategy.AfterSelect(instance, chosen, remaining, round);
  }

  result.z_rounded = std::llround(result.z);
  result.counters = instance.counters();
  return result;
}

CoverageResult ApproximateMaximumCover(CoverageInstance& instance,
                                       const GreedyParams& params,
                                       const Rng& rng) {
  auto strategy = MakeStrategy(params.strategy);
  return ApproximateMaximumCover(instance, params, *strategy, rng);
}

}  // namespace maxcover
