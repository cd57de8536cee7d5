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

// Randomized greedy maximum coverage over black-box sets.
//
// Each of the k rounds estimates, for every remaining set A_i, the size of
// A_i minus the union of the sets chosen so far, picks the first set with
// the largest estimate, and adds that estimate to the running coverage
// estimate z. How the gain is estimated is delegated to a CoverageStrategy:
//
//   * multi-round: a fresh ApproximateDifference call per (round, set) with
//     failure budget gamma / (4kn);
//   * single-round: g(eps', gamma, k, n) samples drawn per set up front;
//     samples falling in a newly chosen set are marked black and the white
//     count gives the gain;
//   * single-round sort-on-select: as single-round over unsorted arrays, but
//     each chosen array is sorted first so marking uses binary search.

#ifndef MAXCOVER_GREEDY_HPP_
#define MAXCOVER_GREEDY_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "maxcover/core.hpp"

namespace maxcover {

enum class Strategy { kMultiRound, kSingleRound, kSingleRoundSortOnSelect };

std::string_view StrategyName(Strategy s);
// Accepts "multi", "single", "single-sort".
std::optional<Strategy> ParseStrategy(std::string_view name);

inline constexpr double kEta = 0.77880078307140486825;  // e^(-1/4)

// xi = min(eps * eta * beta / (4 e^beta k), eps). Throws kDomain unless
// eps in (0,1), beta in (0,1], k >= 1.
double DeriveXi(double epsilon, double beta, std::size_t k);

struct GreedyParams {
  double xi = 0.0;
  double gamma = 0.0;
  double epsilon_prime = 0.0;  // xi / (4k)
  Strategy strategy = Strategy::kSingleRound;
  // 0 or 1: sequential. Results are identical for any thread count.
  std::size_t threads = 0;

  // xi derived from the target accuracy epsilon and the bias ratio beta.
  static GreedyParams FromEpsilon(double epsilon, double gamma, double beta,
                                  std::size_t k, Strategy strategy);
  // xi supplied directly.
  static GreedyParams FromXi(double xi, double gamma, std::size_t k,
                             Strategy strategy);
};

struct CoverageResult {
  std::vector<std::size_t> selected;  // t_1..t_k in selection order
  std::vector<double> gains;          // s_{t_j, j}
  // estimates[j][i] = s_{i, j+1}; NaN for sets already selected.
  std::vector<std::vector<double>> estimates;
  double z = 0.0;
  std::int64_t z_rounded = 0;
  std::uint64_t samples_per_estimate = 0;  // w used by the strategy
  CostCounters counters;                   // snapshot after the run
};

// Per-set sample lists R_i with white/black marks (single-round strategies).
class SampleCache {
 public:
  // Draws w samples from every set, all white. Set i uses rng.split(i).
  void Fill(const CoverageInstance& instance, std::uint64_t w, const Rng& rng,
            std::size_t threads);

  std::uint64_t w() const { return w_; }
  std::size_t set_count() const { return samples_.size(); }
  std::span<const Element> samples(std::size_t i) const { return samples_[i]; }
  bool black(std::size_t i, std::size_t j) const { return black_[i][j] != 0; }
  std::uint64_t white_count(std::size_t i) const { return white_[i]; }

  // Marks every white sample of R_i that lies in `chosen` as black. Returns
  // the number of key comparisons the membership queries performed.
  std::uint64_t MarkAgainst(std::size_t i, const SetHandle& chosen);

 private:
  std::uint64_t w_ = 0;
  std::vector<std::vector<Element>> samples_;
  std::vector<std::vector<std::uint8_t>> black_;
  std::vector<std::uint64_t> white_;
};

class CoverageStrategy {
 public:
  virtual ~CoverageStrategy() = default;
  virtual Strategy id() const = 0;

  // RandomSamples hook, run once before the first round. Returns the
  // per-estimate sample count w.
  virtual std::uint64_t Prepare(CoverageInstance& instance,
                                const GreedyParams& params, const Rng& rng) = 0;
  // s_{i,j}: estimate of |A_i - U(selected)| in round `round` (0-based).
  // Must be safe to call concurrently for distinct i.
  virtual double EstimateGain(const CoverageInstance& instance,
                              std::span<const SetHandle* const> selected,
                              std::size_t i, std::size_t round,
                              const Rng& rng) = 0;
  // ProcessSet hook plus whatever bookkeeping follows a selection.
  // `remaining` lists the sets still eligible after removing `chosen`.
  virtual void AfterSelect(CoverageInstance& instance, std::size_t chosen,
                           std::span<const std::size_t> remaining,
                           std::size_t round) = 0;
};

class MultiRoundStrategy final : public CoverageStrategy {
 public:
  Strategy id() const override { return Strategy::kMultiRound; }
  std::uint64_t Prepare(CoverageInstance& instance, const GreedyParams& params,
                        const Rng& rng) override;
  double EstimateGain(const CoverageInstance& instance,
                      std::span<const SetHandle* const> selected, std::size_t i,
                      std::size_t round, const Rng& rng) override;
  void AfterSelect(CoverageInstance&, std::size_t, std::span<const std::size_t>,
                   std::size_t) override {}

 private:
  double epsilon_prime_ = 0.0;
  double gamma_prime_ = 0.0;  // gamma / (4kn)
  std::uint64_t w_ = 0;
};

class SingleRoundStrategy : public CoverageStrategy {
 public:
  Strategy id() const override { return Strategy::kSingleRound; }
  std::uint64_t Prepare(CoverageInstance& instance, const GreedyParams& params,
                        const Rng& rng) override;
  double EstimateGain(const CoverageInstance& instance,
                      std::span<const SetHandle* const> selected, std::size_t i,
                      std::size_t round, const Rng& rng) override;
  void AfterSelect(CoverageInstance& instance, std::size_t chosen,
                   std::span<const std::size_t> remaining,
                   std::size_t round) override;

  const SampleCache& cache() const { return cache_; }
  // Comparisons spent marking each cache in the most recent marking pass,
  // indexed by set.
  const std::vector<std::uint64_t>& last_pass_comparisons() const {
    return last_pass_comparisons_;
  }

 protected:
  virtual void ProcessSet(CoverageInstance&, std::size_t) {}

 private:
  SampleCache cache_;
  std::size_t k_ = 0;
  std::size_t threads_ = 0;
  std::vector<std::uint64_t> last_pass_comparisons_;
};

// Requires every backend to be an UnsortedArraySet (kTypeMismatch
// otherwise); sorts each chosen set before marking.
class SortOnSelectStrategy final : public SingleRoundStrategy {
 public:
  Strategy id() const override { return Strategy::kSingleRoundSortOnSelect; }
  std::uint64_t Prepare(CoverageInstance& instance, const GreedyParams& params,
                        const Rng& rng) override;

 protected:
  void ProcessSet(CoverageInstance& instance, std::size_t chosen) override;
};

std::unique_ptr<CoverageStrategy> MakeStrategy(Strategy s);

// Runs k greedy rounds. `rng` is only split, never advanced, so the result
// is a function of (instance, params, rng.seed()).
CoverageResult ApproximateMaximumCover(CoverageInstance& instance,
                                       const GreedyParams& params,
                                       CoverageStrategy& strategy,
                                       const Rng& rng);
CoverageResult ApproximateMaximumCover(CoverageInstance& instance,
                                       const GreedyParams& params,
                                       const Rng& rng);

}  // namespace maxcover

#endif  // MAXCOVER_GREEDY_HPP_
