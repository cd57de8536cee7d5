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

// Black-box set model shared by every backend and algorithm.
//
// A set is visible to the coverage algorithms only through three
// operations: its (possibly approximate) size, a random-element generator,
// and a membership query. Every call made through a SetHandle is charged to
// a CostMeter, which tracks the (steps, random draws, membership queries)
// triple.

#ifndef MAXCOVER_CORE_HPP_
#define MAXCOVER_CORE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maxcover {

// Canonical universe encoding. Multi-dimensional points are packed into this
// by the backend that owns them.
using Element = std::uint64_t;

enum class ErrorCode {
  kInvalidArgument = 1,
  kEmptySet,
  kOverflow,
  kInfeasibleSkew,
  kCapExceeded,
  kParse,
  kTypeMismatch,
  kDomain,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Seeded, splittable random stream. split() derives an independent child
// stream from the seed alone, so the parent's state is never consumed and
// results do not depend on the order in which children are created.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t stream) const;

  // Uniform integer in the closed range [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
  }
  std::int64_t uniform_signed(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  // Uniform real in [0, 1).
  double unit() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t Mix64(std::uint64_t x);

// ((alpha_l, alpha_r), (delta_l, delta_r)): generator bias and size
// approximation bounds of a type-1 set list.
struct BiasProfile {
  double alpha_l = 0.0;
  double alpha_r = 0.0;
  double delta_l = 0.0;
  double delta_r = 0.0;

  // Throws kDomain unless every field lies in [0, 1).
  void Validate() const;
  bool IsZero() const {
    return alpha_l == 0.0 && alpha_r == 0.0 && delta_l == 0.0 &&
           delta_r == 0.0;
  }
  // (1-alpha_l)(1-delta_l) / ((1+alpha_r)(1+delta_r)), in (0, 1].
  double beta() const;

  bool operator==(const BiasProfile&) const = default;
};

// The (T, R, Q) cost triple.
struct CostCounters {
  std::uint64_t steps = 0;
  std::uint64_t random_draws = 0;
  std::uint64_t membership_queries = 0;

  bool operator==(const CostCounters&) const = default;
};

// Thread-safe accumulator behind CostCounters.
class CostMeter {
 public:
  void AddSteps(std::uint64_t n) { steps_.fetch_add(n, kOrder); }
  void AddDraw() {
    draws_.fetch_add(1, kOrder);
    steps_.fetch_add(1, kOrder);
  }
  void AddQuery(std::uint64_t comparisons) {
    queries_.fetch_add(1, kOrder);
    steps_.fetch_add(comparisons == 0 ? 1 : comparisons, kOrder);
  }
  void AddDraws(std::uint64_t n) {
    draws_.fetch_add(n, kOrder);
    steps_.fetch_add(n, kOrder);
  }
  // A batch of queries already tallied by the caller.
  void AddQueries(std::uint64_t queries, std::uint64_t steps) {
    queries_.fetch_add(queries, kOrder);
    steps_.fetch_add(steps, kOrder);
  }
  CostCounters Snapshot() const {
    return {steps_.load(), draws_.load(), queries_.load()};
  }
  void Reset() {
    steps_ = 0;
    draws_ = 0;
    queries_ = 0;
  }

 private:
  static constexpr auto kOrder = std::memory_order_relaxed;
  std::atomic<std::uint64_t> steps_{0};
  std::atomic<std::uint64_t> draws_{0};
  std::atomic<std::uint64_t> queries_{0};
};

// A concrete set representation. Read operations must be safe to call
// concurrently; mutating operations of derived classes need exclusive access.
class SetBackend {
 public:
  virtual ~SetBackend() = default;

  virtual std::string_view kind() const = 0;
  virtual std::uint64_t size() const = 0;
  bool empty() const { return size() == 0; }

  // Member number `index` (0-based) in a fixed enumeration order.
  virtual Element at(std::uint64_t index) const = 0;

  // Uniform draw. Default implementation is at(uniform index).
  virtual Element random_element(Rng& rng) const;

  virtual bool contains(Element x) const = 0;
  // Same as contains(), additionally adding the number of key comparisons
  // performed to `comparisons`.
  virtual bool contains(Element x, std::uint64_t& comparisons) const {
    ++comparisons;
    return contains(x);
  }

  // All members in enumeration order.
  virtual std::vector<Element> materialize() const;
  virtual std::unique_ptr<SetBackend> clone() const = 0;
};

// Deliberately (alpha_l, alpha_r)-biased generator over any backend. The
// first floor(m/2) members in enumeration order are drawn with probability
// (1-alpha_l)/m each; the rest share the remaining mass uniformly.
class SkewedSampler {
 public:
  // Throws kInfeasibleSkew when the upper bound (1+alpha_r)/m cannot hold.
  SkewedSampler(std::uint64_t m, double alpha_l, double alpha_r);

  std::uint64_t low_count() const { return low_count_; }
  double low_probability() const { return low_probability_; }
  double high_probability() const { return high_probability_; }

  // Probability assigned to member number `index`.
  double probability(std::uint64_t index) const {
    return index < low_count_ ? low_probability_ : high_probability_;
  }
  Element Draw(const SetBackend& backend, Rng& rng) const;

 private:
  std::uint64_t m_;
  std::uint64_t low_count_;
  double low_mass_;
  double low_probability_;
  double high_probability_;
};

// Black-box view of one input set. All accesses are charged to the meter.
class SetHandle {
 public:
  SetHandle(std::size_t set_id, std::shared_ptr<SetBackend> backend,
            double reported_size, std::optional<SkewedSampler> skew,
            std::shared_ptr<CostMeter> meter);

  std::size_t set_id() const { return set_id_; }
  double reported_size() const { return reported_size_; }
  // Exact cardinality of the underlying backend (not charged).
  std::uint64_t exact_size() const { return backend_->size(); }
  bool empty() const { return backend_->empty(); }

  // Throws kEmptySet when the set has no members.
  Element random_element(Rng& rng) const;
  // out.size() draws, charged as that many random_element calls.
  void random_elements(Rng& rng, std::span<Element> out) const;
  bool member(Element x) const;
  // As member(), also adding the backend's key comparisons to `comparisons`.
  bool member(Element x, std::uint64_t& comparisons) const;

  const SetBackend& backend() const { return *backend_; }
  SetBackend& mutable_backend() { return *backend_; }
  const std::shared_ptr<CostMeter>& meter() const { return meter_; }

 private:
  friend class QueryBatch;

  std::size_t set_id_;
  std::shared_ptr<SetBackend> backend_;
  double reported_size_;
  std::optional<SkewedSampler> skew_;
  std::shared_ptr<CostMeter> meter_;
};

// Membership queries against one handle, charged to its meter in a single
// update when the batch is destroyed. Charges are identical to calling
// SetHandle::member once per query.
class QueryBatch {
 public:
  explicit QueryBatch(const SetHandle& handle) : handle_(handle) {}
  QueryBatch(const QueryBatch&) = delete;
  QueryBatch& operator=(const QueryBatch&) = delete;
  ~QueryBatch() { handle_.meter_->AddQueries(queries_, steps_); }

  bool member(Element x) {
    std::uint64_t local = 0;
    const bool found = handle_.backend_->contains(x, local);
    ++queries_;
    steps_ += local == 0 ? 1 : local;
    comparisons_ += local;
    return found;
  }
  std::uint64_t comparisons() const { return comparisons_; }

 private:
  const SetHandle& handle_;
  std::uint64_t queries_ = 0;
  std::uint64_t steps_ = 0;
  std::uint64_t comparisons_ = 0;
};

// Wraps a backend into a handle whose reported size and generator honor the
// bias profile: reported size uniform in [(1-delta_l)|A|, (1+delta_r)|A|]
// (exact for zero deltas) and a skewed generator for nonzero alphas.
SetHandle MakeHandle(std::size_t set_id, std::shared_ptr<SetBackend> backend,
                     const BiasProfile& bias, Rng& rng,
                     std::shared_ptr<CostMeter> meter);

// n set handles plus the budget k. All handles share one meter.
class CoverageInstance {
 public:
  // Throws kInvalidArgument unless 1 <= k <= n, and (unless allow_empty)
  // every set is nonempty.
  CoverageInstance(std::vector<SetHandle> handles, std::size_t k,
                   BiasProfile bias, std::shared_ptr<CostMeter> meter,
                   bool allow_empty = false);

  // Builds handles for `backends` with MakeHandle and a fresh meter.
  static CoverageInstance FromBackends(
      std::vector<std::shared_ptr<SetBackend>> backends, std::size_t k,
      const BiasProfile& bias, Rng& rng, bool allow_empty = false);

  std::size_t set_count() const { return handles_.size(); }
  std::size_t k() const { return k_; }
  const BiasProfile& bias() const { return bias_; }
  // Largest exact set size m.
  std::uint64_t max_set_size() const;

  const SetHandle& handle(std::size_t i) const { return handles_.at(i); }
  SetHandle& mutable_handle(std::size_t i) { return handles_.at(i); }
  const std::vector<SetHandle>& handles() const { return handles_; }

  CostMeter& meter() const { return *meter_; }
  CostCounters counters() const { return meter_->Snapshot(); }

 private:
  std::vector<SetHandle> handles_;
  std::size_t k_;
  BiasProfile bias_;
  std::shared_ptr<CostMeter> meter_;
};

}  // namespace maxcover

#endif  // MAXCOVER_CORE_HPP_
