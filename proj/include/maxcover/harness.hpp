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

// Instance files, generators and experiment drivers.
//
// Instance file format (line oriented, '#' starts a comment):
//
//   maxcover-instance 1
//   k 2
//   seed 7
//   bias 0 0 0 0                # alpha_l alpha_r delta_l delta_r
//   sets 2
//   explicit 3 1 2 3            # count, then the elements
//   rectangle 2 0 0 2 3         # dim, lo[0..dim), hi[0..dim)
//
// Reals are written with 17 significant digits so emit/parse round-trips.

#ifndef MAXCOVER_HARNESS_HPP_
#define MAXCOVER_HARNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "maxcover/baselines.hpp"
#include "maxcover/core.hpp"
#include "maxcover/greedy.hpp"

namespace maxcover::harness {

inline constexpr int kFormatVersion = 1;

struct ExplicitSet {
  std::vector<Element> elements;
  bool operator==(const ExplicitSet&) const = default;
};

struct RectangleSet {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  bool operator==(const RectangleSet&) const = default;
};

using SetSpec = std::variant<ExplicitSet, RectangleSet>;

struct InstanceFile {
  int format_version = kFormatVersion;
  std::size_t k = 1;
  std::vector<SetSpec> sets;
  BiasProfile bias;
  std::uint64_t seed = 0;
  bool operator==(const InstanceFile&) const = default;
};

std::string EmitInstance(const InstanceFile& file);
// Throws kParse (message carries the line number) on malformed input,
// including duplicate elements inside an explicit set.
InstanceFile ParseInstance(std::string_view text);
InstanceFile LoadInstance(const std::string& path);
void SaveInstance(const InstanceFile& file, const std::string& path);

// Every set as an element list (rectangles enumerated). Throws
// kCapExceeded when the total element count exceeds `cap`.
std::vector<ElementList> MaterializeSets(const InstanceFile& file,
                                         std::uint64_t cap = 10'000'000);

enum class BackendKind { kSorted, kUnsorted, kBTree, kHash, kRect };
std::string_view BackendName(BackendKind kind);
std::optional<BackendKind> ParseBackend(std::string_view name);

// Explicit sets go to the requested backend; rectangle sets are always
// lattice rectangles. kRect with an explicit set, or rectangles of mixed
// dimension, throw kTypeMismatch.
CoverageInstance BuildInstance(const InstanceFile& file, BackendKind backend,
                               Rng& rng);

// ---------------------------------------------------------------------------
// Generators

enum class GeneratorKind { kRandom, kDisjoint, kOverlapChain, kTwin, kRectangles };
std::string_view GeneratorName(GeneratorKind kind);
std::optional<GeneratorKind> ParseGenerator(std::string_view name);

struct GeneratorParams {
  std::size_t n = 10;
  std::size_t m = 20;       // set size (random: maximum set size)
  std::size_t k = 3;
  std::size_t d = 2;        // twin: number of disjoint blocks
  std::uint64_t universe = 0;  // random: elements drawn from [1, universe]; 0 = 2m
  std::size_t overlap = 0;  // overlap-chain: shared elements between neighbours
  std::size_t dim = 2;      // rectangles
  std::int64_t extent = 16; // rectangles: coordinates in [0, extent)
  BiasProfile bias;
  std::uint64_t seed = 1;
};

struct GeneratedInstances {
  InstanceFile primary;              // L for twin
  std::optional<InstanceFile> twin;  // L' for twin
  std::vector<std::size_t> block_indices;  // twin: indices carrying blocks
};

// Throws kInvalidArgument naming the violated constraint.
GeneratedInstances Generate(GeneratorKind kind, const GeneratorParams& params);

// ---------------------------------------------------------------------------
// Solve / exact

struct SolveOptions {
  double epsilon = 0.2;
  std::optional<double> xi;  // when set, used directly instead of deriving
  double gamma = 0.1;
  Strategy strategy = Strategy::kSingleRound;
  BackendKind backend = BackendKind::kSorted;
  std::optional<std::uint64_t> seed;  // default: the file's seed
  std::size_t trials = 1;
  std::size_t threads = 0;
  std::uint64_t brute_force_cap = kDefaultBruteForceCap;
  std::uint64_t materialize_cap = 10'000'000;
};

struct TrialReport {
  std::size_t trial = 0;
  CoverageResult result;
  std::optional<std::uint64_t> coverage;  // exact |union of H|
  std::optional<std::uint64_t> optimum;   // C*(L, k)
  std::optional<double> ratio;            // coverage / optimum
  double wall_ms = 0.0;
};

struct SolveReport {
  double xi = 0.0;
  double epsilon_prime = 0.0;
  double gamma = 0.0;
  std::string strategy;
  std::string backend;
  std::uint64_t seed = 0;
  std::vector<TrialReport> trials;

  std::string ToCsv() const;
};

// Trial t runs on Rng(seed).split(t); results do not depend on `threads`.
SolveReport Solve(const InstanceFile& file, const SolveOptions& options);

enum class ExactMethod { kGreedy, kBruteForce };
ExactSolution SolveExact(const InstanceFile& file, ExactMethod method,
                         std::uint64_t cap = kDefaultBruteForceCap);

// ---------------------------------------------------------------------------
// Verification suites and bench

struct CriterionResult {
  std::string id;
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CriterionResult> criteria;
  bool passed() const;
  std::string ToJson() const;
};

// Suites: ratio, sandwich, estimator, counters, formulas, uniformity,
// equivalence, reduction, twin, greedy-floor, all.
std::vector<std::string> SuiteNames();
// Throws kInvalidArgument for an unknown suite.
VerifyReport Verify(std::string_view suite, std::uint64_t seed);

struct BenchOptions {
  std::size_t n = 6;
  std::size_t k = 2;
  double xi = 0.5;
  double gamma = 0.2;
  std::vector<Strategy> strategies = {Strategy::kMultiRound, Strategy::kSingleRound};
  BackendKind backend = BackendKind::kSorted;
  std::vector<std::uint64_t> set_sizes = {1'000, 10'000, 100'000};
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::string strategy;
  std::uint64_t m = 0;
  CostCounters counters;
  double wall_ms = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  // R and Q identical across set sizes for every strategy.
  bool counters_independent_of_m = false;
  std::string ToCsv() const;
};

// Disjoint instances of n sets of size m for each m in set_sizes.
BenchReport Bench(const BenchOptions& options);

}  // namespace maxcover::harness

#endif  // MAXCOVER_HARNESS_HPP_
