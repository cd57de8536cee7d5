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

// Exact references over materialized sets: classical greedy, exhaustive
// optimum, minimum set cover, and the equal-size padding transform.

#ifndef MAXCOVER_BASELINES_HPP_
#define MAXCOVER_BASELINES_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "maxcover/core.hpp"

namespace maxcover {

using ElementList = std::vector<Element>;

struct ExactSolution {
  std::vector<std::size_t> indices;  // ascending for brute force, pick order for greedy
  std::uint64_t coverage = 0;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = 1'000'000;

// |union of sets[i] for i in indices|
std::uint64_t UnionSize(std::span<const ElementList> sets,
                        std::span<const std::size_t> indices);

// C(n, k), saturating at UINT64_MAX.
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

// Picks, k times, the set with the most uncovered elements (earliest index
// on ties).
ExactSolution ExactGreedy(std::span<const ElementList> sets, std::size_t k);

// Maximum coverage over all k-subsets; ties go to the lexicographically
// smallest index set. Throws kCapExceeded when C(n, k) > cap.
ExactSolution BruteForceOptimum(std::span<const ElementList> sets, std::size_t k,
                                std::uint64_t cap = kDefaultBruteForceCap);

// Smallest number of sets whose union equals the union of all sets.
// Throws kCapExceeded when 2^n > cap.
std::size_t BruteForceMinCover(std::span<const ElementList> sets,
                               std::uint64_t cap = kDefaultBruteForceCap);

enum class PadMode { kSetCover, kMaxCover };

// Equal-size padding.
//  kSetCover: returns [A_0, A_1', ..., A_n'] where A_0 holds t = max |A_i|
//    fresh elements above every input value and A_i' = A_i plus the first
//    t - |A_i| elements of A_0.
//  kMaxCover: A_1* = A_1, A_j* = A_j plus the first |A_1| - |A_j| elements
//    (ascending) of A_1 - A_j. Requires |A_1| to be the maximum size.
// Throws kInvalidArgument on empty inputs or, in kMaxCover, when A_1 is not
// a largest set.
std::vector<ElementList> EqualSizePad(std::span<const ElementList> sets,
                                      PadMode mode);

}  // namespace maxcover

#endif  // MAXCOVER_BASELINES_HPP_
