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

#include "maxcover/baselines.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace maxcover {

namespace {

// Sets re-encoded as bitsets over the dense universe of all their elements.
class BitsetFamily {
 public:
  explicit BitsetFamily(std::span<const ElementList> sets) {
    std::unordered_map<Element, std::size_t> ids;
    for (const auto& s : sets) {
      for (Element x : s) ids.emplace(x, ids.size());
    }
    universe_ = ids.size();
    words_ = (universe_ + 63) / 64;
    bits_.assign(sets.size() * words_, 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (Element x : sets[i]) {
        const std::size_t id = ids[x];
        bits_[i * words_ + id / 64] |= 1ULL << (id % 64);
      }
    }
  }

  std::size_t universe() const { return universe_; }

  std::uint64_t UnionSize(std::span<const std::size_t> indices,
                          std::vector<std::uint64_t>& scratch) const {
    scratch.assign(words_, 0);
    for (std::size_t i : indices) {
      const std::uint64_t* row = &bits_[i * words_];
      for (std::size_t w = 0; w < words_; ++w) scratch[w] |= row[w];
    }
    std::uint64_t total = 0;
    for (std::uint64_t w : scratch) total += std::popcount(w);
    return total;
  }

 private:
  std::size_t universe_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Advances `idx` to the next k-combination of {0..n-1} in lexicographic
// order; false when exhausted.
bool NextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void RequireBudget(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must satisfy 1 <= k <= n (k=" + std::to_string(k) +
                    ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t UnionSize(std::span<const ElementList> sets,
                        std::span<const std::size_t> indices) {
  std::unordered_set<Element> seen;
  for (std::size_t i : indices) seen.insert(sets[i].begin(), sets[i].end());
  return seen.size();
}

ExactSolution ExactGreedy(std::span<const ElementList> sets, std::size_t k) {
  RequireBudget(sets.size(), k);
  ExactSolution out;
  std::unordered_set<Element> covered;
  std::vector<bool> used(sets.size(), false);
  for (std::size_t round = 0; round < k; ++round) {
    std::size_t best = sets.size();
    std::int64_t best_gain = -1;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (used[i]) continue;
      std::int64_t gain = 0;
      for (Element x : sets[i]) gain += covered.count(x) == 0 ? 1 : 0;
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    used[best] = true;
    out.indices.push_back(best);
    covered.insert(sets[best].begin(), sets[best].end());
  }
  out.coverage = covered.size();
  return out;
}

ExactSolution BruteForceOptimum(std::span<const ElementList> sets, std::size_t k,
                                std::uint64_t cap) {
  RequireBudget(sets.size(), k);
  const std::uint64_t subsets = Binomial(sets.size(), k);
  if (subsets > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "brute force needs C(" + std::to_string(sets.size()) + "," +
                    std::to_string(k) + ") = " + std::to_string(subsets) +
                    " subsets, cap is " + std::to_string(cap));
  }
  const BitsetFamily family(sets);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::uint64_t> scratch;
  ExactSolution best;
  bool first = true;
  do {
    const std::uint64_t c = family.UnionSize(idx, scratch);
    if (first || c > best.coverage) {
      best.coverage = c;
      best.indices = idx;
      first = false;
    }
  } while (NextCombination(idx, sets.size()));
  return best;
}

std::size_t BruteForceMinCover(std::span<const ElementList> sets,
                               std::uint64_t cap) {
  const std::size_t n = sets.size();
  if (n == 0) return 0;
  if (n >= 63 || (1ULL << n) > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "minimum cover search over 2^" + std::to_string(n) +
                    " subsets exceeds cap");
  }
  const BitsetFamily family(sets);
  std::vector<std::uint64_t> scratch;
  for (std::size_t size = 1; size <= n; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      if (family.UnionSize(idx, scratch) == family.universe()) return size;
    } while (NextCombination(idx, n));
  }
  return n;
}

std::vector<ElementList> EqualSizePad(std::span<const ElementList> sets,
                                      PadMode mode) {
  if (sets.empty()) throw Error(ErrorCode::kInvalidArgument, "no sets to pad");
  std::size_t t = 0;
  Element top = 0;
  for (const auto& s : sets) {
    if (s.empty()) throw Error(ErrorCode::kInvalidArgument, "cannot pad an empty set");
    t = std::max(t, s.size());
    top = std::max(top, *std::max_element(s.begin(), s.end()));
  }

  std::vector<ElementList> out;
  if (mode == PadMode::kSetCover) {
    if (top > std::numeric_limits<Element>::max() - t) {
      throw Error(ErrorCode::kOverflow, "no room for fresh padding elements");
    }
    ElementList fresh(t);
    for (std::size_t j = 0; j < t; ++j) fresh[j] = top + 1 + j;
    out.push_back(fresh);
    for (const auto& s : sets) {
      ElementList padded = s;
      padded.insert(padded.end(), fresh.begin(),
                    fresh.begin() + static_cast<std::ptrdiff_t>(t - s.size()));
      out.push_back(std::move(padded));
    }
    return out;
  }

  const ElementList& first = sets.front();
  if (first.size() != t) {
    throw Error(ErrorCode::kInvalidArgument,
                "max-cover padding needs the first set to be a largest set");
  }
  ElementList first_sorted = first;
  std::sort(first_sorted.begin(), first_sorted.end());
  out.push_back(first);
  for (std::size_t j = 1; j < sets.size(); ++j) {
    const auto& s = sets[j];
    const std::unordered_set<Element> own(s.begin(), s.end());
    ElementList padded = s;
    std::size_t need = t - s.size();
    for (Element x : first_sorted) {
      if (need == 0) break;
      if (own.count(x) == 0) {
        padded.push_back(x);
        --need;
      }
    }
    out.push_back(std::move(padded));
  }
  return out;
}

}  // namespace maxcover
