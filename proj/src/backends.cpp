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

#include "maxcover/backends.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

namespace maxcover {

bool CountedBinarySearch(std::span<const Element> sorted, Element x,
                         std::uint64_t& comparisons) {
  std::size_t lo = 0;
  std::size_t hi = sorted.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    ++comparisons;
    const Element v = sorted[mid];
    if (v == x) return true;
    if (v < x) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// SortedArraySet

SortedArraySet::SortedArraySet(std::vector<Element> items)
    : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool SortedArraySet::contains(Element x) const {
  return std::binary_search(items_.begin(), items_.end(), x);
}

bool SortedArraySet::contains(Element x, std::uint64_t& comparisons) const {
  return CountedBinarySearch(items_, x, comparisons);
}

// ---------------------------------------------------------------------------
// UnsortedArraySet

UnsortedArraySet::UnsortedArraySet(std::vector<Element> items)
    : items_(std::move(items)) {
  std::unordered_set<Element> seen;
  seen.reserve(items_.size());
  for (Element x : items_) {
    if (!seen.insert(x).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate element " + std::to_string(x));
    }
  }
  sorted_ = std::is_sorted(items_.begin(), items_.end());
}

bool UnsortedArraySet::contains(Element x) const {
  if (sorted_) return std::binary_search(items_.begin(), items_.end(), x);
  return std::find(items_.begin(), items_.end(), x) != items_.end();
}

bool UnsortedArraySet::contains(Element x, std::uint64_t& comparisons) const {
  if (sorted_) return CountedBinarySearch(items_, x, comparisons);
  for (Element v : items_) {
    ++comparisons;
    if (v == x) return true;
  }
  return false;
}

void UnsortedArraySet::SortInPlace() {
  if (sorted_) return;
  std::sort(items_.begin(), items_.end());
  sorted_ = true;
}

// ---------------------------------------------------------------------------
// BucketHashSet

BucketHashSet::BucketHashSet(std::uint64_t seed)
    : seed_(seed), buckets_(kMinBuckets) {}

BucketHashSet::BucketHashSet(std::span<const Element> items,
                             std::uint64_t seed)
    : BucketHashSet(seed) {
  std::size_t want = kMinBuckets;
  while (want < items.size()) want *= 2;
  Rehash(want);
  for (Element x : items) Insert(x);
}

std::size_t BucketHashSet::BucketOf(Element x) const {
  return static_cast<std::size_t>(Mix64(x ^ seed_)) & (buckets_.size() - 1);
}

void BucketHashSet::Rehash(std::size_t bucket_count) {
  std::vector<std::vector<Slot>> fresh(bucket_count);
  buckets_.swap(fresh);
  for (std::size_t pos = 0; pos < items_.size(); ++pos) {
    buckets_[BucketOf(items_[pos])].push_back({items_[pos], pos});
  }
}

bool BucketHashSet::contains(Element x) const {
  for (const Slot& s : buckets_[BucketOf(x)]) {
    if (s.value == x) return true;
  }
  return false;
}

bool BucketHashSet::contains(Element x, std::uint64_t& comparisons) const {
  const auto& chain = buckets_[BucketOf(x)];
  if (chain.empty()) ++comparisons;
  for (const Slot& s : chain) {
    ++comparisons;
    if (s.value == x) return true;
  }
  return false;
}

bool BucketHashSet::Insert(Element x) {
  if (contains(x)) return false;
  if (items_.size() == buckets_.size()) Rehash(buckets_.size() * 2);
  buckets_[BucketOf(x)].push_back({x, items_.size()});
  items_.push_back(x);
  return true;
}

bool BucketHashSet::Erase(Element x) {
  auto& chain = buckets_[BucketOf(x)];
  auto it = std::find_if(chain.begin(), chain.end(),
                         [x](const Slot& s) { return s.value == x; });
  if (it == chain.end()) return false;
  const std::size_t pos = it->position;
  chain.erase(it);
  const std::size_t last = items_.size() - 1;
  if (pos != last) {
    const Element moved = items_[last];
    items_[pos] = moved;
    for (Slot& s : buckets_[BucketOf(moved)]) {
      if (s.value == moved) {
        s.position = pos;
        break;
      }
    }
  }
  items_.pop_back();
  if (buckets_.size() > kMinBuckets && items_.size() < buckets_.size() / 2) {
    Rehash(buckets_.size() / 2);
  }
  return true;
}

std::size_t BucketHashSet::max_chain_length() const {
  std::size_t longest = 0;
  for (const auto& chain : buckets_) longest = std::max(longest, chain.size());
  return longest;
}

std::string BucketHashSet::CheckInvariants() const {
  if (items_.size() > buckets_.size()) return "table over capacity";
  if (buckets_.size() > kMinBuckets && items_.size() < buckets_.size() / 2) {
    return "table under half use";
  }
  std::size_t chained = 0;
  for (std::size_t b = 0; b < buckets_.size(); ++b) {
    for (const Slot& s : buckets_[b]) {
      ++chained;
      if (BucketOf(s.value) != b) return "element in wrong bucket";
      if (s.position >= items_.size() || items_[s.position] != s.value) {
        return "stale backing position";
      }
    }
  }
  if (chained != items_.size()) return "chain/backing count mismatch";
  std::unordered_set<Element> seen(items_.begin(), items_.end());
  if (seen.size() != items_.size()) return "duplicate in backing array";
  return {};
}

// ---------------------------------------------------------------------------
// LatticeRectangle

namespace {

// Returns the biased field value of coordinate c, or false if it does not
// fit in `bits` bits.
bool BiasCoordinate(std::int64_t c, unsigned bits, std::uint64_t& out) {
  if (bits >= 64) {
    out = static_cast<std::uint64_t>(c) ^ (1ULL << 63);
    return true;
  }
  const std::int64_t half = std::int64_t{1} << (bits - 1);
  if (c < -half || c >= half) return false;
  out = static_cast<std::uint64_t>(c + half);
  return true;
}

std::int64_t UnbiasField(std::uint64_t field, unsigned bits) {
  if (bits >= 64) return static_cast<std::int64_t>(field ^ (1ULL << 63));
  const std::int64_t half = std::int64_t{1} << (bits - 1);
  return static_cast<std::int64_t>(field) - half;
}

std::uint64_t FieldMask(unsigned bits) {
  return bits >= 64 ? ~0ULL : (1ULL << bits) - 1;
}

}  // namespace

std::uint64_t LatticeRectangle::Cardinality(std::span<const std::int64_t> lo,
                                            std::span<const std::int64_t> hi) {
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < lo.size(); ++j) {
    const std::uint64_t diff =
        static_cast<std::uint64_t>(hi[j]) - static_cast<std::uint64_t>(lo[j]);
    std::uint64_t width = 0;
    if (__builtin_add_overflow(diff, std::uint64_t{1}, &width) ||
        __builtin_mul_overflow(total, width, &total)) {
      throw Error(ErrorCode::kOverflow, "rectangle point count overflows");
    }
  }
  return total;
}

LatticeRectangle::LatticeRectangle(std::vector<std::int64_t> lo,
                                   std::vector<std::int64_t> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.empty() || lo_.size() != hi_.size() || lo_.size() > 64) {
    throw Error(ErrorCode::kInvalidArgument,
                "rectangle needs 1 <= d <= 64 and |lo| = |hi|");
  }
  const unsigned bits = BitsPerCoordinate(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (lo_[j] > hi_[j]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rectangle needs lo <= hi in every coordinate");
    }
    std::uint64_t ignored = 0;
    if (!BiasCoordinate(lo_[j], bits, ignored) ||
        !BiasCoordinate(hi_[j], bits, ignored)) {
      throw Error(ErrorCode::kOverflow,
                  "coordinate range exceeds the " + std::to_string(bits) +
                      "-bit packing field");
    }
  }
  cardinality_ = Cardinality(lo_, hi_);
}

Element LatticeRectangle::Pack(std::span<const std::int64_t> point) {
  const unsigned bits = BitsPerCoordinate(point.size());
  Element x = 0;
  for (std::size_t j = 0; j < point.size(); ++j) {
    std::uint64_t field = 0;
    if (!BiasCoordinate(point[j], bits, field)) {
      throw Error(ErrorCode::kOverflow, "point does not fit packing field");
    }
    x |= bits >= 64 ? field : field << (j * bits);
  }
  return x;
}

std::vector<std::int64_t> LatticeRectangle::Unpack(Element x,
                                                   std::size_t dim) {
  const unsigned bits = BitsPerCoordinate(dim);
  const std::uint64_t mask = FieldMask(bits);
  std::vector<std::int64_t> point(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const std::uint64_t field = bits >= 64 ? x : (x >> (j * bits)) & mask;
    point[j] = UnbiasField(field, bits);
  }
  return point;
}

Element LatticeRectangle::at(std::uint64_t index) const {
  std::vector<std::int64_t> point(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    const std::uint64_t width =
        static_cast<std::uint64_t>(hi_[j]) - static_cast<std::uint64_t>(lo_[j]) + 1;
    point[j] = static_cast<std::int64_t>(static_cast<std::uint64_t>(lo_[j]) +
                                         index % width);
    index /= width;
  }
  return Pack(point);
}

Element LatticeRectangle::random_element(Rng& rng) const {
  std::vector<std::int64_t> point(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    point[j] = rng.uniform_signed(lo_[j], hi_[j]);
  }
  return Pack(point);
}

bool LatticeRectangle::contains(Element x) const {
  const unsigned bits = BitsPerCoordinate(dim());
  if (bits * dim() < 64 && (x >> (bits * dim())) != 0) return false;
  const auto point = Unpack(x, dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    if (point[j] < lo_[j] || point[j] > hi_[j]) return false;
  }
  return true;
}

}  // namespace maxcover
