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

// Array, hash-table and lattice-rectangle set backends. The counted B-tree
// lives in btree.hpp.

#ifndef MAXCOVER_BACKENDS_HPP_
#define MAXCOVER_BACKENDS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "maxcover/core.hpp"

namespace maxcover {

// Binary search over a strictly increasing span, counting probes.
bool CountedBinarySearch(std::span<const Element> sorted, Element x,
                         std::uint64_t& comparisons);

// Strictly increasing array; membership by binary search.
class SortedArraySet final : public SetBackend {
 public:
  SortedArraySet() = default;
  // Sorts and deduplicates `items`.
  explicit SortedArraySet(std::vector<Element> items);

  std::string_view kind() const override { return "sorted"; }
  std::uint64_t size() const override { return items_.size(); }
  Element at(std::uint64_t index) const override { return items_[index]; }
  Element random_element(Rng& rng) const override {
    return items_[rng.uniform(0, items_.size() - 1)];
  }
  bool contains(Element x) const override;
  bool contains(Element x, std::uint64_t& comparisons) const override;
  std::vector<Element> materialize() const override { return items_; }
  std::unique_ptr<SetBackend> clone() const override {
    return std::make_unique<SortedArraySet>(*this);
  }

  std::span<const Element> items() const { return items_; }

 private:
  std::vector<Element> items_;
};

// Array kept in input order until SortInPlace() is called. Membership is a
// linear scan while unsorted, a binary search afterwards.
class UnsortedArraySet final : public SetBackend {
 public:
  UnsortedArraySet() = default;
  // Throws kInvalidArgument on duplicate elements.
  explicit UnsortedArraySet(std::vector<Element> items);

  std::string_view kind() const override { return "unsorted"; }
  std::uint64_t size() const override { return items_.size(); }
  Element at(std::uint64_t index) const override { return items_[index]; }
  Element random_element(Rng& rng) const override {
    return items_[rng.uniform(0, items_.size() - 1)];
  }
  bool contains(Element x) const override;
  bool contains(Element x, std::uint64_t& comparisons) const override;
  std::vector<Element> materialize() const override { return items_; }
  std::unique_ptr<SetBackend> clone() const override {
    return std::make_unique<UnsortedArraySet>(*this);
  }

  void SortInPlace();
  bool sorted() const { return sorted_; }
  std::span<const Element> items() const { return items_; }

 private:
  std::vector<Element> items_;
  bool sorted_ = false;
};

// Unsorted backing array for O(1) draws plus a chained hash table for
// membership. The table doubles when full and halves when less than half
// used.
class BucketHashSet final : public SetBackend {
 public:
  static constexpr std::size_t kMinBuckets = 8;

  explicit BucketHashSet(std::uint64_t seed = 0x5eedULL);
  BucketHashSet(std::span<const Element> items, std::uint64_t seed);

  std::string_view kind() const override { return "hash"; }
  std::uint64_t size() const override { return items_.size(); }
  Element at(std::uint64_t index) const override { return items_[index]; }
  Element random_element(Rng& rng) const override {
    return items_[rng.uniform(0, items_.size() - 1)];
  }
  bool contains(Element x) const override;
  bool contains(Element x, std::uint64_t& comparisons) const override;
  std::vector<Element> materialize() const override { return items_; }
  std::unique_ptr<SetBackend> clone() const override {
    return std::make_unique<BucketHashSet>(*this);
  }

  // Returns false if x was already present.
  bool Insert(Element x);
  // Returns false if x was absent. Swaps the last backing entry into the
  // vacated slot.
  bool Erase(Element x);

  std::size_t bucket_count() const { return buckets_.size(); }
  std::size_t max_chain_length() const;
  // Recomputes every structural invariant; returns an empty string when all
  // hold, else a description of the first violation.
  std::string CheckInvariants() const;

 private:
  struct Slot {
    Element value;
    std::size_t position;  // index into items_
  };

  std::size_t BucketOf(Element x) const;
  void Rehash(std::size_t bucket_count);

  std::uint64_t seed_;
  std::vector<Element> items_;
  std::vector<std::vector<Slot>> buckets_;
};

// Axis-aligned integer rectangle prod_j [lo_j, hi_j] in Z^d. Each coordinate
// occupies floor(64/d) bits of the packed Element, biased by 2^(bits-1) so
// the packing is the same for every rectangle of a given dimension.
class LatticeRectangle final : public SetBackend {
 public:
  // Throws kInvalidArgument on shape errors, kOverflow when a coordinate
  // does not fit its packing field or the point count overflows 64 bits.
  LatticeRectangle(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi);

  std::string_view kind() const override { return "rect"; }
  std::uint64_t size() const override { return cardinality_; }
  Element at(std::uint64_t index) const override;
  // d independent uniform coordinate draws.
  Element random_element(Rng& rng) const override;
  bool contains(Element x) const override;
  std::unique_ptr<SetBackend> clone() const override {
    return std::make_unique<LatticeRectangle>(*this);
  }

  std::size_t dim() const { return lo_.size(); }
  const std::vector<std::int64_t>& lo() const { return lo_; }
  const std::vector<std::int64_t>& hi() const { return hi_; }

  // Number of lattice points, with checked arithmetic.
  static std::uint64_t Cardinality(std::span<const std::int64_t> lo,
                                   std::span<const std::int64_t> hi);
  static unsigned BitsPerCoordinate(std::size_t dim) {
    return static_cast<unsigned>(64 / dim);
  }
  static Element Pack(std::span<const std::int64_t> point);
  static std::vector<std::int64_t> Unpack(Element x, std::size_t dim);

 private:
  std::vector<std::int64_t> lo_;
  std::vector<std::int64_t> hi_;
  std::uint64_t cardinality_;
};

}  // namespace maxcover

#endif  // MAXCOVER_BACKENDS_HPP_
