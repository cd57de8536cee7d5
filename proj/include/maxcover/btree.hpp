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

// B-tree with all data in the leaves where every internal node t stores
// C(t), the number of leaves below it, together with the largest key of each
// child subtree. The counts give uniform random leaf selection and rank
// lookup in O(log m) node visits.
//
// Elements are the leaves. The lowest internal level ("bottom nodes") holds
// them directly as a sorted key array, so C(bottom) is its key count.

#ifndef MAXCOVER_BTREE_HPP_
#define MAXCOVER_BTREE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxcover/core.hpp"

namespace maxcover {

class CountedBTree final : public SetBackend {
 public:
  static constexpr std::size_t kDefaultOrder = 16;

  // `order` is the maximum fan-out of a node; must be >= 3.
  explicit CountedBTree(std::size_t order = kDefaultOrder);
  CountedBTree(std::span<const Element> items,
               std::size_t order = kDefaultOrder);
  CountedBTree(const CountedBTree& other);
  CountedBTree& operator=(const CountedBTree& other);
  CountedBTree(CountedBTree&&) noexcept = default;
  CountedBTree& operator=(CountedBTree&&) noexcept = default;
  ~CountedBTree() override = default;

  std::string_view kind() const override { return "btree"; }
  std::uint64_t size() const override { return root_->count; }
  // Rank lookup: the index-th smallest element.
  Element at(std::uint64_t index) const override;
  // Rand(T, root): at each internal node draw i in [1, C(t)] and descend
  // into the child whose count interval contains i.
  Element random_element(Rng& rng) const override;
  bool contains(Element x) const override;
  bool contains(Element x, std::uint64_t& comparisons) const override;
  std::vector<Element> materialize() const override;
  std::unique_ptr<SetBackend> clone() const override {
    return std::make_unique<CountedBTree>(*this);
  }

  // Inserting an existing element is a no-op returning false.
  bool Insert(Element x);
  // Returns false if x was absent.
  bool Erase(Element x);

  std::size_t order() const { return order_; }
  // Number of node levels on every root-to-bottom path.
  std::size_t height() const;
  // Depth (in node levels) at which each element sits, in key order.
  std::vector<std::size_t> LeafDepths() const;

  // Exact probability that random_element() returns each element, as a
  // reduced fraction (numerator, denominator) obtained by multiplying the
  // interval fractions C(child)/C(node) along the descent path.
  std::vector<std::pair<Element, std::pair<std::uint64_t, std::uint64_t>>>
  ExactDrawDistribution() const;

  // Recomputes counts bottom-up and checks ordering, child maxima,
  // occupancy and balance. Empty string when everything holds.
  std::string CheckInvariants() const;

 private:
  struct Node {
    bool bottom = true;
    std::vector<Element> keys;                   // bottom nodes only
    std::vector<std::unique_ptr<Node>> children; // internal nodes only
    std::vector<Element> child_max;              // internal nodes only
    std::uint64_t count = 0;                     // C(t)

    std::size_t fanout() const { return bottom ? keys.size() : children.size(); }
    Element max_key() const { return bottom ? keys.back() : child_max.back(); }
    Element min_key() const {
      return bottom ? keys.front() : children.front()->min_key();
    }
  };

  static std::unique_ptr<Node> CloneNode(const Node& node);
  bool InsertInto(Node& node, Element x);
  bool EraseFrom(Node& node, Element x);
  void SplitChild(Node& parent, std::size_t idx);
  void Rebalance(Node& parent, std::size_t idx);
  std::size_t min_fanout() const { return (order_ + 1) / 2; }

  std::size_t order_;
  std::unique_ptr<Node> root_;
};

}  // namespace maxcover

#endif  // MAXCOVER_BTREE_HPP_
