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

#include "maxcover/btree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace maxcover {

CountedBTree::CountedBTree(std::size_t order)
    : order_(order), root_(std::make_unique<Node>()) {
  if (order_ < 3) {
    throw Error(ErrorCode::kInvalidArgument, "B-tree order must be >= 3");
  }
}

CountedBTree::CountedBTree(std::span<const Element> items, std::size_t order)
    : CountedBTree(order) {
  for (Element x : items) Insert(x);
}

CountedBTree::CountedBTree(const CountedBTree& other)
    : order_(other.order_), root_(CloneNode(*other.root_)) {}

CountedBTree& CountedBTree::operator=(const CountedBTree& other) {
  if (this != &other) {
    order_ = other.order_;
    root_ = CloneNode(*other.root_);
  }
  return *this;
}

std::unique_ptr<CountedBTree::Node> CountedBTree::CloneNode(const Node& node) {
  auto copy = std::make_unique<Node>();
  copy->bottom = node.bottom;
  copy->keys = node.keys;
  copy->child_max = node.child_max;
  copy->count = node.count;
  copy->children.reserve(node.children.size());
  for (const auto& c : node.children) copy->children.push_back(CloneNode(*c));
  return copy;
}

Element CountedBTree::at(std::uint64_t index) const {
  if (index >= size()) {
    throw Error(ErrorCode::kInvalidArgument, "B-tree rank out of range");
  }
  const Node* node = root_.get();
  while (!node->bottom) {
    std::size_t j = 0;
    while (index >= node->children[j]->count) {
      index -= node->children[j]->count;
      ++j;
    }
    node = node->children[j].get();
  }
  return node->keys[index];
}

Element CountedBTree::random_element(Rng& rng) const {
  if (size() == 0) throw Error(ErrorCode::kEmptySet, "random draw from empty B-tree");
  const Node* node = root_.get();
  while (!node->bottom) {
    // i in N[1, C(t_1)+...+C(t_c)]; intervals I_j = N[prefix_{j-1}+1, prefix_j].
    std::uint64_t i = rng.uniform(1, node->count);
    std::size_t j = 0;
    while (i > node->children[j]->count) {
      i -= node->children[j]->count;
      ++j;
    }
    node = node->children[j].get();
  }
  // Each key of a bottom node is a leaf with C = 1.
  return node->keys[rng.uniform(0, node->keys.size() - 1)];
}

bool CountedBTree::contains(Element x) const {
  std::uint64_t ignored = 0;
  return contains(x, ignored);
}

bool CountedBTree::contains(Element x, std::uint64_t& comparisons) const {
  const Node* node = root_.get();
  while (!node->bottom) {
    auto it = std::lower_bound(node->child_max.begin(), node->child_max.end(),
                               x, [&comparisons](Element a, Element b) {
                                 ++comparisons;
                                 return a < b;
                               });
    if (it == node->child_max.end()) return false;
    node = node->children[it - node->child_max.begin()].get();
  }
  auto it = std::lower_bound(node->keys.begin(), node->keys.end(), x,
                             [&comparisons](Element a, Element b) {
                               ++comparisons;
                               return a < b;
                             });
  ++comparisons;
  return it != node->keys.end() && *it == x;
}

std::vector<Element> CountedBTree::materialize() const {
  std::vector<Element> out;
  out.reserve(size());
  std::function<void(const Node&)> walk = [&](const Node& n) {
    if (n.bottom) {
      out.insert(out.end(), n.keys.begin(), n.keys.end());
      return;
    }
    for (const auto& c : n.children) walk(*c);
  };
  walk(*root_);
  return out;
}

bool CountedBTree::Insert(Element x) {
  if (!InsertInto(*root_, x)) return false;
  if (root_->fanout() > order_) {
    auto fresh = std::make_unique<Node>();
    fresh->bottom = false;
    fresh->count = root_->count;
    fresh->child_max.push_back(root_->max_key());
    fresh->children.push_back(std::move(root_));
    root_ = std::move(fresh);
    SplitChild(*root_, 0);
  }
  return true;
}

bool CountedBTree::InsertInto(Node& node, Element x) {
  if (node.bottom) {
    auto it = std::lower_bound(node.keys.begin(), node.keys.end(), x);
    if (it != node.keys.end() && *it == x) return false;
    node.keys.insert(it, x);
    ++node.count;
    return true;
  }
  auto it = std::lower_bound(node.child_max.begin(), node.child_max.end(), x);
  std::size_t idx = it - node.child_max.begin();
  if (idx == node.children.size()) --idx;
  Node& child = *node.children[idx];
  if (!InsertInto(child, x)) return false;
  ++node.count;
  node.child_max[idx] = child.max_key();
  if (child.fanout() > order_) SplitChild(node, idx);
  return true;
}

void CountedBTree::SplitChild(Node& parent, std::size_t idx) {
  Node& left = *parent.children[idx];
  auto right = std::make_unique<Node>();
  right->bottom = left.bottom;
  const std::size_t keep = left.fanout() / 2;
  if (left.bottom) {
    right->keys.assign(left.keys.begin() + keep, left.keys.end());
    left.keys.resize(keep);
    right->count = right->keys.size();
  } else {
    for (std::size_t j = keep; j < left.children.size(); ++j) {
      right->count += left.children[j]->count;
      right->children.push_back(std::move(left.children[j]));
    }
    right->child_max.assign(left.child_max.begin() + keep, left.child_max.end());
    left.children.resize(keep);
    left.child_max.resize(keep);
  }
  left.count -= right->count;
  parent.child_max[idx] = left.max_key();
  parent.child_max.insert(parent.child_max.begin() + idx + 1, right->max_key());
  parent.children.insert(parent.children.begin() + idx + 1, std::move(right));
}

bool CountedBTree::Erase(Element x) {
  if (!EraseFrom(*root_, x)) return false;
  if (!root_->bottom && root_->children.size() == 1) {
    root_ = std::move(root_->children.front());
  }
  return true;
}

bool CountedBTree::EraseFrom(Node& node, Element x) {
  if (node.bottom) {
    auto it = std::lower_bound(node.keys.begin(), node.keys.end(), x);
    if (it == node.keys.end() || *it != x) return false;
    node.keys.erase(it);
    --node.count;
    return true;
  }
  auto it = std::lower_bound(node.child_max.begin(), node.child_max.end(), x);
  if (it == node.child_max.end()) return false;
  const std::size_t idx = it - node.child_max.begin();
  Node& child = *node.children[idx];
  if (!EraseFrom(child, x)) return false;
  --node.count;
  if (child.fanout() > 0) node.child_max[idx] = child.max_key();
  if (child.fanout() < min_fanout()) Rebalance(node, idx);
  return true;
}

// Restores occupancy of parent.children[idx] by borrowing from a sibling
// with spare entries, else by merging with a sibling.
void CountedBTree::Rebalance(Node& parent, std::size_t idx) {
  auto move_entry = [](Node& from, bool from_back, Node& to, bool to_front) {
    if (from.bottom) {
      Element key = from_back ? from.keys.back() : from.keys.front();
      if (from_back) from.keys.pop_back(); else from.keys.erase(from.keys.begin());
      if (to_front) to.keys.insert(to.keys.begin(), key); else to.keys.push_back(key);
      --from.count;
      ++to.count;
      return;
    }
    auto child = std::move(from_back ? from.children.back() : from.children.front());
    Element mx = from_back ? from.child_max.back() : from.child_max.front();
    if (from_back) {
      from.children.pop_back();
      from.child_max.pop_back();
    } else {
      from.children.erase(from.children.begin());
      from.child_max.erase(from.child_max.begin());
    }
    from.count -= child->count;
    to.count += child->count;
    if (to_front) {
      to.children.insert(to.children.begin(), std::move(child));
      to.child_max.insert(to.child_max.begin(), mx);
    } else {
      to.children.push_back(std::move(child));
      to.child_max.push_back(mx);
    }
  };

  Node& child = *parent.children[idx];
  if (idx > 0 && parent.children[idx - 1]->fanout() > min_fanout()) {
    Node& left = *parent.children[idx - 1];
    move_entry(left, true, child, true);
    parent.child_max[idx - 1] = left.max_key();
    parent.child_max[idx] = child.max_key();
    return;
  }
  if (idx + 1 < parent.children.size() &&
      parent.children[idx + 1]->fanout() > min_fanout()) {
    Node& right = *parent.children[idx + 1];
    move_entry(right, false, child, false);
    parent.child_max[idx] = child.max_key();
    return;
  }
  // Merge the pair (idx-1, idx) or (idx, idx+1) into its left member.
  const std::size_t left_idx = idx > 0 ? idx - 1 : idx;
  if (left_idx + 1 >= parent.children.size()) return;  // only child: root case
  Node& left = *parent.children[left_idx];
  Node& right = *parent.children[left_idx + 1];
  if (left.bottom) {
    left.keys.insert(left.keys.end(), right.keys.begin(), right.keys.end());
  } else {
    for (auto& c : right.children) left.children.push_back(std::move(c));
    left.child_max.insert(left.child_max.end(), right.child_max.begin(),
                          right.child_max.end());
  }
  left.count += right.count;
  parent.children.erase(parent.children.begin() + left_idx + 1);
  parent.child_max.erase(parent.child_max.begin() + left_idx + 1);
  if (left.fanout() > 0) parent.child_max[left_idx] = left.max_key();
}

std::size_t CountedBTree::height() const {
  std::size_t h = 1;
  for (const Node* n = root_.get(); !n->bottom; n = n->children.front().get()) ++h;
  return h;
}

std::vector<std::size_t> CountedBTree::LeafDepths() const {
  std::vector<std::size_t> depths;
  std::function<void(const Node&, std::size_t)> walk = [&](const Node& n,
                                                           std::size_t d) {
    if (n.bottom) {
      depths.insert(depths.end(), n.keys.size(), d);
      return;
    }
    for (const auto& c : n.children) walk(*c, d + 1);
  };
  walk(*root_, 1);
  return depths;
}

std::vector<std::pair<Element, std::pair<std::uint64_t, std::uint64_t>>>
CountedBTree::ExactDrawDistribution() const {
  using Fraction = std::pair<std::uint64_t, std::uint64_t>;
  std::vector<std::pair<Element, Fraction>> out;
  auto times = [](Fraction f, std::uint64_t num, std::uint64_t den) {
    const std::uint64_t g1 = std::gcd(num, f.second);
    const std::uint64_t g2 = std::gcd(den, f.first);
    return Fraction{(f.first / g2) * (num / g1), (f.second / g1) * (den / g2)};
  };
  std::function<void(const Node&, Fraction)> walk = [&](const Node& n,
                                                        Fraction p) {
    if (n.bottom) {
      for (Element key : n.keys) out.emplace_back(key, times(p, 1, n.keys.size()));
      return;
    }
    for (const auto& c : n.children) walk(*c, times(p, c->count, n.count));
  };
  if (size() > 0) walk(*root_, Fraction{1, 1});
  return out;
}

std::string CountedBTree::CheckInvariants() const {
  std::string problem;
  std::size_t bottom_depth = 0;
  // Returns the recomputed leaf count of the subtree.
  std::function<std::uint64_t(const Node&, std::size_t, bool)> check =
      [&](const Node& n, std::size_t depth, bool is_root) -> std::uint64_t {
    if (!problem.empty()) return 0;
    if (n.fanout() > order_) problem = "node over capacity";
    if (!is_root && n.fanout() < min_fanout()) problem = "node under minimum fill";
    if (n.bottom) {
      if (bottom_depth == 0) bottom_depth = depth;
      if (depth != bottom_depth) problem = "unbalanced: bottom nodes at different depths";
      if (!std::is_sorted(n.keys.begin(), n.keys.end()) ||
          std::adjacent_find(n.keys.begin(), n.keys.end()) != n.keys.end()) {
        problem = "bottom keys not strictly increasing";
      }
      if (n.count != n.keys.size()) problem = "bottom count mismatch";
      return n.keys.size();
    }
    if (is_root && n.children.size() < 2) problem = "internal root with < 2 children";
    if (n.children.size() != n.child_max.size()) problem = "child_max arity mismatch";
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < n.children.size() && problem.empty(); ++j) {
      total += check(*n.children[j], depth + 1, false);
      if (n.children[j]->fanout() == 0 || n.children[j]->max_key() != n.child_max[j]) {
        problem = "stale child max key";
      }
      if (j > 0 && n.child_max[j - 1] >= n.children[j]->min_key()) {
        problem = "children out of key order";
      }
    }
    if (problem.empty() && total != n.count) problem = "C(t) differs from recomputed count";
    return total;
  };
  check(*root_, 1, true);
  return problem;
}

}  // namespace maxcover
