// Copyright 2026 The assocnf Authors
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

#ifndef ASSOCNF_TERM_HPP_
#define ASSOCNF_TERM_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace assocnf {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

// A binary term over the single connective `*`. Leaves may carry a label
// made of [a-z0-9_]; an unlabeled leaf prints as ".".
//
// Nodes live in a flat arena addressed by NodeId, so every walk over a Term
// is an explicit loop and deep terms (10^6 levels) never touch the call
// stack. A Term is an immutable value: all mutation goes through
// TermBuilder.
class Term {
 public:
  struct Node {
    NodeId left = kNoNode;
    NodeId right = kNoNode;
    // Index into the label table plus one; zero means unlabeled.
    std::uint32_t label = 0;
  };

  // The unlabeled single leaf.
  Term();

  static Term Leaf(std::string_view label = {});
  // Builds left * right. Copies both arenas, so this is O(size).
  static Term Join(const Term& left, const Term& right);

  NodeId root() const { return root_; }
  bool is_leaf(NodeId id) const { return nodes_[id].left == kNoNode; }
  bool is_leaf() const { return is_leaf(root_); }
  NodeId left(NodeId id) const { return nodes_[id].left; }
  NodeId right(NodeId id) const { return nodes_[id].right; }
  // Empty for unlabeled leaves and for internal nodes.
  std::string_view label(NodeId id) const;
  bool has_labels() const { return !labels_.empty(); }

  // Number of arena slots. Every construction path in this library keeps
  // the arena free of unreachable slots, so this is the tree's node count.
  std::size_t node_count() const { return nodes_.size(); }

  // Leaf labels from left to right; unlabeled leaves contribute "".
  std::vector<std::string> leaf_labels() const;

  // Same tree with every label dropped.
  Term shape() const;
  bool same_shape(const Term& other) const;

  // Structural equality, labels included.
  friend bool operator==(const Term& a, const Term& b);

 private:
  friend class TermBuilder;

  std::vector<Node> nodes_;
  std::vector<std::string> labels_;
  NodeId root_ = 0;
};

// Mutable arena used to construct terms and to rewrite them in place.
class TermBuilder {
 public:
  TermBuilder() = default;
  // Takes over the arena of an existing term; the root is preserved.
  explicit TermBuilder(Term term);

  NodeId add_leaf(std::string_view label = {});
  NodeId add_node(NodeId left, NodeId right);

  NodeId root() const { return root_; }
  void set_root(NodeId id) { root_ = id; }
  bool is_leaf(NodeId id) const { return nodes_[id].left == kNoNode; }
  NodeId left(NodeId id) const { return nodes_[id].left; }
  NodeId right(NodeId id) const { return nodes_[id].right; }
  std::size_t node_count() const { return nodes_.size(); }
  void reserve(std::size_t nodes) { nodes_.reserve(nodes); }

  // Rewrites (a*b)*c at `id` into a*(b*c). The node `id` keeps its slot and
  // the old left child is reused as the new (b*c), so no allocation happens
  // and ancestors need no update. Requires the left child of `id` to be
  // internal.
  void rotate(NodeId id);

  // Copy of the current state as an immutable term.
  Term snapshot() const;
  Term build() &&;

 private:
  std::vector<Term::Node> nodes_;
  std::vector<std::string> labels_;
  NodeId root_ = 0;
};

// n-left-chain: a leaf for n = 0, otherwise left_chain(n-1) * leaf.
Term left_chain(std::size_t n);
// Mirror image of left_chain; these are exactly the normal forms.
Term right_chain(std::size_t n);
// Right chain whose leaves carry `labels` in order. Needs at least one label.
Term right_chain_over(std::span<const std::string> labels);

}  // namespace assocnf

#endif  // ASSOCNF_TERM_HPP_
