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

#include "assocnf/term.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace assocnf {

Term::Term() : nodes_(1) {}

Term Term::Leaf(std::string_view label) {
  TermBuilder builder;
  builder.set_root(builder.add_leaf(label));
  return std::move(builder).build();
}

Term Term::Join(const Term& left, const Term& right) {
  Term out;
  out.nodes_.clear();
  out.nodes_.reserve(left.nodes_.size() + right.nodes_.size() + 1);
  out.labels_.reserve(left.labels_.size() + right.labels_.size());

  auto append = [&out](const Term& part) {
    const auto node_offset = static_cast<NodeId>(out.nodes_.size());
    const auto label_offset = static_cast<std::uint32_t>(out.labels_.size());
    for (Node node : part.nodes_) {
      if (node.left != kNoNode) {
        node.left += node_offset;
        node.right += node_offset;
      }
      if (node.label != 0) node.label += label_offset;
      out.nodes_.push_back(node);
    }
    out.labels_.insert(out.labels_.end(), part.labels_.begin(),
                       part.labels_.end());
    return part.root_ + node_offset;
  };

  const NodeId l = append(left);
  const NodeId r = append(right);
  out.root_ = static_cast<NodeId>(out.nodes_.size());
  out.nodes_.push_back(Node{l, r, 0});
  return out;
}

std::string_view Term::label(NodeId id) const {
  const std::uint32_t index = nodes_[id].label;
  if (index == 0) return {};
  return labels_[index - 1];
}

std::vector<std::string> Term::leaf_labels() const {
  std::vector<std::string> out;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (is_leaf(id)) {
      out.emplace_back(label(id));
    } else {
      stack.push_back(right(id));
      stack.push_back(left(id));
    }
  }
  return out;
}

Term Term::shape() const {
  Term out = *this;
  for (Node& node : out.nodes_) node.label = 0;
  out.labels_.clear();
  return out;
}

namespace {

template <typename LeafEqual>
bool walk_equal(const Term& a, const Term& b, LeafEqual leaf_equal) {
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const bool x_leaf = a.is_leaf(x);
    if (x_leaf != b.is_leaf(y)) return false;
    if (x_leaf) {
      if (!leaf_equal(x, y)) return false;
      continue;
    }
    stack.emplace_back(a.right(x), b.right(y));
    stack.emplace_back(a.left(x), b.left(y));
  }
  return true;
}

}  // namespace

bool Term::same_shape(const Term& other) const {
  if (nodes_.size() != other.nodes_.size()) return false;
  return walk_equal(*this, other, [](NodeId, NodeId) { return true; });
}

bool operator==(const Term& a, const Term& b) {
  if (a.nodes_.size() != b.nodes_.size()) return false;
  return walk_equal(a, b, [&](NodeId x, NodeId y) {
    return a.label(x) == b.label(y);
  });
}

TermBuilder::TermBuilder(Term term)
    : nodes_(std::move(term.nodes_)),
      labels_(std::move(term.labels_)),
      root_(term.root_) {}

NodeId TermBuilder::add_leaf(std::string_view label) {
  Term::Node node;
  if (!label.empty()) {
    labels_.emplace_back(label);
    node.label = static_cast<std::uint32_t>(labels_.size());
  }
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId TermBuilder::add_node(NodeId left, NodeId right) {
  nodes_.push_back(Term::Node{left, right, 0});
  return static_cast<NodeId>(nodes_.size() - 1);
}

void TermBuilder::rotate(NodeId id) {
  Term::Node& top = nodes_[id];
  const NodeId inner = top.left;
  assert(inner != kNoNode && nodes_[inner].left != kNoNode);
  Term::Node& mid = nodes_[inner];
  // top = (a * b) * c  with  mid = a * b
  const NodeId a = mid.left;
  const NodeId b = mid.right;
  const NodeId c = top.right;
  mid.left = b;
  mid.right = c;
  top.left = a;
  top.right = inner;
}

Term TermBuilder::snapshot() const {
  Term out;
  out.nodes_ = nodes_;
  out.labels_ = labels_;
  out.root_ = root_;
  return out;
}

Term TermBuilder::build() && {
  if (nodes_.empty()) throw std::logic_error("TermBuilder::build on empty arena");
  Term out;
  out.nodes_ = std::move(nodes_);
  out.labels_ = std::move(labels_);
  out.root_ = root_;
  nodes_.clear();
  labels_.clear();
  return out;
}

Term left_chain(std::size_t n) {
  TermBuilder builder;
  builder.reserve(2 * n + 1);
  NodeId spine = builder.add_leaf();
  for (std::size_t i = 0; i < n; ++i) {
    spine = builder.add_node(spine, builder.add_leaf());
  }
  builder.set_root(spine);
  return std::move(builder).build();
}

Term right_chain(std::size_t n) {
  TermBuilder builder;
  builder.reserve(2 * n + 1);
  NodeId spine = builder.add_leaf();
  for (std::size_t i = 0; i < n; ++i) {
    spine = builder.add_node(builder.add_leaf(), spine);
  }
  builder.set_root(spine);
  return std::move(builder).build();
}

Term right_chain_over(std::span<const std::string> labels) {
  if (labels.empty()) {
    throw std::invalid_argument("right_chain_over needs at least one label");
  }
  TermBuilder builder;
  builder.reserve(2 * labels.size());
  NodeId spine = builder.add_leaf(labels.back());
  for (std::size_t i = labels.size() - 1; i-- > 0;) {
    spine = builder.add_node(builder.add_leaf(labels[i]), spine);
  }
  builder.set_root(spine);
  return std::move(builder).build();
}

}  // namespace assocnf
