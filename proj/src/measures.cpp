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

#include "assocnf/measures.hpp"

#include <vector>

namespace assocnf {
namespace {

// Preorder listing of the reachable nodes. Walking it backwards visits
// children before parents.
std::vector<NodeId> preorder(const Term& term) {
  std::vector<NodeId> order;
  order.reserve(term.node_count());
  std::vector<NodeId> stack{term.root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    if (!term.is_leaf(id)) {
      stack.push_back(term.right(id));
      stack.push_back(term.left(id));
    }
  }
  return order;
}

struct SizeAndSigma {
  std::uint64_t size = 0;
  std::uint64_t sigma = 0;
};

SizeAndSigma size_and_sigma(const Term& term) {
  const std::vector<NodeId> order = preorder(term);
  std::vector<std::uint64_t> subtree_size(term.node_count(), 0);
  std::uint64_t total_sigma = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const NodeId id = *it;
    if (term.is_leaf(id)) continue;
    const std::uint64_t left_size = subtree_size[term.left(id)];
    subtree_size[id] = 1 + left_size + subtree_size[term.right(id)];
    total_sigma += left_size;
  }
  return {subtree_size[term.root()], total_sigma};
}

}  // namespace

std::uint64_t size(const Term& term) {
  std::uint64_t internal = 0;
  std::vector<NodeId> stack{term.root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (term.is_leaf(id)) continue;
    ++internal;
    stack.push_back(term.left(id));
    stack.push_back(term.right(id));
  }
  return internal;
}

std::uint64_t sigma(const Term& term) { return size_and_sigma(term).sigma; }

std::uint64_t depth_rightmost(const Term& term) {
  std::uint64_t depth = 0;
  for (NodeId id = term.root(); !term.is_leaf(id); id = term.right(id)) {
    ++depth;
  }
  return depth;
}

bool is_normal_form(const Term& term) {
  return depth_rightmost(term) == size(term);
}

Metrics metrics(const Term& term) {
  const SizeAndSigma s = size_and_sigma(term);
  const std::uint64_t d_rm = depth_rightmost(term);
  return Metrics{s.size, s.sigma, d_rm, d_rm == s.size};
}

}  // namespace assocnf
