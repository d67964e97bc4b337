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

#include "assocnf/enumerate.hpp"

#include <algorithm>

#include "assocnf/term_text.hpp"

namespace assocnf {

CapExceeded::CapExceeded(std::size_t n, std::size_t cap)
    : std::invalid_argument("size " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(cap) +
                            " (raise it explicitly to go further)"),
      n_(n),
      cap_(cap) {}

std::vector<std::string> enumerate_shape_strings(std::size_t n,
                                                 std::size_t cap) {
  if (n > cap) throw CapExceeded(n, cap);

  // by_size[k] holds every shape with k internal nodes.
  std::vector<std::vector<std::string>> by_size(n + 1);
  by_size[0] = {"."};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::string>& out = by_size[k];
    for (std::size_t left = 0; left < k; ++left) {
      const auto& lefts = by_size[left];
      const auto& rights = by_size[k - 1 - left];
      for (const std::string& l : lefts) {
        for (const std::string& r : rights) {
          std::string s;
          s.reserve(l.size() + r.size() + 3);
          s += '(';
          s += l;
          s += '*';
          s += r;
          s += ')';
          out.push_back(std::move(s));
        }
      }
    }
  }
  std::vector<std::string> result = std::move(by_size[n]);
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Term> enumerate_shapes(std::size_t n, std::size_t cap) {
  const std::vector<std::string> strings = enumerate_shape_strings(n, cap);
  std::vector<Term> out;
  out.reserve(strings.size());
  for (const std::string& s : strings) out.push_back(parse(s));
  return out;
}

Term random_term(std::size_t n, std::mt19937_64& rng, bool labeled) {
  // Grow a tree by repeatedly picking one of the existing nodes uniformly
  // together with a side, and splicing a new internal node with a fresh leaf
  // on that side in its place. After n rounds every shape with n internal
  // nodes is equally likely.
  std::vector<NodeId> left{kNoNode}, right{kNoNode}, parent{kNoNode};
  NodeId root = 0;
  for (std::size_t round = 0; round < n; ++round) {
    std::uniform_int_distribution<std::size_t> pick(0, left.size() - 1);
    const auto target = static_cast<NodeId>(pick(rng));
    const bool leaf_goes_left = std::bernoulli_distribution(0.5)(rng);

    const auto fresh = static_cast<NodeId>(left.size());
    const NodeId joint = fresh + 1;
    left.push_back(kNoNode);
    right.push_back(kNoNode);
    parent.push_back(joint);

    left.push_back(leaf_goes_left ? fresh : target);
    right.push_back(leaf_goes_left ? target : fresh);
    const NodeId above = parent[target];
    parent.push_back(above);
    parent[target] = joint;
    if (above == kNoNode) {
      root = joint;
    } else if (left[above] == target) {
      left[above] = joint;
    } else {
      right[above] = joint;
    }
  }

  // Copy into a builder in postorder so leaves are numbered left to right.
  TermBuilder builder;
  builder.reserve(left.size());
  std::vector<NodeId> built(left.size(), kNoNode);
  std::vector<std::pair<NodeId, bool>> stack{{root, false}};
  std::size_t next_label = 0;
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    if (left[id] == kNoNode) {
      built[id] = labeled ? builder.add_leaf("x" + std::to_string(next_label++))
                          : builder.add_leaf();
    } else if (expanded) {
      built[id] = builder.add_node(built[left[id]], built[right[id]]);
    } else {
      stack.emplace_back(id, true);
      stack.emplace_back(right[id], false);
      stack.emplace_back(left[id], false);
    }
  }
  builder.set_root(built[root]);
  return std::move(builder).build();
}

}  // namespace assocnf
