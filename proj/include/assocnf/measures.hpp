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

#ifndef ASSOCNF_MEASURES_HPP_
#define ASSOCNF_MEASURES_HPP_

#include <cstdint>

#include "assocnf/term.hpp"

namespace assocnf {

// Number of internal nodes (occurrences of `*`).
std::uint64_t size(const Term& term);

// Sum over internal nodes of the size of their left subtree. Every rewrite
// step lowers it, and it is exactly the length of the longest rewrite
// sequence to normal form.
std::uint64_t sigma(const Term& term);

// Edges from the root to the rightmost leaf.
std::uint64_t depth_rightmost(const Term& term);

// A term is normal iff its rightmost leaf sits at depth size(term), i.e. the
// term is a right chain.
bool is_normal_form(const Term& term);

struct Metrics {
  std::uint64_t size = 0;
  std::uint64_t sigma = 0;
  std::uint64_t d_rm = 0;
  bool is_nf = false;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

// All four measures from a single traversal.
Metrics metrics(const Term& term);

// n(n-1)/2, the longest possible rewrite sequence for a term of size n.
constexpr std::uint64_t max_sigma(std::uint64_t n) {
  return n == 0 ? 0 : n * (n - 1) / 2;
}

}  // namespace assocnf

#endif  // ASSOCNF_MEASURES_HPP_
