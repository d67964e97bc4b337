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

#ifndef ASSOCNF_ENUMERATE_HPP_
#define ASSOCNF_ENUMERATE_HPP_

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "assocnf/term.hpp"

namespace assocnf {

// Enumeration materializes Catalan(n) shapes; 14 is ~2.7M.
inline constexpr std::size_t kDefaultEnumerationCap = 14;
// Graph construction and verification also hold all edges; 12 is ~208k
// nodes.
inline constexpr std::size_t kDefaultGraphCap = 12;

class CapExceeded : public std::invalid_argument {
 public:
  CapExceeded(std::size_t n, std::size_t cap);
  std::size_t n() const { return n_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

// Canonical strings of every unlabeled shape with n internal nodes, each
// once, sorted.
std::vector<std::string> enumerate_shape_strings(
    std::size_t n, std::size_t cap = kDefaultEnumerationCap);

// Same universe as enumerate_shape_strings, same order, as terms.
std::vector<Term> enumerate_shapes(std::size_t n,
                                   std::size_t cap = kDefaultEnumerationCap);

// Uniformly random shape with n internal nodes (Remy's growth process).
// With `labeled`, leaves are named x0, x1, ... from left to right.
Term random_term(std::size_t n, std::mt19937_64& rng, bool labeled = false);

}  // namespace assocnf

#endif  // ASSOCNF_ENUMERATE_HPP_
