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

// Exhaustive verification over every shape of a given size: builds the
// rewrite graph, runs the graph oracles, and checks each term's measures and
// both normalization strategies against the oracle distances.

#ifndef ASSOCNF_VERIFY_HPP_
#define ASSOCNF_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "assocnf/enumerate.hpp"
#include "assocnf/rewrite_graph.hpp"

namespace assocnf {

struct TermRecord {
  std::string term;
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  std::uint64_t d_rm = 0;
  // Oracle distances to normal form.
  std::uint64_t longest = 0;
  std::uint64_t shortest = 0;
  // Step counts of the two strategies.
  std::uint64_t ctr_steps = 0;
  std::uint64_t longest_steps = 0;
  // Both strategies ended at the graph's normal form.
  bool finals_match = false;

  friend bool operator==(const TermRecord&, const TermRecord&) = default;
};

struct VerificationReport {
  std::size_t n = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::vector<TermRecord> records;

  bool sn_ok = false;
  bool wcr_ok = false;
  bool unique_nf_ok = false;
  bool sink_is_right_chain = false;
  // longest == sigma for every term.
  bool longest_matches_sigma = false;
  // shortest == n - d_rm for every term.
  bool shortest_matches_formula = false;
  // ctr_steps == shortest, longest_steps == longest, finals_match.
  bool strategies_match_oracle = false;

  std::uint64_t max_longest = 0;
  // Every term whose longest distance equals max_longest, sorted.
  std::vector<std::string> max_attained_by;

  // All flags hold, max_longest = n(n-1)/2, and the left chain attains it.
  bool passed() const;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

namespace serial {
VerificationReport verify_size(std::size_t n,
                               std::size_t cap = kDefaultGraphCap);
}  // namespace serial
namespace parallel {
VerificationReport verify_size(std::size_t n,
                               std::size_t cap = kDefaultGraphCap);
}  // namespace parallel

VerificationReport verify_size(std::size_t n, Execution execution,
                               std::size_t cap = kDefaultGraphCap);

// One report per size 0..n_max.
std::vector<VerificationReport> verify_all(
    std::size_t n_max, Execution execution = Execution::kParallel,
    std::size_t cap = kDefaultGraphCap);

}  // namespace assocnf

#endif  // ASSOCNF_VERIFY_HPP_
