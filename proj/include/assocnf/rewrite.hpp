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

// Rewriting with the single rule  (x*y)*z  ->  x*(y*z).
//
// A redex is any internal node whose left child is internal. Two
// normalization strategies are provided:
//
//   normalize_ctr      applies the rule as close to the root as possible,
//                      taking exactly size - depth_rightmost steps (the
//                      shortest possible sequence) in O(size) total time.
//   normalize_longest  always contracts the deepest, then leftmost, redex.
//                      Each step lowers sigma by exactly one, so it takes
//                      sigma steps (the longest possible sequence).

#ifndef ASSOCNF_REWRITE_HPP_
#define ASSOCNF_REWRITE_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assocnf/position.hpp"
#include "assocnf/term.hpp"

namespace assocnf {

class RewriteError : public std::runtime_error {
 public:
  RewriteError(Position position, const std::string& what)
      : std::runtime_error(what), position_(std::move(position)) {}
  const Position& position() const { return position_; }

 private:
  Position position_;
};

// The addressed subterm exists but is not of the form (x*y)*z.
class NotARedex : public RewriteError {
 public:
  explicit NotARedex(Position position);
};

// The path walks off the tree.
class InvalidPosition : public RewriteError {
 public:
  explicit InvalidPosition(Position position);
};

// All redex positions, in DeeperFirst order. Empty iff the term is normal.
std::vector<Position> find_redexes(const Term& term);

// First redex in DeeperFirst order.
std::optional<Position> deepest_leftmost_redex(const Term& term);

// Contracts the redex at `position`.
Term apply_at(const Term& term, const Position& position);

struct RewriteStep {
  Term term;
  Position position;
};

// One step of the root-nearest strategy: walk down the right spine past
// nodes whose left child is a leaf and contract the first node that is a
// redex. nullopt iff the term is normal.
std::optional<RewriteStep> step_ctr1(const Term& term);

enum class Strategy { kShortest, kLongest };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> strategy_from_string(std::string_view text);

enum class TraceDetail {
  // Keep every position and intermediate term.
  kFull,
  // Keep only the step count and the final term. Memory stays O(size),
  // which is what normalizing a 10^5-node chain requires.
  kCountOnly,
};

struct Step {
  Position position;
  Term term_after;
};

struct Trace {
  Term start;
  // Empty under TraceDetail::kCountOnly.
  std::vector<Step> steps;
  Term final;
  std::size_t step_count = 0;
};

Trace normalize_ctr(const Term& term, TraceDetail detail = TraceDetail::kFull);
Trace normalize_longest(const Term& term,
                        TraceDetail detail = TraceDetail::kFull);
Trace normalize(const Term& term, Strategy strategy,
                TraceDetail detail = TraceDetail::kFull);

// Folds apply_at over the recorded positions, starting from trace.start.
// Needs a trace recorded with TraceDetail::kFull.
Term replay(const Trace& trace);

}  // namespace assocnf

#endif  // ASSOCNF_REWRITE_HPP_
