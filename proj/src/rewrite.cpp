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

#include "assocnf/rewrite.hpp"

#include <algorithm>
#include <utility>

namespace assocnf {

NotARedex::NotARedex(Position position)
    : RewriteError(position,
                   "no redex at position " + position.to_string()) {}

InvalidPosition::InvalidPosition(Position position)
    : RewriteError(position,
                   "position " + position.to_string() + " is outside the term") {}

namespace {

template <typename Tree>
bool is_redex(const Tree& tree, NodeId id) {
  return !tree.is_leaf(id) && !tree.is_leaf(tree.left(id));
}

// Deepest redex, ties broken by the leftmost path. A left-first preorder
// walk meets equal-depth nodes in lexicographic path order, so the first
// redex seen at a new maximum depth is the answer.
template <typename Tree>
std::optional<std::pair<NodeId, Position>> find_deepest_leftmost(
    const Tree& tree) {
  struct Frame {
    NodeId id;
    std::size_t depth;
  };
  const std::size_t slots = tree.node_count();
  std::vector<NodeId> parent(slots, kNoNode);
  std::vector<Frame> stack{{tree.root(), 0}};
  NodeId best = kNoNode;
  std::size_t best_depth = 0;
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (tree.is_leaf(f.id)) continue;
    if (is_redex(tree, f.id) && (best == kNoNode || f.depth > best_depth)) {
      best = f.id;
      best_depth = f.depth;
    }
    parent[tree.left(f.id)] = f.id;
    parent[tree.right(f.id)] = f.id;
    stack.push_back({tree.right(f.id), f.depth + 1});
    stack.push_back({tree.left(f.id), f.depth + 1});
  }
  if (best == kNoNode) return std::nullopt;

  std::vector<Dir> path(best_depth);
  NodeId id = best;
  for (std::size_t i = best_depth; i-- > 0;) {
    const NodeId up = parent[id];
    path[i] = tree.left(up) == id ? Dir::kLeft : Dir::kRight;
    id = up;
  }
  return std::make_pair(best, Position(std::move(path)));
}

}  // namespace

std::vector<Position> find_redexes(const Term& term) {
  std::vector<Position> out;
  std::vector<std::pair<NodeId, Position>> stack;
  stack.emplace_back(term.root(), Position{});
  while (!stack.empty()) {
    auto [id, position] = std::move(stack.back());
    stack.pop_back();
    if (term.is_leaf(id)) continue;
    if (is_redex(term, id)) out.push_back(position);
    stack.emplace_back(term.right(id), position.child(Dir::kRight));
    stack.emplace_back(term.left(id), position.child(Dir::kLeft));
  }
  std::sort(out.begin(), out.end(), DeeperFirst{});
  return out;
}

std::optional<Position> deepest_leftmost_redex(const Term& term) {
  auto found = find_deepest_leftmost(term);
  if (!found) return std::nullopt;
  return std::move(found->second);
}

Term apply_at(const Term& term, const Position& position) {
  const std::optional<NodeId> id = locate(term, position);
  if (!id) throw InvalidPosition(position);
  if (!is_redex(term, *id)) throw NotARedex(position);
  TermBuilder work(term);
  work.rotate(*id);
  return std::move(work).build();
}

std::optional<RewriteStep> step_ctr1(const Term& term) {
  Position position;
  NodeId id = term.root();
  while (!term.is_leaf(id) && term.is_leaf(term.left(id))) {
    id = term.right(id);
    position.push(Dir::kRight);
  }
  if (term.is_leaf(id)) return std::nullopt;
  TermBuilder work(term);
  work.rotate(id);
  return RewriteStep{std::move(work).build(), std::move(position)};
}

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::kShortest:
      return "shortest";
    case Strategy::kLongest:
      return "longest";
  }
  return "unknown";
}

std::optional<Strategy> strategy_from_string(std::string_view text) {
  if (text == "shortest") return Strategy::kShortest;
  if (text == "longest") return Strategy::kLongest;
  return std::nullopt;
}

Trace normalize_ctr(const Term& term, TraceDetail detail) {
  const bool full = detail == TraceDetail::kFull;
  Trace trace;
  trace.start = term;
  TermBuilder work(term);

  // The cursor only ever moves down the right spine. Contracting at the
  // cursor leaves it in place with a new left child, so nothing above it is
  // revisited: each node is passed once and each step costs O(1).
  Position cursor;
  NodeId id = work.root();
  while (!work.is_leaf(id)) {
    while (!work.is_leaf(id) && work.is_leaf(work.left(id))) {
      id = work.right(id);
      if (full) cursor.push(Dir::kRight);
    }
    if (work.is_leaf(id)) break;
    work.rotate(id);
    ++trace.step_count;
    if (full) trace.steps.push_back(Step{cursor, work.snapshot()});
  }
  trace.final = std::move(work).build();
  return trace;
}

Trace normalize_longest(const Term& term, TraceDetail detail) {
  const bool full = detail == TraceDetail::kFull;
  Trace trace;
  trace.start = term;
  TermBuilder work(term);
  while (auto found = find_deepest_leftmost(work)) {
    work.rotate(found->first);
    ++trace.step_count;
    if (full) {
      trace.steps.push_back(Step{std::move(found->second), work.snapshot()});
    }
  }
  trace.final = std::move(work).build();
  return trace;
}

Trace normalize(const Term& term, Strategy strategy, TraceDetail detail) {
  switch (strategy) {
    case Strategy::kShortest:
      return normalize_ctr(term, detail);
    case Strategy::kLongest:
      return normalize_longest(term, detail);
  }
  return normalize_ctr(term, detail);
}

Term replay(const Trace& trace) {
  Term current = trace.start;
  for (const Step& step : trace.steps) current = apply_at(current, step.position);
  return current;
}

}  // namespace assocnf
