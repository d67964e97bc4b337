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

#include "assocnf/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <iterator>
#include <stdexcept>

#include "assocnf/term_text.hpp"

namespace assocnf {

std::optional<std::vector<GraphNode>> topological_order(const RewriteGraph& g) {
  const std::size_t count = g.node_count();
  std::vector<std::size_t> in_degree(count, 0);
  for (GraphNode u = 0; u < count; ++u) {
    for (const Edge& e : g.successors(u)) ++in_degree[e.target];
  }
  std::deque<GraphNode> ready;
  for (GraphNode u = 0; u < count; ++u) {
    if (in_degree[u] == 0) ready.push_back(u);
  }
  std::vector<GraphNode> order;
  order.reserve(count);
  while (!ready.empty()) {
    const GraphNode u = ready.front();
    ready.pop_front();
    order.push_back(u);
    for (const Edge& e : g.successors(u)) {
      if (--in_degree[e.target] == 0) ready.push_back(e.target);
    }
  }
  if (order.size() != count) return std::nullopt;
  return order;
}

std::vector<GraphNode> sinks(const RewriteGraph& g) {
  std::vector<GraphNode> out;
  for (GraphNode u = 0; u < g.node_count(); ++u) {
    if (g.successors(u).empty()) out.push_back(u);
  }
  return out;
}

bool verify_sn(const RewriteGraph& g) { return topological_order(g).has_value(); }

bool joinable(const RewriteGraph& g, GraphNode x, GraphNode y) {
  std::vector<char> from_x(g.node_count(), 0);
  std::vector<GraphNode> stack{x};
  from_x[x] = 1;
  while (!stack.empty()) {
    const GraphNode u = stack.back();
    stack.pop_back();
    for (const Edge& e : g.successors(u)) {
      if (!from_x[e.target]) {
        from_x[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  std::vector<char> seen(g.node_count(), 0);
  stack.assign(1, y);
  seen[y] = 1;
  while (!stack.empty()) {
    const GraphNode u = stack.back();
    stack.pop_back();
    if (from_x[u]) return true;
    for (const Edge& e : g.successors(u)) {
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  return false;
}

namespace {

// Sorted list of sink ids reachable from each node. Needs a topological
// order. In a finite DAG every common reduct reaches some sink, so two nodes
// are joinable iff these sets intersect.
std::vector<std::vector<GraphNode>> reachable_sinks(
    const RewriteGraph& g, const std::vector<GraphNode>& order) {
  std::vector<std::vector<GraphNode>> out(g.node_count());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const GraphNode u = *it;
    const auto succ = g.successors(u);
    if (succ.empty()) {
      out[u] = {u};
      continue;
    }
    std::vector<GraphNode> merged;
    for (const Edge& e : succ) {
      std::vector<GraphNode> next;
      std::set_union(merged.begin(), merged.end(), out[e.target].begin(),
                     out[e.target].end(), std::back_inserter(next));
      merged = std::move(next);
    }
    out[u] = std::move(merged);
  }
  return out;
}

bool intersects(const std::vector<GraphNode>& a,
                const std::vector<GraphNode>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

bool verify_wcr(const RewriteGraph& g, Execution execution) {
  const auto order = topological_order(g);
  std::vector<std::vector<GraphNode>> sink_sets;
  if (order) sink_sets = reachable_sinks(g, *order);

  auto node_ok = [&](GraphNode w) {
    const auto succ = g.successors(w);
    for (std::size_t i = 0; i < succ.size(); ++i) {
      for (std::size_t j = i + 1; j < succ.size(); ++j) {
        const GraphNode x = succ[i].target;
        const GraphNode y = succ[j].target;
        const bool ok = order ? intersects(sink_sets[x], sink_sets[y])
                              : joinable(g, x, y);
        if (!ok) return false;
      }
    }
    return true;
  };

  const auto count = static_cast<std::int64_t>(g.node_count());
  bool all_ok = true;
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(&& : all_ok)
    for (std::int64_t w = 0; w < count; ++w) {
      all_ok = node_ok(static_cast<GraphNode>(w)) && all_ok;
    }
  } else {
    for (std::int64_t w = 0; w < count && all_ok; ++w) {
      all_ok = node_ok(static_cast<GraphNode>(w));
    }
  }
  return all_ok;
}

bool verify_unique_nf(const RewriteGraph& g) {
  const std::vector<GraphNode> found = sinks(g);
  if (found.size() != 1) return false;
  const auto distance = shortest_paths_to_nf(g);
  return std::none_of(distance.begin(), distance.end(),
                      [](std::uint64_t d) { return d == kUnreachable; });
}

std::vector<std::uint64_t> longest_paths_to_nf(const RewriteGraph& g) {
  const auto order = topological_order(g);
  if (!order) {
    throw std::logic_error("longest path is unbounded on a cyclic graph");
  }
  std::vector<std::uint64_t> longest(g.node_count(), 0);
  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    std::uint64_t best = 0;
    for (const Edge& e : g.successors(*it)) {
      best = std::max(best, longest[e.target] + 1);
    }
    longest[*it] = best;
  }
  return longest;
}

std::vector<std::uint64_t> shortest_paths_to_nf(const RewriteGraph& g) {
  const std::size_t count = g.node_count();
  std::vector<std::vector<GraphNode>> predecessors(count);
  for (GraphNode u = 0; u < count; ++u) {
    for (const Edge& e : g.successors(u)) predecessors[e.target].push_back(u);
  }
  std::vector<std::uint64_t> distance(count, kUnreachable);
  std::deque<GraphNode> frontier;
  for (GraphNode s : sinks(g)) {
    distance[s] = 0;
    frontier.push_back(s);
  }
  while (!frontier.empty()) {
    const GraphNode v = frontier.front();
    frontier.pop_front();
    for (GraphNode u : predecessors[v]) {
      if (distance[u] == kUnreachable) {
        distance[u] = distance[v] + 1;
        frontier.push_back(u);
      }
    }
  }
  return distance;
}

namespace {

GraphNode require_node(const RewriteGraph& g, const Term& t) {
  const auto id = g.find(t);
  if (!id) throw std::out_of_range("term not in graph: " + render(t));
  return *id;
}

}  // namespace

std::uint64_t longest_path_from(const RewriteGraph& g, const Term& t) {
  return longest_paths_to_nf(g)[require_node(g, t)];
}

std::uint64_t shortest_path_from(const RewriteGraph& g, const Term& t) {
  return shortest_paths_to_nf(g)[require_node(g, t)];
}

}  // namespace assocnf
