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

#include "assocnf/rewrite_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "assocnf/measures.hpp"
#include "assocnf/rewrite.hpp"
#include "assocnf/term_text.hpp"
#include "graph_kernels.hpp"

namespace assocnf {

RewriteGraph::RewriteGraph(std::size_t term_size,
                           std::vector<std::string> nodes,
                           std::vector<std::vector<Edge>> successors)
    : term_size_(term_size),
      nodes_(std::move(nodes)),
      successors_(std::move(successors)) {
  if (successors_.size() != nodes_.size()) {
    throw std::invalid_argument("RewriteGraph: one successor list per node");
  }
  index_.reserve(nodes_.size());
  for (GraphNode i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i], i).second) {
      throw std::invalid_argument("RewriteGraph: duplicate node " + nodes_[i]);
    }
  }
  for (auto& edges : successors_) {
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.target < b.target; });
    for (const Edge& e : edges) {
      if (e.target >= nodes_.size()) {
        throw std::invalid_argument("RewriteGraph: edge target out of range");
      }
      ++edge_count_;
      step_count_ += e.multiplicity;
    }
  }
}

std::optional<GraphNode> RewriteGraph::find(std::string_view canonical) const {
  const auto it = index_.find(std::string(canonical));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<GraphNode> RewriteGraph::find(const Term& term) const {
  if (auto id = find(render(term))) return id;
  if (!term.has_labels()) return std::nullopt;
  return find(render(term.shape()));
}

namespace detail {

std::vector<Edge> successors_of(const RewriteGraph::Index& index,
                                const std::string& canonical) {
  const Term term = parse(canonical);
  std::vector<Edge> edges;
  for (const Position& p : find_redexes(term)) {
    const std::string next = render(apply_at(term, p));
    const auto it = index.find(next);
    if (it == index.end()) {
      throw std::logic_error("rewrite left the term universe: " + next);
    }
    auto existing = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) {
      return e.target == it->second;
    });
    if (existing != edges.end()) {
      ++existing->multiplicity;
    } else {
      edges.push_back(Edge{it->second, 1});
    }
  }
  return edges;
}

RewriteGraph::Index make_index(const std::vector<std::string>& nodes) {
  RewriteGraph::Index index;
  index.reserve(nodes.size());
  for (GraphNode i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], i);
  return index;
}

}  // namespace detail

namespace serial {

RewriteGraph build_graph(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(n, cap);
  std::vector<std::string> nodes = enumerate_shape_strings(n, std::max(n, cap));
  const auto index = detail::make_index(nodes);
  std::vector<std::vector<Edge>> successors(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    successors[i] = detail::successors_of(index, nodes[i]);
  }
  return RewriteGraph(n, std::move(nodes), std::move(successors));
}

}  // namespace serial

RewriteGraph build_graph(std::size_t n, Execution execution, std::size_t cap) {
  return execution == Execution::kSerial ? serial::build_graph(n, cap)
                                         : parallel::build_graph(n, cap);
}

RewriteGraph build_reachable_graph(const Term& start, std::size_t max_nodes) {
  std::vector<std::string> found{render(start)};
  RewriteGraph::Index index{{found.front(), 0}};
  std::vector<std::vector<std::pair<std::string, std::uint32_t>>> raw;

  // Breadth-first discovery; targets are resolved to ids after sorting.
  for (std::size_t i = 0; i < found.size(); ++i) {
    const Term term = parse(found[i]);
    std::vector<std::pair<std::string, std::uint32_t>> out;
    for (const Position& p : find_redexes(term)) {
      std::string next = render(apply_at(term, p));
      auto same = std::find_if(out.begin(), out.end(),
                               [&](const auto& e) { return e.first == next; });
      if (same != out.end()) {
        ++same->second;
        continue;
      }
      if (index.emplace(next, static_cast<GraphNode>(found.size())).second) {
        if (found.size() >= max_nodes) {
          throw std::length_error("reachable set exceeds " +
                                  std::to_string(max_nodes) + " terms");
        }
        found.push_back(next);
      }
      out.emplace_back(std::move(next), 1);
    }
    raw.push_back(std::move(out));
  }

  std::vector<GraphNode> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](GraphNode a, GraphNode b) { return found[a] < found[b]; });
  std::vector<std::string> nodes;
  nodes.reserve(found.size());
  for (GraphNode old_id : order) nodes.push_back(found[old_id]);
  const auto sorted_index = detail::make_index(nodes);

  std::vector<std::vector<Edge>> successors(nodes.size());
  for (GraphNode new_id = 0; new_id < nodes.size(); ++new_id) {
    for (const auto& [target, multiplicity] : raw[order[new_id]]) {
      successors[new_id].push_back(Edge{sorted_index.at(target), multiplicity});
    }
  }
  return RewriteGraph(size(start), std::move(nodes), std::move(successors));
}

}  // namespace assocnf
