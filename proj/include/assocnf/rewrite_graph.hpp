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

#ifndef ASSOCNF_REWRITE_GRAPH_HPP_
#define ASSOCNF_REWRITE_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "assocnf/enumerate.hpp"
#include "assocnf/term.hpp"

namespace assocnf {

using GraphNode = std::uint32_t;

// One-step successor. Distinct redexes that produce the same term collapse
// into a single edge; `multiplicity` counts them.
struct Edge {
  GraphNode target = 0;
  std::uint32_t multiplicity = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Directed graph of single rewrite steps between terms, keyed by canonical
// text. Immutable once built.
class RewriteGraph {
 public:
  using Index = std::unordered_map<std::string, GraphNode>;

  RewriteGraph() = default;
  // Edges of each node are sorted by target on construction.
  RewriteGraph(std::size_t term_size, std::vector<std::string> nodes,
               std::vector<std::vector<Edge>> successors);

  // Size (internal node count) shared by every term in the graph.
  std::size_t term_size() const { return term_size_; }
  std::size_t node_count() const { return nodes_.size(); }
  // Distinct (u, v) pairs.
  std::size_t edge_count() const { return edge_count_; }
  // Edges counted with multiplicity, i.e. (term, redex) pairs.
  std::size_t step_count() const { return step_count_; }

  const std::string& node(GraphNode id) const { return nodes_[id]; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  std::span<const Edge> successors(GraphNode id) const {
    return successors_[id];
  }

  std::optional<GraphNode> find(std::string_view canonical) const;
  // Looks the term up as written, then by its unlabeled shape.
  std::optional<GraphNode> find(const Term& term) const;

  friend bool operator==(const RewriteGraph& a, const RewriteGraph& b) {
    return a.term_size_ == b.term_size_ && a.nodes_ == b.nodes_ &&
           a.successors_ == b.successors_;
  }

 private:
  std::size_t term_size_ = 0;
  std::vector<std::string> nodes_;
  std::vector<std::vector<Edge>> successors_;
  Index index_;
  std::size_t edge_count_ = 0;
  std::size_t step_count_ = 0;
};

enum class Execution { kSerial, kParallel };

// Full rewrite graph over every shape of size n, nodes in sorted canonical
// order. The two kernels must produce identical graphs.
namespace serial {
RewriteGraph build_graph(std::size_t n, std::size_t cap = kDefaultGraphCap);
}  // namespace serial
namespace parallel {
RewriteGraph build_graph(std::size_t n, std::size_t cap = kDefaultGraphCap);
}  // namespace parallel

RewriteGraph build_graph(std::size_t n, Execution execution,
                         std::size_t cap = kDefaultGraphCap);

// Graph of everything reachable from `start` (labels kept), nodes sorted by
// canonical text. Throws std::length_error if more than `max_nodes` terms
// are reachable.
RewriteGraph build_reachable_graph(const Term& start,
                                   std::size_t max_nodes = 1u << 22);

}  // namespace assocnf

#endif  // ASSOCNF_REWRITE_GRAPH_HPP_
