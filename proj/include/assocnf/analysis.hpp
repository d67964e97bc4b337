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

// Graph-theoretic oracles over a RewriteGraph. None of these consult the
// term measures (sigma, depth_rightmost); they look only at edges, which
// keeps them independent of the quantities they are used to check.

#ifndef ASSOCNF_ANALYSIS_HPP_
#define ASSOCNF_ANALYSIS_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "assocnf/rewrite_graph.hpp"
#include "assocnf/term.hpp"

namespace assocnf {

inline constexpr std::uint64_t kUnreachable =
    std::numeric_limits<std::uint64_t>::max();

// Kahn's algorithm; nullopt if the graph has a cycle.
std::optional<std::vector<GraphNode>> topological_order(const RewriteGraph& g);

// Nodes with no successors, ascending.
std::vector<GraphNode> sinks(const RewriteGraph& g);

// Termination: the graph is finite, so SN holds iff it is acyclic.
bool verify_sn(const RewriteGraph& g);

// Local confluence: for every node, every pair of distinct successors has a
// common reduct. On a DAG this is decided by comparing the sets of sinks
// reachable from each successor; otherwise each pair is searched directly.
bool verify_wcr(const RewriteGraph& g,
                Execution execution = Execution::kSerial);

// True iff some node is reachable (reflexively) from both x and y.
bool joinable(const RewriteGraph& g, GraphNode x, GraphNode y);

// Exactly one sink, and every node reaches it.
bool verify_unique_nf(const RewriteGraph& g);

// Longest path from each node to any sink. Throws std::logic_error on a
// cyclic graph.
std::vector<std::uint64_t> longest_paths_to_nf(const RewriteGraph& g);

// Fewest steps from each node to a sink (breadth-first over reversed
// edges); kUnreachable where no sink is reachable.
std::vector<std::uint64_t> shortest_paths_to_nf(const RewriteGraph& g);

// Single-term forms of the above. Throw std::out_of_range if `t` is not in
// the graph.
std::uint64_t longest_path_from(const RewriteGraph& g, const Term& t);
std::uint64_t shortest_path_from(const RewriteGraph& g, const Term& t);

}  // namespace assocnf

#endif  // ASSOCNF_ANALYSIS_HPP_
