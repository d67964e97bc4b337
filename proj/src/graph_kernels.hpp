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

// Per-node work items shared by the serial and OpenMP kernels. Each is a
// pure function of its inputs, so both drivers produce identical results.

#ifndef ASSOCNF_SRC_GRAPH_KERNELS_HPP_
#define ASSOCNF_SRC_GRAPH_KERNELS_HPP_

#include <string>
#include <vector>

#include "assocnf/rewrite_graph.hpp"
#include "assocnf/verify.hpp"

namespace assocnf::detail {

RewriteGraph::Index make_index(const std::vector<std::string>& nodes);

// One-step successors of a canonical shape, collapsed by target.
std::vector<Edge> successors_of(const RewriteGraph::Index& index,
                                const std::string& canonical);

// Everything the per-size report needs from a single node once the graph
// distances are known.
TermRecord make_record(const RewriteGraph& graph, GraphNode id,
                       std::uint64_t longest, std::uint64_t shortest,
                       const std::string& normal_form);

// Graph-level checks and distances, computed once per size before the
// per-node pass.
struct GraphFacts {
  bool sn_ok = false;
  bool unique_nf_ok = false;
  bool sink_is_right_chain = false;
  std::vector<std::uint64_t> longest;
  std::vector<std::uint64_t> shortest;
  std::string normal_form;
};

GraphFacts graph_facts(const RewriteGraph& graph);

// Folds the per-node records into the flags of a report.
VerificationReport assemble_report(const RewriteGraph& graph, GraphFacts facts,
                                   bool wcr_ok,
                                   std::vector<TermRecord> records);

}  // namespace assocnf::detail

#endif  // ASSOCNF_SRC_GRAPH_KERNELS_HPP_
