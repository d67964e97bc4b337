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

// Text output for rewrite graphs and verification reports. All writers are
// deterministic: same input, same bytes.

#ifndef ASSOCNF_REPORT_IO_HPP_
#define ASSOCNF_REPORT_IO_HPP_

#include <ostream>
#include <span>
#include <string>

#include "assocnf/rewrite_graph.hpp"
#include "assocnf/verify.hpp"

namespace assocnf {

// Graphviz digraph. Nodes are labeled with their canonical text and listed
// in graph order; sinks (normal forms) get a double border. Edges with
// multiplicity above one carry it as an edge label.
std::string export_dot(const RewriteGraph& g);

// One summary row per size, PASS/FAIL in the last column.
void write_report_table(std::ostream& out,
                        std::span<const VerificationReport> reports);

// JSON Lines: one object per term with keys term, n, sigma, d_rm, longest,
// shortest, ctr_steps, longest_steps.
void write_report_jsonl(std::ostream& out,
                        std::span<const VerificationReport> reports);

}  // namespace assocnf

#endif  // ASSOCNF_REPORT_IO_HPP_
