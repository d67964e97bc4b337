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

#include "assocnf/report_io.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace assocnf {

std::string export_dot(const RewriteGraph& g) {
  std::ostringstream out;
  out << "digraph rewrite_n" << g.term_size() << " {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (GraphNode u = 0; u < g.node_count(); ++u) {
    // Canonical terms contain only ( ) * . and [a-z0-9_], nothing to escape.
    out << "  n" << u << " [label=\"" << g.node(u) << "\"";
    if (g.successors(u).empty()) out << ", peripheries=2";
    out << "];\n";
  }
  for (GraphNode u = 0; u < g.node_count(); ++u) {
    for (const Edge& e : g.successors(u)) {
      out << "  n" << u << " -> n" << e.target;
      if (e.multiplicity > 1) out << " [label=\"x" << e.multiplicity << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

const char* yes_no(bool ok) { return ok ? "yes" : "NO"; }

}  // namespace

void write_report_table(std::ostream& out,
                        std::span<const VerificationReport> reports) {
  out << std::left << std::setw(4) << "n" << std::setw(9) << "shapes"
      << std::setw(9) << "edges" << std::setw(5) << "sn" << std::setw(5)
      << "wcr" << std::setw(5) << "unf" << std::setw(8) << "sink=rc"
      << std::setw(11) << "long=sigma" << std::setw(12) << "short=n-drm"
      << std::setw(11) << "strategies" << std::setw(12) << "max_longest"
      << "result\n";
  for (const VerificationReport& r : reports) {
    out << std::left << std::setw(4) << r.n << std::setw(9) << r.node_count
        << std::setw(9) << r.edge_count << std::setw(5) << yes_no(r.sn_ok)
        << std::setw(5) << yes_no(r.wcr_ok) << std::setw(5)
        << yes_no(r.unique_nf_ok) << std::setw(8)
        << yes_no(r.sink_is_right_chain) << std::setw(11)
        << yes_no(r.longest_matches_sigma) << std::setw(12)
        << yes_no(r.shortest_matches_formula) << std::setw(11)
        << yes_no(r.strategies_match_oracle) << std::setw(12) << r.max_longest
        << (r.passed() ? "PASS" : "FAIL") << '\n';
  }
}

void write_report_jsonl(std::ostream& out,
                        std::span<const VerificationReport> reports) {
  for (const VerificationReport& report : reports) {
    for (const TermRecord& r : report.records) {
      nlohmann::ordered_json line;
      line["term"] = r.term;
      line["n"] = r.n;
      line["sigma"] = r.sigma;
      line["d_rm"] = r.d_rm;
      line["longest"] = r.longest;
      line["shortest"] = r.shortest;
      line["ctr_steps"] = r.ctr_steps;
      line["longest_steps"] = r.longest_steps;
      out << line.dump() << '\n';
    }
  }
}

}  // namespace assocnf
