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

#include "assocnf/verify.hpp"

#include <algorithm>
#include <utility>

#include "assocnf/analysis.hpp"
#include "assocnf/measures.hpp"
#include "assocnf/rewrite.hpp"
#include "assocnf/term_text.hpp"
#include "graph_kernels.hpp"

namespace assocnf {

bool VerificationReport::passed() const {
  if (!(sn_ok && wcr_ok && unique_nf_ok && sink_is_right_chain &&
        longest_matches_sigma && shortest_matches_formula &&
        strategies_match_oracle)) {
    return false;
  }
  if (max_longest != max_sigma(n)) return false;
  return std::binary_search(max_attained_by.begin(), max_attained_by.end(),
                            render(left_chain(n)));
}

namespace detail {

GraphFacts graph_facts(const RewriteGraph& graph) {
  GraphFacts facts;
  facts.sn_ok = verify_sn(graph);
  facts.unique_nf_ok = verify_unique_nf(graph);
  const auto found = sinks(graph);
  if (found.size() == 1) facts.normal_form = graph.node(found.front());
  facts.sink_is_right_chain =
      found.size() == 1 &&
      facts.normal_form == render(right_chain(graph.term_size()));
  if (facts.sn_ok) facts.longest = longest_paths_to_nf(graph);
  facts.shortest = shortest_paths_to_nf(graph);
  return facts;
}

TermRecord make_record(const RewriteGraph& graph, GraphNode id,
                       std::uint64_t longest, std::uint64_t shortest,
                       const std::string& normal_form) {
  const Term term = parse(graph.node(id));
  const Metrics m = metrics(term);
  const Trace by_ctr = normalize_ctr(term, TraceDetail::kCountOnly);
  const Trace by_longest = normalize_longest(term, TraceDetail::kCountOnly);

  TermRecord record;
  record.term = graph.node(id);
  record.n = m.size;
  record.sigma = m.sigma;
  record.d_rm = m.d_rm;
  record.longest = longest;
  record.shortest = shortest;
  record.ctr_steps = by_ctr.step_count;
  record.longest_steps = by_longest.step_count;
  record.finals_match = !normal_form.empty() &&
                        render(by_ctr.final) == normal_form &&
                        render(by_longest.final) == normal_form;
  return record;
}

VerificationReport assemble_report(const RewriteGraph& graph, GraphFacts facts,
                                   bool wcr_ok,
                                   std::vector<TermRecord> records) {
  VerificationReport report;
  report.n = graph.term_size();
  report.node_count = graph.node_count();
  report.edge_count = graph.edge_count();
  report.sn_ok = facts.sn_ok;
  report.wcr_ok = wcr_ok;
  report.unique_nf_ok = facts.unique_nf_ok;
  report.sink_is_right_chain = facts.sink_is_right_chain;

  // Without termination there are no meaningful longest distances.
  bool longest_ok = facts.sn_ok;
  bool shortest_ok = true;
  bool strategies_ok = facts.sn_ok;
  for (const TermRecord& r : records) {
    longest_ok = longest_ok && r.longest == r.sigma;
    shortest_ok = shortest_ok && r.shortest == r.n - r.d_rm;
    strategies_ok = strategies_ok && r.ctr_steps == r.shortest &&
                    r.longest_steps == r.longest && r.finals_match;
    if (facts.sn_ok) report.max_longest = std::max(report.max_longest, r.longest);
  }
  if (facts.sn_ok) {
    for (const TermRecord& r : records) {
      if (r.longest == report.max_longest) report.max_attained_by.push_back(r.term);
    }
    std::sort(report.max_attained_by.begin(), report.max_attained_by.end());
  }
  report.longest_matches_sigma = longest_ok;
  report.shortest_matches_formula = shortest_ok;
  report.strategies_match_oracle = strategies_ok;
  report.records = std::move(records);
  return report;
}

}  // namespace detail

namespace serial {

VerificationReport verify_size(std::size_t n, std::size_t cap) {
  const RewriteGraph graph = serial::build_graph(n, cap);
  detail::GraphFacts facts = detail::graph_facts(graph);
  const bool wcr_ok = verify_wcr(graph, Execution::kSerial);

  std::vector<TermRecord> records;
  records.reserve(graph.node_count());
  for (GraphNode id = 0; id < graph.node_count(); ++id) {
    const std::uint64_t longest = facts.sn_ok ? facts.longest[id] : 0;
    records.push_back(detail::make_record(graph, id, longest,
                                          facts.shortest[id],
                                          facts.normal_form));
  }
  return detail::assemble_report(graph, std::move(facts), wcr_ok,
                                 std::move(records));
}

}  // namespace serial

VerificationReport verify_size(std::size_t n, Execution execution,
                               std::size_t cap) {
  return execution == Execution::kSerial ? serial::verify_size(n, cap)
                                         : parallel::verify_size(n, cap);
}

std::vector<VerificationReport> verify_all(std::size_t n_max,
                                           Execution execution,
                                           std::size_t cap) {
  if (n_max > cap) throw CapExceeded(n_max, cap);
  std::vector<VerificationReport> out;
  out.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out.push_back(verify_size(n, execution, cap));
  }
  return out;
}

}  // namespace assocnf
