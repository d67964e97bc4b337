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

// OpenMP drivers. Each loop writes only to its own slot, so the output is
// identical to the serial drivers regardless of thread count or schedule.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <utility>

#include "assocnf/analysis.hpp"
#include "assocnf/rewrite_graph.hpp"
#include "assocnf/verify.hpp"
#include "graph_kernels.hpp"

namespace assocnf::parallel {
namespace {

// Exceptions must not escape an OpenMP region; park the first one and
// rethrow after the join.
class FirstError {
 public:
  template <typename F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(assocnf_first_error)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

RewriteGraph build_graph(std::size_t n, std::size_t cap) {
  if (n > cap) throw CapExceeded(n, cap);
  std::vector<std::string> nodes = enumerate_shape_strings(n, std::max(n, cap));
  const auto index = detail::make_index(nodes);
  std::vector<std::vector<Edge>> successors(nodes.size());
  const auto count = static_cast<std::int64_t>(nodes.size());
  FirstError error;

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) {
    error.run([&] { successors[i] = detail::successors_of(index, nodes[i]); });
  }
  error.rethrow();
  return RewriteGraph(n, std::move(nodes), std::move(successors));
}

VerificationReport verify_size(std::size_t n, std::size_t cap) {
  const RewriteGraph graph = parallel::build_graph(n, cap);
  detail::GraphFacts facts = detail::graph_facts(graph);
  const bool wcr_ok = verify_wcr(graph, Execution::kParallel);

  std::vector<TermRecord> records(graph.node_count());
  const auto count = static_cast<std::int64_t>(graph.node_count());
  FirstError error;

#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < count; ++i) {
    error.run([&] {
      const auto id = static_cast<GraphNode>(i);
      const std::uint64_t longest = facts.sn_ok ? facts.longest[id] : 0;
      records[i] = detail::make_record(graph, id, longest, facts.shortest[id],
                                       facts.normal_form);
    });
  }
  error.rethrow();
  return detail::assemble_report(graph, std::move(facts), wcr_ok,
                                 std::move(records));
}

}  // namespace assocnf::parallel
