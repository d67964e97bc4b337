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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Every comparison is exact except the
// timing thresholds of criterion 7, which are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "assocnf/analysis.hpp"
#include "assocnf/enumerate.hpp"
#include "assocnf/measures.hpp"
#include "assocnf/rewrite.hpp"
#include "assocnf/rewrite_graph.hpp"
#include "assocnf/term_text.hpp"
#include "assocnf/verify.hpp"
#include "naive_oracle.hpp"

namespace assocnf {
namespace {

constexpr std::size_t kExhaustiveMaxN = 9;
constexpr std::size_t kStepLawMaxN = 8;
constexpr std::size_t kRandomTerms = 1000;
constexpr std::size_t kRandomTermSize = 12;
constexpr std::size_t kChainN = 100'000;
constexpr double kMaxDoublingRatio = 2.5;
constexpr double kMaxChainSeconds = 2.0;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Graphs for 0..9, built once and shared by criteria 1-4.
struct Universe {
  std::vector<RewriteGraph> graphs;
  std::vector<std::vector<std::uint64_t>> longest;
  std::vector<std::vector<std::uint64_t>> shortest;
};

const Universe& universe() {
  static const Universe u = [] {
    Universe out;
    for (std::size_t n = 0; n <= kExhaustiveMaxN; ++n) {
      out.graphs.push_back(build_graph(n, Execution::kParallel));
      out.longest.push_back(longest_paths_to_nf(out.graphs.back()));
      out.shortest.push_back(shortest_paths_to_nf(out.graphs.back()));
    }
    return out;
  }();
  return u;
}

Outcome exhaustive_distances() {
  const Universe& u = universe();
  std::size_t shapes = 0;
  for (std::size_t n = 0; n <= kExhaustiveMaxN; ++n) {
    const RewriteGraph& g = u.graphs[n];
    for (GraphNode id = 0; id < g.node_count(); ++id) {
      ++shapes;
      const Metrics m = metrics(parse(g.node(id)));
      if (u.longest[n][id] != m.sigma) {
        return {false, g.node(id) + ": longest " +
                           std::to_string(u.longest[n][id]) + " != sigma " +
                           std::to_string(m.sigma)};
      }
      if (u.shortest[n][id] != m.size - m.d_rm) {
        return {false, g.node(id) + ": shortest " +
                           std::to_string(u.shortest[n][id]) +
                           " != n - d_rm " + std::to_string(m.size - m.d_rm)};
      }
    }
  }
  return {true, std::to_string(shapes) + " shapes, longest = sigma and "
                                         "shortest = n - d_rm everywhere"};
}

Outcome bound_and_tightness() {
  const Universe& u = universe();
  for (std::size_t n = 0; n <= kExhaustiveMaxN; ++n) {
    const auto& longest = u.longest[n];
    const std::uint64_t max = *std::max_element(longest.begin(), longest.end());
    const GraphNode chain = *u.graphs[n].find(left_chain(n));
    if (max != max_sigma(n) || longest[chain] != max_sigma(n)) {
      return {false, "n=" + std::to_string(n) + ": max " + std::to_string(max) +
                         ", left chain " + std::to_string(longest[chain]) +
                         ", expected " + std::to_string(max_sigma(n))};
    }
  }
  return {true, "max longest = n(n-1)/2 for n = 0..9 (36 at n = 9), attained "
                "by the left chain"};
}

Outcome confluence() {
  const Universe& u = universe();
  for (std::size_t n = 0; n <= kExhaustiveMaxN; ++n) {
    const RewriteGraph& g = u.graphs[n];
    const auto found = sinks(g);
    const bool ok = verify_sn(g) && verify_wcr(g, Execution::kParallel) &&
                    verify_unique_nf(g) && found.size() == 1 &&
                    g.node(found.front()) == render(right_chain(n));
    if (!ok) return {false, "n=" + std::to_string(n)};
  }
  return {true, "SN, WCR and unique NF hold for n = 0..9; sink is the right "
                "chain"};
}

Outcome strategy_agreement() {
  const Universe& u = universe();
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= kExhaustiveMaxN; ++n) {
    const RewriteGraph& g = u.graphs[n];
    const std::string nf = render(right_chain(n));
    for (GraphNode id = 0; id < g.node_count(); ++id) {
      const Term t = parse(g.node(id));
      const Trace ctr = normalize_ctr(t, TraceDetail::kCountOnly);
      const Trace longest = normalize_longest(t, TraceDetail::kCountOnly);
      if (ctr.step_count != u.shortest[n][id] ||
          longest.step_count != u.longest[n][id] || render(ctr.final) != nf ||
          render(longest.final) != nf) {
        return {false, "shape " + g.node(id)};
      }
      ++checked;
    }
  }

  std::mt19937_64 rng(20260101);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < kRandomTerms; ++i) {
    terms.push_back(random_term(kRandomTermSize, rng, /*labeled=*/true));
  }
  std::vector<char> good(terms.size(), 0);
  std::size_t reachable_total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : reachable_total)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(terms.size()); ++i) {
    const Term& t = terms[i];
    const RewriteGraph g = build_reachable_graph(t);
    reachable_total += g.node_count();
    const Term expected = right_chain_over(t.leaf_labels());
    const Trace ctr = normalize_ctr(t, TraceDetail::kCountOnly);
    const Trace longest = normalize_longest(t, TraceDetail::kCountOnly);
    good[i] = ctr.step_count == shortest_path_from(g, t) &&
              longest.step_count == longest_path_from(g, t) &&
              ctr.final == expected && longest.final == expected;
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!good[i]) return {false, "random term " + render(terms[i])};
  }
  return {true, std::to_string(checked) + " shapes and " +
                    std::to_string(kRandomTerms) +
                    " random labeled terms of size 12 (" +
                    std::to_string(reachable_total) +
                    " reachable terms searched)"};
}

std::uint64_t internal_nodes_below(const Term& t, NodeId id) {
  std::uint64_t count = 0;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (t.is_leaf(x)) continue;
    ++count;
    stack.push_back(t.left(x));
    stack.push_back(t.right(x));
  }
  return count;
}

Outcome sigma_step_law() {
  std::size_t steps = 0;
  for (std::size_t n = 0; n <= kStepLawMaxN; ++n) {
    for (const Term& t : enumerate_shapes(n)) {
      const std::uint64_t before = sigma(t);
      for (const Position& p : find_redexes(t)) {
        const NodeId ll = *locate(t, p.child(Dir::kLeft).child(Dir::kLeft));
        const std::uint64_t after = sigma(apply_at(t, p));
        if (after != before - internal_nodes_below(t, ll) - 1) {
          return {false, render(t) + " at " + p.to_string()};
        }
        ++steps;
      }
    }
  }
  return {true, std::to_string(steps) + " (term, redex) pairs for n <= 8"};
}

Outcome ctr1_depth_step() {
  std::size_t fired = 0;
  for (std::size_t n = 0; n <= kStepLawMaxN; ++n) {
    for (const Term& t : enumerate_shapes(n)) {
      const auto step = step_ctr1(t);
      if (!step) continue;
      if (depth_rightmost(step->term) != depth_rightmost(t) + 1) {
        return {false, render(t)};
      }
      ++fired;
    }
  }
  return {true, "d_rm rose by exactly 1 in all " + std::to_string(fired) +
                    " applications for n <= 8"};
}

double best_seconds(const std::function<void()>& f, int repeats) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> took =
        std::chrono::steady_clock::now() - start;
    best = std::min(best, took.count());
  }
  return best;
}

Outcome linear_ctr() {
  const Term chain = left_chain(kChainN);
  const Trace trace = normalize_ctr(chain, TraceDetail::kCountOnly);
  if (trace.step_count != kChainN - 1) {
    return {false, "steps " + std::to_string(trace.step_count)};
  }
  if (trace.final != right_chain(kChainN)) return {false, "final not a right chain"};

  const Term doubled = left_chain(2 * kChainN);
  std::size_t sink = 0;
  const double t1 = best_seconds(
      [&] { sink += normalize_ctr(chain, TraceDetail::kCountOnly).step_count; }, 7);
  const double t2 = best_seconds(
      [&] { sink += normalize_ctr(doubled, TraceDetail::kCountOnly).step_count; }, 7);
  const double ratio = t2 / t1;
  std::ostringstream detail;
  detail.precision(3);
  detail << "99999 steps to the right chain; " << t1 * 1e3 << " ms at 1e5, "
         << t2 * 1e3 << " ms at 2e5, ratio " << ratio;
  return {t1 < kMaxChainSeconds && ratio <= kMaxDoublingRatio && sink > 0,
          detail.str()};
}

Outcome enumeration_counts() {
  const auto catalan = naive::catalan_by_recurrence(12);
  for (std::size_t n = 0; n <= 12; ++n) {
    const std::size_t got = enumerate_shape_strings(n).size();
    if (got != catalan[n]) {
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(got) +
                         " != " + std::to_string(catalan[n])};
    }
  }
  return {true, "n = 0..12 match the recurrence (208012 at n = 12)"};
}

}  // namespace
}  // namespace assocnf

int main() {
  using assocnf::Outcome;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"1 exhaustive longest/shortest distances, n <= 9",
       assocnf::exhaustive_distances},
      {"2 bound n(n-1)/2 and left-chain tightness, n <= 9",
       assocnf::bound_and_tightness},
      {"3 SN, WCR, unique NF, n <= 9", assocnf::confluence},
      {"4 strategies agree with the oracle", assocnf::strategy_agreement},
      {"5 sigma step law, n <= 8", assocnf::sigma_step_law},
      {"6 ctr1 raises d_rm by one, n <= 8", assocnf::ctr1_depth_step},
      {"7 ctr is linear and stack-safe on left_chain(100000)",
       assocnf::linear_ctr},
      {"8 enumeration counts follow the Catalan recurrence",
       assocnf::enumeration_counts},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s: %s\n", o.ok ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
