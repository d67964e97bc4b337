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

// The OpenMP kernels against their serial references.

#include <omp.h>

#include <sstream>

#include "assocnf/analysis.hpp"
#include "assocnf/report_io.hpp"
#include "assocnf/rewrite_graph.hpp"
#include "assocnf/verify.hpp"
#include "gtest/gtest.h"

namespace assocnf {
namespace {

class ParallelKernelTest : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(GetParam());
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(ParallelKernelTest, GraphsAreIdentical) {
  for (std::size_t n = 0; n <= 9; ++n) {
    EXPECT_EQ(parallel::build_graph(n), serial::build_graph(n)) << n;
  }
}

TEST_P(ParallelKernelTest, ReportsAreIdentical) {
  for (std::size_t n = 0; n <= 9; ++n) {
    const VerificationReport s = serial::verify_size(n);
    const VerificationReport p = parallel::verify_size(n);
    EXPECT_EQ(p, s) << n;
    EXPECT_TRUE(p.passed()) << n;
  }
}

TEST_P(ParallelKernelTest, WcrAgrees) {
  const RewriteGraph g = serial::build_graph(8);
  EXPECT_EQ(verify_wcr(g, Execution::kParallel),
            verify_wcr(g, Execution::kSerial));
}

TEST_P(ParallelKernelTest, SerializedOutputIsByteIdentical) {
  const auto s = verify_all(7, Execution::kSerial);
  const auto p = verify_all(7, Execution::kParallel);
  std::ostringstream table_s, table_p, jsonl_s, jsonl_p;
  write_report_table(table_s, s);
  write_report_table(table_p, p);
  write_report_jsonl(jsonl_s, s);
  write_report_jsonl(jsonl_p, p);
  EXPECT_EQ(table_s.str(), table_p.str());
  EXPECT_EQ(jsonl_s.str(), jsonl_p.str());
  EXPECT_EQ(export_dot(parallel::build_graph(6)),
            export_dot(serial::build_graph(6)));
}

INSTANTIATE_TEST_SUITE_P(Threads, ParallelKernelTest,
                         ::testing::Values(1, 2, 4, 7));

}  // namespace
}  // namespace assocnf
