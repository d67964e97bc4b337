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

#include <random>
#include <string>

#include "assocnf/enumerate.hpp"
#include "assocnf/measures.hpp"
#include "assocnf/rewrite.hpp"
#include "assocnf/term.hpp"
#include "assocnf/term_text.hpp"
#include "gtest/gtest.h"
#include "naive_oracle.hpp"

namespace assocnf {
namespace {

constexpr std::size_t kDeep = 1'000'000;

TEST(ParseTest, RunningExampleIsLeftNested) {
  const Term t = parse("(((a*b)*c)*d)");
  const Term expected = Term::Join(
      Term::Join(Term::Join(Term::Leaf("a"), Term::Leaf("b")), Term::Leaf("c")),
      Term::Leaf("d"));
  EXPECT_EQ(t, expected);
}

TEST(ParseTest, UnlabeledLeaf) {
  const Term t = parse(".");
  EXPECT_TRUE(t.is_leaf());
  EXPECT_TRUE(t.label(t.root()).empty());
  EXPECT_EQ(t, Term());
}

TEST(ParseTest, TwoLeftChain) {
  EXPECT_EQ(parse("((.*.)*.)"), left_chain(2));
}

TEST(ParseTest, WhitespaceBetweenTokens) {
  EXPECT_EQ(parse("  ( ( a *b)\t*\n c ) "), parse("((a*b)*c)"));
}

TEST(ParseTest, ErrorsCarryByteOffsets) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  for (const Case& c : {Case{"", 0}, Case{"(a*b", 4}, Case{"(a b)", 3},
                        Case{"(a*b))", 5}, Case{"A", 0}, Case{"()", 1},
                        Case{"(a*)", 3}, Case{"a b", 2}}) {
    try {
      parse(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << c.text << ": " << e.what();
    }
  }
}

TEST(ParseTest, MillionLevelsDeep) {
  std::string text;
  text.reserve(4 * kDeep + 1);
  text.append(kDeep, '(');
  text += '.';
  for (std::size_t i = 0; i < kDeep; ++i) text += "*.)";
  const Term t = parse(text);
  EXPECT_EQ(size(t), kDeep);
  EXPECT_EQ(depth_rightmost(t), 1u);
  EXPECT_EQ(render(t), text);
}

TEST(RenderTest, Examples) {
  EXPECT_EQ(render(Term::Leaf("a")), "a");
  EXPECT_EQ(render(left_chain(2)), "((.*.)*.)");
  const Term t = Term::Join(Term::Join(Term::Leaf("a"), Term::Leaf("b")),
                            Term::Join(Term::Leaf("c"), Term::Leaf("d")));
  EXPECT_EQ(render(t), "((a*b)*(c*d))");
}

TEST(RenderTest, RoundTripOnRandomLabeledTerms) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Term t = random_term(i % 40, rng, /*labeled=*/i % 2 == 0);
    EXPECT_EQ(parse(render(t)), t);
  }
}

TEST(TermTest, EqualityIncludesLabelsShapeEqualityDoesNot) {
  const Term a = parse("((a*b)*c)");
  const Term b = parse("((x*y)*z)");
  EXPECT_NE(a, b);
  EXPECT_TRUE(a.same_shape(b));
  EXPECT_EQ(a.shape(), parse("((.*.)*.)"));
  EXPECT_FALSE(a.same_shape(parse("(a*(b*c))")));
}

TEST(TermTest, LeafLabelsInOrder) {
  const Term t = parse("((a*(b*c))*(d*e))");
  EXPECT_EQ(t.leaf_labels(),
            (std::vector<std::string>{"a", "b", "c", "d", "e"}));
  EXPECT_EQ(right_chain_over(t.leaf_labels()), parse("(a*(b*(c*(d*e))))"));
}

TEST(MeasuresTest, Size) {
  EXPECT_EQ(size(Term()), 0u);
  EXPECT_EQ(size(parse("(((a*b)*c)*d)")), 3u);
  EXPECT_EQ(size(parse("(a*(b*(c*d)))")), 3u);
}

TEST(MeasuresTest, Sigma) {
  EXPECT_EQ(sigma(Term()), 0u);
  EXPECT_EQ(sigma(parse("(((.*.)*.)*.)")), 3u);
  // Longest rewrite sequence by brute force is 1.
  EXPECT_EQ(sigma(parse("((a*b)*(c*d))")), 1u);
}

TEST(MeasuresTest, DepthRightmost) {
  EXPECT_EQ(depth_rightmost(Term()), 0u);
  EXPECT_EQ(depth_rightmost(parse("(((a*b)*c)*d)")), 1u);
  EXPECT_EQ(depth_rightmost(parse("(a*(b*(c*d)))")), 3u);
}

TEST(MeasuresTest, IsNormalForm) {
  EXPECT_TRUE(is_normal_form(Term()));
  EXPECT_TRUE(is_normal_form(parse("(a*(b*(c*d)))")));
  EXPECT_FALSE(is_normal_form(parse("((a*b)*(c*d))")));
}

TEST(MeasuresTest, MetricsMatchesIndividualMeasures) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Term t = random_term(i % 25, rng);
    const Metrics m = metrics(t);
    EXPECT_EQ(m.size, size(t));
    EXPECT_EQ(m.sigma, sigma(t));
    EXPECT_EQ(m.d_rm, depth_rightmost(t));
    EXPECT_EQ(m.is_nf, is_normal_form(t));
    EXPECT_LE(m.d_rm, m.size);
    EXPECT_LE(m.sigma, max_sigma(m.size));
  }
}

TEST(ChainTest, Examples) {
  EXPECT_EQ(render(left_chain(0)), ".");
  EXPECT_EQ(render(right_chain(0)), ".");
  EXPECT_EQ(render(left_chain(1)), "(.*.)");
  EXPECT_EQ(render(left_chain(3)), "(((.*.)*.)*.)");
  EXPECT_EQ(sigma(left_chain(3)), 3u);
  EXPECT_EQ(render(right_chain(3)), "(.*(.*(.*.)))");
  EXPECT_TRUE(is_normal_form(right_chain(3)));
}

TEST(ChainTest, SizesAndSigmaForAllSmallN) {
  for (std::size_t n = 0; n <= 60; ++n) {
    EXPECT_EQ(size(left_chain(n)), n);
    EXPECT_EQ(size(right_chain(n)), n);
    EXPECT_EQ(sigma(left_chain(n)), max_sigma(n)) << n;
    EXPECT_EQ(sigma(right_chain(n)), 0u);
  }
}

TEST(ChainTest, MeasuresAreStackSafeAtAMillion) {
  const Term left = left_chain(kDeep);
  const Term right = right_chain(kDeep);
  const Metrics ml = metrics(left);
  EXPECT_EQ(ml.size, kDeep);
  EXPECT_EQ(ml.sigma, max_sigma(kDeep));
  EXPECT_EQ(ml.d_rm, 1u);
  EXPECT_FALSE(ml.is_nf);
  const Metrics mr = metrics(right);
  EXPECT_EQ(mr.size, kDeep);
  EXPECT_EQ(mr.sigma, 0u);
  EXPECT_TRUE(mr.is_nf);
  EXPECT_EQ(size(left), kDeep);
  EXPECT_TRUE(is_normal_form(right));
  EXPECT_TRUE(left.same_shape(left_chain(kDeep)));
  EXPECT_EQ(left.leaf_labels().size(), kDeep + 1);
}

// The bound sigma <= n(n-1)/2 and the three-way normal form agreement, over
// every shape up to size 8.
TEST(MeasuresTest, ExhaustiveInvariantsUpToEight) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const Term& t : enumerate_shapes(n)) {
      const Metrics m = metrics(t);
      ASSERT_EQ(m.size, n);
      EXPECT_LE(m.sigma, max_sigma(n));
      const bool no_redex = find_redexes(t).empty();
      EXPECT_EQ(m.is_nf, no_redex) << render(t);
      EXPECT_EQ(m.d_rm == m.size, no_redex) << render(t);
    }
  }
}

TEST(MeasuresTest, AgreeWithBruteForceOnSmallShapes) {
  naive::Distances oracle;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const std::string& s : naive::all_shapes(n)) {
      const Term t = parse(s);
      EXPECT_EQ(sigma(t), oracle.longest(s)) << s;
      EXPECT_EQ(size(t) - depth_rightmost(t), oracle.shortest(s)) << s;
    }
  }
}

}  // namespace
}  // namespace assocnf
