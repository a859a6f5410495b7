// Copyright 2026 The rstgen Authors.
//
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

#include "rstgen/baselines.h"

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracle/synth.h"
#include "rstgen/metrics.h"
#include "rstgen/tree_builder.h"

namespace rstgen {
namespace {

std::set<Span> Internal(const DiscourseTree& t) { return ExtractSpans(t).spans; }

TEST(RightBranchingTest, Examples) {
  EXPECT_EQ(Internal(RightBranching(3)), (std::set<Span>{{0, 2}, {1, 2}}));
  EXPECT_EQ(Internal(RightBranching(4)), (std::set<Span>{{0, 3}, {1, 3}, {2, 3}}));
  const DiscourseTree one = RightBranching(1);
  EXPECT_TRUE(one.root.is_leaf());
  EXPECT_TRUE(Internal(one).empty());
  EXPECT_THROW(RightBranching(0), std::invalid_argument);
}

TEST(LeftBranchingTest, Examples) {
  EXPECT_EQ(Internal(LeftBranching(3)), (std::set<Span>{{0, 2}, {0, 1}}));
  EXPECT_EQ(Internal(LeftBranching(2)), (std::set<Span>{{0, 1}}));
  EXPECT_EQ(Internal(LeftBranching(5)), (std::set<Span>{{0, 4}, {0, 3}, {0, 2}, {0, 1}}));
  EXPECT_THROW(LeftBranching(-1), std::invalid_argument);
}

TEST(HierarchicalBranchingTest, TwoSentences) {
  const std::vector<int> s{0, 0, 1, 1};
  EXPECT_EQ(Internal(HierarchicalBranching(s, Branching::kRight, Branching::kRight)),
            (std::set<Span>{{0, 3}, {0, 1}, {2, 3}}));
}

TEST(HierarchicalBranchingTest, SingleSentenceCollapsesToFlatBranching) {
  const std::vector<int> s(6, 0);
  EXPECT_TRUE(SameStructure(HierarchicalBranching(s, Branching::kRight, Branching::kRight).root,
                            RightBranching(6).root));
  EXPECT_TRUE(SameStructure(HierarchicalBranching(s, Branching::kLeft, Branching::kLeft).root,
                            LeftBranching(6).root));
}

TEST(HierarchicalBranchingTest, OneEduPerSentenceIsDocumentLevelBranching) {
  const std::vector<int> s{0, 1, 2};
  EXPECT_EQ(Internal(HierarchicalBranching(s, Branching::kLeft, Branching::kRight)),
            Internal(RightBranching(3)));
  EXPECT_EQ(Internal(HierarchicalBranching(s, Branching::kRight, Branching::kLeft)),
            Internal(LeftBranching(3)));
}

TEST(HierarchicalBranchingTest, MixedSentenceLengths) {
  const std::vector<int> s{0, 1, 1, 1, 2, 2};
  EXPECT_EQ(Internal(HierarchicalBranching(s, Branching::kLeft, Branching::kLeft)),
            (std::set<Span>{{1, 2}, {1, 3}, {4, 5}, {0, 3}, {0, 5}}));
  const std::vector<int> bad{0, 1, 0};
  EXPECT_THROW(HierarchicalBranching(bad, Branching::kLeft, Branching::kLeft),
               std::invalid_argument);
}

TEST(BaselinePropertyTest, ValidTreesWithPlaceholderAnnotations) {
  synth::Rng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 40;
    const auto ids = synth::RandomSentences(rng, n, 5);
    const SentenceMap sentences(ids);
    for (const DiscourseTree& t :
         {RightBranching(n, "d"), LeftBranching(n, "d"),
          HierarchicalBranching(ids, Branching::kRight, Branching::kRight, "d"),
          HierarchicalBranching(ids, Branching::kLeft, Branching::kLeft, "d")}) {
      EXPECT_TRUE(ValidateTree(t).empty());
      EXPECT_EQ(CountInternalNodes(t.root), static_cast<std::size_t>(n - 1));
      EXPECT_EQ(t.doc_id, "d");
      EXPECT_FALSE(t.aggregation.has_value());
      EXPECT_EQ(t.root.attention, 1.0);
      EXPECT_EQ(t.root.sentiment, 0.0);
      if (!t.root.is_leaf()) EXPECT_EQ(t.root.left().nuclearity, Nuclearity::kNucleus);
    }
    for (const DiscourseTree& t :
         {HierarchicalBranching(ids, Branching::kRight, Branching::kRight),
          HierarchicalBranching(ids, Branching::kLeft, Branching::kLeft)}) {
      for (const Span& sp : Internal(t)) EXPECT_TRUE(AdmissibleSpan(sp.lo, sp.hi, sentences));
    }
  }
}

TEST(BaselinePropertyTest, RightAndLeftShareOnlyTheRoot) {
  for (int n = 3; n <= 30; ++n) {
    std::vector<Span> common;
    const auto r = Internal(RightBranching(n));
    const auto l = Internal(LeftBranching(n));
    std::set_intersection(r.begin(), r.end(), l.begin(), l.end(), std::back_inserter(common));
    ASSERT_EQ(common.size(), 1u);
    EXPECT_EQ(common[0], (Span{0, n - 1}));
  }
}

}  // namespace
}  // namespace rstgen
