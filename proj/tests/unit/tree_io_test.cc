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

#include "rstgen/tree_io.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "oracle/synth.h"
#include "rstgen/baselines.h"
#include "rstgen/tree_builder.h"

namespace rstgen {
namespace {

bool NumbersClose(const DiscourseNode& a, const DiscourseNode& b) {
  auto close = [](double x, double y) { return std::abs(x - y) <= 1e-8 * std::max(1.0, std::abs(x)); };
  if (!close(a.sentiment, b.sentiment) || !close(a.attention, b.attention)) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!NumbersClose(a.children[i], b.children[i])) return false;
  }
  return true;
}

TEST(TreeIoTest, HandWrittenTwoEduRecord) {
  const DiscourseTree t = ParseTree(
      "(doc \"r1\" none 0\n"
      "  (span 1 2 Root span 0 1\n"
      "    (leaf 1 Nucleus span 0 1)\n"
      "    (leaf 2 Satellite span 0 1)))\n");
  EXPECT_EQ(t.doc_id, "r1");
  EXPECT_FALSE(t.aggregation.has_value());
  EXPECT_EQ(t.root.span, (Span{0, 1}));
  ASSERT_EQ(t.root.children.size(), 2u);
  EXPECT_EQ(t.root.left().span, (Span{0, 0}));
  EXPECT_EQ(t.root.right().nuclearity, Nuclearity::kSatellite);
  EXPECT_FALSE(t.root.nuclearity.has_value());
  EXPECT_TRUE(ValidateTree(t).empty());
}

TEST(TreeIoTest, FormatIsOneBasedWithNineSignificantDigits) {
  DiscourseTree t = RightBranching(2, "x");
  t.root.sentiment = 1.0 / 3.0;
  t.aggregation = AggregationKind::kAvg;
  t.root_distance = 0.125;
  EXPECT_EQ(FormatTree(t),
            "(doc \"x\" avg 0.125 (span 1 2 Root span 0.333333333 1 "
            "(leaf 1 Nucleus span 0 1) (leaf 2 Satellite span 0 1)))");
}

TEST(TreeIoTest, SingleLeafTree) {
  const DiscourseTree t = ParseTree("(doc \"s\" max 0.5 (leaf 1 Root span -0.25 0.5))");
  EXPECT_TRUE(t.root.is_leaf());
  EXPECT_EQ(t.root.sentiment, -0.25);
  EXPECT_EQ(FormatTree(t), "(doc \"s\" max 0.5 (leaf 1 Root span -0.25 0.5))");
}

TEST(TreeIoTest, QuotedIdsRoundTrip) {
  DiscourseTree t = LeftBranching(3, "we\"ird \\ id\nline");
  EXPECT_EQ(ParseTree(FormatTree(t)).doc_id, t.doc_id);
}

TEST(TreeIoTest, RejectsNonPartitioningChildren) {
  try {
    ParseTree("(doc \"b\" none 0 (span 1 3 Root span 0 1 (leaf 1 Nucleus span 0 1) "
              "(leaf 3 Satellite span 0 1)))");
    FAIL() << "expected a parse error";
  } catch (const TreeParseError& e) {
    EXPECT_NE(std::string(e.what()).find("do not partition"), std::string::npos) << e.what();
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(TreeIoTest, UnbalancedParenthesesReportPosition) {
  try {
    ParseTree("(doc \"b\" none 0\n(span 1 2 Root span 0 1 (leaf 1 Nucleus span 0 1)\n"
              "(leaf 2 Satellite span 0 1)");
    FAIL() << "expected a parse error";
  } catch (const TreeParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("unbalanced"), std::string::npos) << e.what();
  }
}

TEST(TreeIoTest, RejectsMalformedRecords) {
  const char* bad[] = {
      "(tree \"a\" none 0 (leaf 1 Root span 0 1))",                    // wrong keyword
      "(doc a none 0 (leaf 1 Root span 0 1))",                         // unquoted id
      "(doc \"a\" mean 0 (leaf 1 Root span 0 1))",                     // aggregation
      "(doc \"a\" none zero (leaf 1 Root span 0 1))",                  // number
      "(doc \"a\" none 0 (leaf 0 Root span 0 1))",                     // 0 index
      "(doc \"a\" none 0 (leaf 2 Root span 0 1))",                     // root must start at 1
      "(doc \"a\" none 0 (leaf 1 Nucleus span 0 1))",                  // root nuclearity
      "(doc \"a\" none 0 (span 1 2 Root span 0 1 (leaf 1 Root span 0 1) (leaf 2 Nucleus span 0 1)))",
      "(doc \"a\" none 0 (span 1 2 Root span 0 1 (leaf 1 Nucleus span 0 1) (leaf 2 Nucleus span 0 1)))",
      "(doc \"a\" none 0 (span 2 2 Root span 0 1 (leaf 2 Nucleus span 0 1) (leaf 2 Satellite span 0 1)))",
      "(doc \"a\" none 0 (node 1 Root span 0 1))",                     // node kind
      "(doc \"a\" none 0 (leaf 1 Root span 0 1)) extra",               // trailing junk
      "(doc \"a\" none 0 (leaf 1 Root span 0 1)",                      // truncated
      "",
  };
  for (const char* text : bad) EXPECT_THROW(ParseTree(text), DataError) << text;
}

TEST(TreeIoTest, WritingRequiresNuclearity) {
  synth::Rng rng(83);
  const auto doc = synth::RandomDocument(rng, "d", 4, 2);
  const DiscourseTree raw = SelectTree(BuildChart(doc, AggregationPolicy::Sum()), 0.0);
  EXPECT_THROW(FormatTree(raw), std::invalid_argument);
  EXPECT_NO_THROW(FormatTree(AssignNuclearity(raw)));
}

TEST(TreeIoPropertyTest, RandomTreesRoundTrip) {
  synth::Rng rng(89);
  std::stringstream buf;
  std::vector<DiscourseTree> trees;
  for (int i = 0; i < 300; ++i) {
    trees.push_back(synth::RandomTree(rng, "doc-" + std::to_string(i), 1 + i % 25));
    WriteTree(buf, trees.back());
  }
  const std::string first = buf.str();
  TreeReader reader(buf);
  DiscourseTree t;
  std::string second;
  for (const DiscourseTree& expected : trees) {
    ASSERT_TRUE(reader.Next(&t));
    EXPECT_EQ(t.doc_id, expected.doc_id);
    EXPECT_EQ(t.aggregation, expected.aggregation);
    EXPECT_TRUE(SameStructure(t.root, expected.root));
    EXPECT_TRUE(NumbersClose(t.root, expected.root));
    EXPECT_TRUE(ValidateTree(t).empty());
    second += FormatTree(t) + "\n";
  }
  EXPECT_FALSE(reader.Next(&t));
  // Re-serializing parsed records is a fixed point.
  EXPECT_EQ(first, second);
}

TEST(GoldCorpusTest, ReadsSpanSets) {
  const std::string path = std::string(RSTGEN_TEST_TMPDIR) + "/gold_corpus_test.trees";
  WriteTreeFile(path, {RightBranching(3, "a"), LeftBranching(4, "b")});
  const auto gold = ReadGoldCorpus(path);
  ASSERT_EQ(gold.size(), 2u);
  EXPECT_EQ(gold[0].doc_id, "a");
  EXPECT_EQ(gold[0].spans, (std::set<Span>{{0, 2}, {1, 2}}));
  EXPECT_EQ(gold[1].edu_count, 4);
  EXPECT_EQ(ReadGoldCorpus(path, true)[1].spans.size(), 7u);
  EXPECT_THROW(ReadGoldCorpus(path + ".missing"), DataError);
}

}  // namespace
}  // namespace rstgen
