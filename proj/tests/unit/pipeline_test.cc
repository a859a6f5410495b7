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

#include "rstgen/pipeline.h"

#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "oracle/synth.h"
#include "rstgen/errors.h"
#include "rstgen/score_io.h"
#include "rstgen/tree_io.h"

namespace rstgen {
namespace {

std::string ScoreCorpus(std::uint64_t seed, int docs) {
  synth::Rng rng(seed);
  std::ostringstream out;
  for (int i = 0; i < docs; ++i) {
    const int n = 1 + static_cast<int>(rng() % 22);
    out << FormatScoreRecord(synth::RandomDocument(rng, "doc" + std::to_string(i), n, 4)) << "\n";
  }
  return out.str();
}

std::string RunPipeline(const std::string& scores, const GenerateOptions& opts, PipelineReport* report = nullptr) {
  std::istringstream in(scores);
  std::ostringstream out;
  const PipelineReport r = GenerateCorpus(in, out, opts);
  if (report) *report = r;
  return out.str();
}

TEST(GenerateCorpusTest, PreservesInputOrderAndSkipsLongDocuments) {
  const std::string scores = ScoreCorpus(113, 60);
  GenerateOptions opts;
  opts.jobs = 4;
  opts.batch_size = 7;
  PipelineReport report;
  std::istringstream trees(RunPipeline(scores, opts, &report));

  std::istringstream in(scores);
  ScoreReader reader(in, ScoreReadOptions{0});
  ScoredDocument doc;
  TreeReader tr(trees);
  DiscourseTree t;
  std::size_t kept = 0, skipped = 0;
  while (reader.Next(&doc)) {
    if (doc.size() > 20) {
      ++skipped;
      continue;
    }
    ASSERT_TRUE(tr.Next(&t));
    EXPECT_EQ(t.doc_id, doc.doc_id);
    EXPECT_EQ(t.edu_count(), static_cast<int>(doc.size()));
    ++kept;
  }
  EXPECT_FALSE(tr.Next(&t));
  EXPECT_EQ(report.docs_written, kept);
  EXPECT_EQ(report.skipped_ids.size(), skipped);
  EXPECT_GT(skipped, 0u);
}

TEST(GenerateCorpusTest, OutputIndependentOfWorkerCount) {
  const std::string scores = ScoreCorpus(127, 40);
  GenerateOptions serial;
  serial.jobs = 1;
  GenerateOptions parallel;
  parallel.jobs = 8;
  parallel.batch_size = 5;
  const std::string a = RunPipeline(scores, serial);
  EXPECT_EQ(a, RunPipeline(scores, parallel));
  EXPECT_EQ(a, RunPipeline(scores, serial));
}

TEST(GenerateCorpusTest, FirstFailingDocumentAborts) {
  synth::Rng rng(131);
  std::ostringstream scores;
  scores << FormatScoreRecord(synth::RandomDocument(rng, "ok", 4, 2)) << "\n";
  scores << FormatScoreRecord(synth::RandomDocument(rng, "heavy", std::vector<int>(14, 0))) << "\n";
  GenerateOptions opts;
  opts.jobs = 2;
  opts.builder.candidate_budget = 10'000;
  EXPECT_THROW(RunPipeline(scores.str(), opts), ResourceError);
  EXPECT_THROW(RunPipeline("{\"doc_id\": 3}\n", opts), DataError);
}

TEST(BaselineCorpusTest, WritesOneTreePerDocumentWithoutLimit) {
  const std::string scores = ScoreCorpus(137, 30);
  std::istringstream in(scores);
  std::ostringstream out;
  const PipelineReport r = BaselineCorpus(in, out, BaselineKind::kHierRight);
  EXPECT_EQ(r.docs_written, 30u);
  std::istringstream trees(out.str());
  TreeReader tr(trees);
  DiscourseTree t;
  std::size_t n = 0;
  while (tr.Next(&t)) {
    EXPECT_FALSE(t.aggregation.has_value());
    ++n;
  }
  EXPECT_EQ(n, 30u);
}

TEST(BaselineKindTest, Parses) {
  EXPECT_EQ(ParseBaselineKind("hier-left"), BaselineKind::kHierLeft);
  EXPECT_EQ(ParseBaselineKind("right"), BaselineKind::kRight);
  EXPECT_FALSE(ParseBaselineKind("random").has_value());
}

TEST(EvaluateCorpusTest, PairsByDocumentId) {
  const std::vector<SpanSet> gold{ExtractSpans(RightBranching(3, "a")), ExtractSpans(RightBranching(4, "b"))};
  const std::vector<SpanSet> pred{ExtractSpans(LeftBranching(4, "b")), ExtractSpans(LeftBranching(3, "a"))};
  const SpanCounts c = EvaluateCorpus(pred, gold);
  EXPECT_EQ(c.matched, 2u);
  EXPECT_EQ(c.gold, 5u);
}

TEST(EvaluateCorpusTest, RejectsMismatchedCorpora) {
  const std::vector<SpanSet> gold{ExtractSpans(RightBranching(3, "a"))};
  EXPECT_THROW(EvaluateCorpus({ExtractSpans(RightBranching(3, "z"))}, gold), std::invalid_argument);
  EXPECT_THROW(EvaluateCorpus({ExtractSpans(RightBranching(3, "a")), ExtractSpans(RightBranching(3, "b"))}, gold),
               std::invalid_argument);
  EXPECT_THROW(EvaluateCorpus({ExtractSpans(RightBranching(3, "a")), ExtractSpans(RightBranching(3, "a"))}, gold),
               std::invalid_argument);
  EXPECT_THROW(EvaluateCorpus({ExtractSpans(RightBranching(4, "a"))}, gold), std::invalid_argument);
}

}  // namespace
}  // namespace rstgen
