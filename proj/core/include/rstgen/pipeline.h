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

#ifndef RSTGEN_PIPELINE_H_
#define RSTGEN_PIPELINE_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rstgen/baselines.h"
#include "rstgen/metrics.h"
#include "rstgen/tree_builder.h"

namespace rstgen {

struct GenerateOptions {
  AggregationPolicy policy;
  BuilderOptions builder;
  unsigned jobs = 1;
  // Documents handed to the worker pool at a time.
  std::size_t batch_size = 1024;
};

struct PipelineReport {
  std::size_t docs_written = 0;
  std::vector<std::string> skipped_ids;
};

// Streams score records from `scores`, generates one tree per document on
// `jobs` workers and writes the trees to `out` in input order. Documents
// longer than builder.max_edus are skipped. The first failing document (in
// input order) aborts the run with its exception.
PipelineReport GenerateCorpus(std::istream& scores, std::ostream& out,
                              const GenerateOptions& options);

enum class BaselineKind { kRight, kLeft, kHierRight, kHierLeft };

std::optional<BaselineKind> ParseBaselineKind(std::string_view name);
DiscourseTree MakeBaseline(const ScoredDocument& doc, BaselineKind kind);

// Baseline trees for every document in `scores`; no EDU limit applies.
PipelineReport BaselineCorpus(std::istream& scores, std::ostream& out, BaselineKind kind);

// Pairs predictions with gold trees by document id and pools span counts.
// Throws std::invalid_argument on duplicate ids, a gold document without a
// prediction, or a prediction without gold.
SpanCounts EvaluateCorpus(const std::vector<SpanSet>& pred, const std::vector<SpanSet>& gold);

}  // namespace rstgen

#endif  // RSTGEN_PIPELINE_H_
