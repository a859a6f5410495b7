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

#include <algorithm>
#include <atomic>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "rstgen/score_io.h"
#include "rstgen/tree_io.h"

namespace rstgen {
namespace {

// Formats every document of the batch into `lines`. Workers claim indices
// from a shared counter; results land at their input position.
void GenerateBatch(const std::vector<ScoredDocument>& batch, const GenerateOptions& options,
                   std::vector<std::string>* lines) {
  lines->assign(batch.size(), {});
  std::vector<std::exception_ptr> errors(batch.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < batch.size(); i = next++) {
      try {
        (*lines)[i] = FormatTree(Generate(batch[i], options.policy, options.builder));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs =
      std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(batch.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

PipelineReport GenerateCorpus(std::istream& scores, std::ostream& out,
                              const GenerateOptions& options) {
  ScoreReader reader(scores, ScoreReadOptions{options.builder.max_edus});
  PipelineReport report;
  std::vector<ScoredDocument> batch;
  std::vector<std::string> lines;
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);
  bool more = true;
  while (more) {
    batch.clear();
    ScoredDocument doc;
    while (batch.size() < batch_size && (more = reader.Next(&doc))) batch.push_back(std::move(doc));
    if (batch.empty()) break;
    GenerateBatch(batch, options, &lines);
    for (const std::string& line : lines) out << line << '\n';
    report.docs_written += lines.size();
  }
  report.skipped_ids = reader.skipped_ids();
  return report;
}

std::optional<BaselineKind> ParseBaselineKind(std::string_view name) {
  if (name == "right") return BaselineKind::kRight;
  if (name == "left") return BaselineKind::kLeft;
  if (name == "hier-right") return BaselineKind::kHierRight;
  if (name == "hier-left") return BaselineKind::kHierLeft;
  return std::nullopt;
}

DiscourseTree MakeBaseline(const ScoredDocument& doc, BaselineKind kind) {
  const int n = static_cast<int>(doc.size());
  switch (kind) {
    case BaselineKind::kRight: return RightBranching(n, doc.doc_id);
    case BaselineKind::kLeft: return LeftBranching(n, doc.doc_id);
    case BaselineKind::kHierRight:
      return HierarchicalBranching(doc.sentence_ids(), Branching::kRight, Branching::kRight,
                                   doc.doc_id);
    case BaselineKind::kHierLeft:
      return HierarchicalBranching(doc.sentence_ids(), Branching::kLeft, Branching::kLeft,
                                   doc.doc_id);
  }
  throw std::invalid_argument("unknown baseline kind");
}

PipelineReport BaselineCorpus(std::istream& scores, std::ostream& out, BaselineKind kind) {
  ScoreReader reader(scores, ScoreReadOptions{0});
  PipelineReport report;
  ScoredDocument doc;
  while (reader.Next(&doc)) {
    WriteTree(out, MakeBaseline(doc, kind));
    ++report.docs_written;
  }
  return report;
}

SpanCounts EvaluateCorpus(const std::vector<SpanSet>& pred, const std::vector<SpanSet>& gold) {
  std::unordered_map<std::string, const SpanSet*> by_id;
  for (const SpanSet& p : pred) {
    if (!by_id.emplace(p.doc_id, &p).second) {
      throw std::invalid_argument("duplicate prediction for document '" + p.doc_id + "'");
    }
  }
  std::unordered_map<std::string, bool> seen_gold;
  SpanCounts total;
  for (const SpanSet& g : gold) {
    if (!seen_gold.emplace(g.doc_id, true).second) {
      throw std::invalid_argument("duplicate gold tree for document '" + g.doc_id + "'");
    }
    auto it = by_id.find(g.doc_id);
    if (it == by_id.end()) {
      throw std::invalid_argument("no prediction for gold document '" + g.doc_id + "'");
    }
    total += CompareSpans(*it->second, g);
  }
  if (pred.size() != gold.size()) {
    for (const SpanSet& p : pred) {
      if (!seen_gold.count(p.doc_id)) {
        throw std::invalid_argument("prediction for document '" + p.doc_id + "' has no gold tree");
      }
    }
  }
  return total;
}

}  // namespace rstgen
