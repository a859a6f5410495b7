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

#ifndef RSTGEN_TREE_BUILDER_H_
#define RSTGEN_TREE_BUILDER_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rstgen/types.h"

namespace rstgen {

// How a parent's attention is derived from its children. The damping factor
// only applies to kSum.
struct AggregationPolicy {
  AggregationKind kind = AggregationKind::kSum;
  double lambda = 0.01;

  static AggregationPolicy Sum(double lambda = 0.01) { return {AggregationKind::kSum, lambda}; }
  static AggregationPolicy Max() { return {AggregationKind::kMax, 0.0}; }
  static AggregationPolicy Avg() { return {AggregationKind::kAvg, 0.0}; }
};

struct BuilderOptions {
  // Candidates in one cell whose sentiment and attention both differ by at
  // most this much from an earlier candidate are dropped. Zero keeps every
  // distinct signature.
  double eps_dedup = 1e-9;
  std::size_t max_edus = 20;
  // Total number of candidates across the chart.
  std::size_t candidate_budget = 5'000'000;
};

// A (sentiment, attention) signature for one span together with the split
// and child candidates that produced it.
struct Candidate {
  static constexpr std::uint32_t kNone = UINT32_MAX;

  double sentiment = 0.0;
  double attention = 0.0;
  int split = -1;                  // right edge of the left child; -1 for leaves
  std::uint32_t left_ref = kNone;  // index into cell (lo, split)
  std::uint32_t right_ref = kNone; // index into cell (split + 1, hi)

  bool is_leaf() const { return split < 0; }
};

double AggregateSentiment(const Candidate& left, const Candidate& right);
double AggregateAttention(const Candidate& left, const Candidate& right,
                          const AggregationPolicy& policy);

// Sentence-boundary constraint. A span is admissible if it lies inside one
// sentence or consists of complete sentences.
class SentenceMap {
 public:
  explicit SentenceMap(std::vector<int> sentence_ids);

  std::size_t size() const { return ids_.size(); }
  int sentence_of(int edu) const { return ids_[edu]; }
  bool starts_sentence(int edu) const { return edu == 0 || ids_[edu - 1] != ids_[edu]; }
  bool ends_sentence(int edu) const {
    return edu + 1 == static_cast<int>(ids_.size()) || ids_[edu + 1] != ids_[edu];
  }

 private:
  std::vector<int> ids_;
};

bool AdmissibleSpan(int lo, int hi, const SentenceMap& sentences);
bool AdmissibleSplit(int lo, int k, int hi, const SentenceMap& sentences);

// Candidate sets for every admissible span of one document, filled bottom-up.
class Chart {
 public:
  Chart(std::string doc_id, const SentenceMap& sentences, AggregationPolicy policy);

  int edu_count() const { return n_; }
  const std::string& doc_id() const { return doc_id_; }
  const AggregationPolicy& policy() const { return policy_; }

  bool has_cell(int lo, int hi) const { return admissible_[Index(lo, hi)]; }
  std::span<const Candidate> cell(int lo, int hi) const { return cells_[Index(lo, hi)]; }
  std::span<const Candidate> root() const { return cell(0, n_ - 1); }
  std::size_t total_candidates() const { return total_; }

 private:
  friend Chart BuildChart(const ScoredDocument&, const AggregationPolicy&,
                          const BuilderOptions&);

  std::size_t Index(int lo, int hi) const {
    return static_cast<std::size_t>(lo) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(hi);
  }

  std::string doc_id_;
  int n_;
  AggregationPolicy policy_;
  std::vector<bool> admissible_;
  std::vector<std::vector<Candidate>> cells_;
  std::size_t total_ = 0;
};

// Fills the chart for a validated document. Throws DocumentTooLargeError
// past options.max_edus, DataError for invalid documents and ResourceError
// when the candidate budget is exhausted.
Chart BuildChart(const ScoredDocument& doc, const AggregationPolicy& policy,
                 const BuilderOptions& options = {});

// Index of the candidate whose sentiment is closest to gold_polarity; the
// earliest wins ties. Throws std::invalid_argument for an empty range.
std::size_t SelectCandidate(std::span<const Candidate> candidates, double gold_polarity);

// Root candidate closest to gold_polarity, earliest on ties, materialized as
// a full tree. Nuclearity is left unset.
DiscourseTree SelectTree(const Chart& chart, double gold_polarity);

// Left child is the Nucleus iff its attention is at least the right child's.
// Every relation becomes "span".
DiscourseTree AssignNuclearity(DiscourseTree tree);

// Validate, build the chart, select against the gold polarity and assign
// nuclearity.
DiscourseTree Generate(const ScoredDocument& doc, const AggregationPolicy& policy,
                       const BuilderOptions& options = {});

}  // namespace rstgen

#endif  // RSTGEN_TREE_BUILDER_H_
