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

#ifndef RSTGEN_METRICS_H_
#define RSTGEN_METRICS_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rstgen/types.h"

namespace rstgen {

// Constituent spans of one tree. By default only internal nodes (hi > lo)
// are included; unit spans are added when a tree is extracted with
// include_leaves, for comparison with evaluators that count them.
struct SpanSet {
  std::string doc_id;
  int edu_count = 0;
  std::set<Span> spans;
};

SpanSet ExtractSpans(const DiscourseTree& tree, bool include_leaves = false);

// Pooled counts for micro averaging. Per-document counts from parallel
// workers combine with operator+=.
struct SpanCounts {
  std::size_t matched = 0;
  std::size_t gold = 0;
  std::size_t predicted = 0;

  SpanCounts& operator+=(const SpanCounts& o) {
    matched += o.matched;
    gold += o.gold;
    predicted += o.predicted;
    return *this;
  }
  // Throws std::invalid_argument when gold == 0.
  double precision() const;
};

// Throws std::invalid_argument when doc ids or EDU counts differ.
SpanCounts CompareSpans(const SpanSet& pred, const SpanSet& gold);

// sum_i |pred_i ∩ gold_i| / sum_i |gold_i|.
double MicroPrecision(std::span<const std::pair<SpanSet, SpanSet>> pairs);

}  // namespace rstgen

#endif  // RSTGEN_METRICS_H_
