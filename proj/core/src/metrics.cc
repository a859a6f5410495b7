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

#include "rstgen/metrics.h"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace rstgen {
namespace {

void PostOrder(const DiscourseNode& node, bool include_leaves, std::set<Span>* out) {
  for (const DiscourseNode& c : node.children) PostOrder(c, include_leaves, out);
  if (!node.is_leaf() || include_leaves) out->insert(node.span);
}

}  // namespace

SpanSet ExtractSpans(const DiscourseTree& tree, bool include_leaves) {
  SpanSet s;
  s.doc_id = tree.doc_id;
  s.edu_count = tree.edu_count();
  PostOrder(tree.root, include_leaves, &s.spans);
  return s;
}

double SpanCounts::precision() const {
  if (gold == 0) throw std::invalid_argument("no gold spans to score against");
  return static_cast<double>(matched) / static_cast<double>(gold);
}

SpanCounts CompareSpans(const SpanSet& pred, const SpanSet& gold) {
  if (pred.doc_id != gold.doc_id) {
    throw std::invalid_argument("prediction '" + pred.doc_id +
                                "' paired with gold '" + gold.doc_id + "'");
  }
  if (pred.edu_count != gold.edu_count) {
    throw std::invalid_argument("document '" + gold.doc_id + "': prediction has " +
                                std::to_string(pred.edu_count) + " EDUs, gold has " +
                                std::to_string(gold.edu_count));
  }
  SpanCounts c;
  std::vector<Span> common;
  std::set_intersection(pred.spans.begin(), pred.spans.end(), gold.spans.begin(),
                        gold.spans.end(), std::back_inserter(common));
  c.matched = common.size();
  c.gold = gold.spans.size();
  c.predicted = pred.spans.size();
  return c;
}

double MicroPrecision(std::span<const std::pair<SpanSet, SpanSet>> pairs) {
  SpanCounts total;
  for (const auto& [pred, gold] : pairs) total += CompareSpans(pred, gold);
  return total.precision();
}

}  // namespace rstgen
