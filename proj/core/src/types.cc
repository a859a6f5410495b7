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

#include "rstgen/types.h"

#include <cmath>

namespace rstgen {

std::vector<int> ScoredDocument::sentence_ids() const {
  std::vector<int> ids;
  ids.reserve(edus.size());
  for (const Edu& e : edus) ids.push_back(e.sentence_id);
  return ids;
}

namespace {

bool InOpenUnitInterval(double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; }

std::string At(std::string_view field, std::size_t i) {
  return std::string(field) + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<std::string> ValidateDocument(const ScoredDocument& doc) {
  std::vector<std::string> out;
  if (doc.edus.empty()) out.push_back("edus: document has no EDUs");
  if (doc.edus.size() != doc.scores.size()) {
    out.push_back("scores: " + std::to_string(doc.scores.size()) +
                  " score entries for " + std::to_string(doc.edus.size()) +
                  " EDUs");
  }
  if (doc.num_classes < 2) {
    out.push_back("num_classes: must be at least 2, got " +
                  std::to_string(doc.num_classes));
  }
  if (doc.gold_class < 0 || doc.gold_class >= doc.num_classes) {
    out.push_back("gold_class: " + std::to_string(doc.gold_class) +
                  " outside [0, " + std::to_string(doc.num_classes) + ")");
  }

  for (std::size_t i = 0; i < doc.edus.size(); ++i) {
    const Edu& e = doc.edus[i];
    if (e.index != static_cast<int>(i)) {
      out.push_back(At("edus", i) + ".index: expected " + std::to_string(i) +
                    ", got " + std::to_string(e.index));
    }
    if (e.sentence_id < 0) {
      out.push_back(At("edus", i) + ".sentence_id: negative");
    }
    if (i > 0 && e.sentence_id < doc.edus[i - 1].sentence_id) {
      out.push_back(At("edus", i) + ".sentence_id: sentence_id not non-decreasing");
    }
  }

  for (std::size_t i = 0; i < doc.scores.size(); ++i) {
    const EduScores& s = doc.scores[i];
    if (doc.num_classes >= 2 &&
        s.sentiment_dist.size() != static_cast<std::size_t>(doc.num_classes)) {
      out.push_back(At("scores", i) + ".sentiment_dist: length " +
                    std::to_string(s.sentiment_dist.size()) + ", expected " +
                    std::to_string(doc.num_classes));
    }
    for (std::size_t c = 0; c < s.sentiment_dist.size(); ++c) {
      if (!InOpenUnitInterval(s.sentiment_dist[c])) {
        out.push_back(At("scores", i) + ".sentiment_dist[" + std::to_string(c) +
                      "]: not in (0,1)");
      }
    }
    if (!InOpenUnitInterval(s.attention)) {
      out.push_back(At("scores", i) + ".attention: not in (0,1)");
    }
  }
  return out;
}

std::string_view NuclearityName(Nuclearity n) {
  return n == Nuclearity::kNucleus ? "Nucleus" : "Satellite";
}

std::string_view AggregationName(AggregationKind kind) {
  switch (kind) {
    case AggregationKind::kSum: return "sum";
    case AggregationKind::kMax: return "max";
    case AggregationKind::kAvg: return "avg";
  }
  return "unknown";
}

std::optional<AggregationKind> ParseAggregation(std::string_view name) {
  if (name == "sum") return AggregationKind::kSum;
  if (name == "max") return AggregationKind::kMax;
  if (name == "avg") return AggregationKind::kAvg;
  return std::nullopt;
}

namespace {

void Describe(const Span& s, std::string* out) {
  *out += "(" + std::to_string(s.lo) + "," + std::to_string(s.hi) + ")";
}

void CheckNode(const DiscourseNode& node, bool is_root, int* next_leaf,
               std::vector<std::string>* out) {
  std::string where = "node ";
  Describe(node.span, &where);
  if (node.span.lo > node.span.hi) {
    out->push_back(where + ": lo > hi");
    return;
  }
  if (is_root && node.nuclearity.has_value()) {
    out->push_back(where + ": root carries a nuclearity");
  }
  if (node.is_leaf()) {
    if (!node.span.is_unit()) {
      out->push_back(where + ": leaf spans more than one EDU");
    } else if (node.span.lo != *next_leaf) {
      out->push_back(where + ": leaf out of order, expected EDU " +
                     std::to_string(*next_leaf));
    }
    *next_leaf = node.span.hi + 1;
    return;
  }
  if (node.children.size() != 2) {
    out->push_back(where + ": internal node with " +
                   std::to_string(node.children.size()) + " children");
    return;
  }
  const DiscourseNode& l = node.left();
  const DiscourseNode& r = node.right();
  if (l.span.lo != node.span.lo || r.span.hi != node.span.hi ||
      l.span.hi + 1 != r.span.lo) {
    out->push_back(where + ": children do not partition the span");
  }
  if (l.nuclearity.has_value() != r.nuclearity.has_value()) {
    out->push_back(where + ": nuclearity set on only one child");
  } else if (l.nuclearity && *l.nuclearity == *r.nuclearity) {
    out->push_back(where + ": siblings share nuclearity " +
                   std::string(NuclearityName(*l.nuclearity)));
  }
  CheckNode(l, false, next_leaf, out);
  CheckNode(r, false, next_leaf, out);
}

}  // namespace

std::vector<std::string> ValidateTree(const DiscourseTree& tree) {
  std::vector<std::string> out;
  if (tree.root.span.lo != 0) out.push_back("root span does not start at EDU 0");
  int next_leaf = 0;
  CheckNode(tree.root, true, &next_leaf, &out);
  if (out.empty() && next_leaf != tree.root.span.hi + 1) {
    out.push_back("leaves do not cover the root span");
  }
  return out;
}

namespace {

void CollectLeaves(const DiscourseNode& node, std::vector<Span>* out) {
  if (node.is_leaf()) {
    out->push_back(node.span);
    return;
  }
  for (const DiscourseNode& c : node.children) CollectLeaves(c, out);
}

}  // namespace

std::vector<Span> LeafSpans(const DiscourseNode& root) {
  std::vector<Span> out;
  CollectLeaves(root, &out);
  return out;
}

std::size_t CountInternalNodes(const DiscourseNode& root) {
  if (root.is_leaf()) return 0;
  std::size_t n = 1;
  for (const DiscourseNode& c : root.children) n += CountInternalNodes(c);
  return n;
}

bool SameStructure(const DiscourseNode& a, const DiscourseNode& b) {
  if (a.span != b.span || a.nuclearity != b.nuclearity ||
      a.relation != b.relation || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!SameStructure(a.children[i], b.children[i])) return false;
  }
  return true;
}

}  // namespace rstgen
