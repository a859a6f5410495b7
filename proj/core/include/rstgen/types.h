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

#ifndef RSTGEN_TYPES_H_
#define RSTGEN_TYPES_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rstgen {

// One elementary discourse unit. Indices are 0-based and gap-free across a
// document; sentence ids are non-decreasing with the index.
struct Edu {
  int index = 0;
  std::string text;
  int sentence_id = 0;
};

// Scorer output for one EDU. Sentiment components are independent sigmoid
// outputs in (0,1) and are not required to sum to one.
struct EduScores {
  std::vector<double> sentiment_dist;
  double attention = 0.0;
};

struct ScoredDocument {
  std::string doc_id;
  std::vector<Edu> edus;
  std::vector<EduScores> scores;
  int gold_class = 0;
  int num_classes = 0;

  std::size_t size() const { return edus.size(); }

  // Sentence id per EDU, in document order.
  std::vector<int> sentence_ids() const;
};

// Returns one human-readable description per violated invariant; empty iff
// the document is well formed. Each entry names the offending field.
std::vector<std::string> ValidateDocument(const ScoredDocument& doc);

// Inclusive, 0-based EDU interval.
struct Span {
  int lo = 0;
  int hi = 0;

  int length() const { return hi - lo + 1; }
  bool is_unit() const { return lo == hi; }

  friend auto operator<=>(const Span&, const Span&) = default;
};

enum class Nuclearity { kNucleus, kSatellite };

std::string_view NuclearityName(Nuclearity n);

inline constexpr std::string_view kSpanRelation = "span";

struct DiscourseNode {
  Span span;
  double sentiment = 0.0;
  double attention = 0.0;
  // Absent on the root; set on both children of every binary split.
  std::optional<Nuclearity> nuclearity;
  std::string relation{kSpanRelation};
  // Empty for leaves, exactly two entries otherwise.
  std::vector<DiscourseNode> children;

  bool is_leaf() const { return children.empty(); }
  const DiscourseNode& left() const { return children[0]; }
  const DiscourseNode& right() const { return children[1]; }
};

enum class AggregationKind { kSum, kMax, kAvg };

std::string_view AggregationName(AggregationKind kind);
std::optional<AggregationKind> ParseAggregation(std::string_view name);

struct DiscourseTree {
  std::string doc_id;
  DiscourseNode root;
  // Absent for trees that were not produced by the chart search (baselines,
  // gold corpora).
  std::optional<AggregationKind> aggregation;
  double root_distance = 0.0;

  int edu_count() const { return root.span.hi - root.span.lo + 1; }
};

// Structural checks shared by the builders, readers and tests: spans are
// 0-based with root (0, n-1), splits are binary and adjacent, leaves
// enumerate EDUs left to right, and siblings carry one Nucleus and one
// Satellite when nuclearity is present.
std::vector<std::string> ValidateTree(const DiscourseTree& tree);

// Leaf spans in left-to-right order.
std::vector<Span> LeafSpans(const DiscourseNode& root);
std::size_t CountInternalNodes(const DiscourseNode& root);

// Structure equality: spans, nuclearity and relations, ignoring the numeric
// annotations.
bool SameStructure(const DiscourseNode& a, const DiscourseNode& b);

}  // namespace rstgen

#endif  // RSTGEN_TYPES_H_
