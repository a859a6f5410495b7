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

#include "rstgen/tree_builder.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "rstgen/errors.h"
#include "rstgen/polarity.h"

namespace rstgen {

double AggregateSentiment(const Candidate& left, const Candidate& right) {
  const double total = left.attention + right.attention;
  if (!(total > 0.0)) {
    throw std::invalid_argument("sentiment aggregation needs positive total attention");
  }
  return (left.sentiment * left.attention + right.sentiment * right.attention) / total;
}

double AggregateAttention(const Candidate& left, const Candidate& right,
                          const AggregationPolicy& policy) {
  switch (policy.kind) {
    case AggregationKind::kSum:
      return (left.attention + right.attention) * (1.0 - policy.lambda);
    case AggregationKind::kMax:
      return std::max(left.attention, right.attention);
    case AggregationKind::kAvg:
      return (left.attention + right.attention) / 2.0;
  }
  throw std::invalid_argument("unknown aggregation kind");
}

SentenceMap::SentenceMap(std::vector<int> sentence_ids) : ids_(std::move(sentence_ids)) {}

bool AdmissibleSpan(int lo, int hi, const SentenceMap& sentences) {
  if (sentences.sentence_of(lo) == sentences.sentence_of(hi)) return true;
  return sentences.starts_sentence(lo) && sentences.ends_sentence(hi);
}

bool AdmissibleSplit(int lo, int k, int hi, const SentenceMap& sentences) {
  return AdmissibleSpan(lo, k, sentences) && AdmissibleSpan(k + 1, hi, sentences) &&
         AdmissibleSpan(lo, hi, sentences);
}

Chart::Chart(std::string doc_id, const SentenceMap& sentences, AggregationPolicy policy)
    : doc_id_(std::move(doc_id)),
      n_(static_cast<int>(sentences.size())),
      policy_(policy),
      admissible_(sentences.size() * sentences.size(), false),
      cells_(sentences.size() * sentences.size()) {
  for (int lo = 0; lo < n_; ++lo) {
    for (int hi = lo; hi < n_; ++hi) {
      admissible_[Index(lo, hi)] = AdmissibleSpan(lo, hi, sentences);
    }
  }
}

namespace {

// Open-addressing map from a 128-bit key to a 32-bit value. Clear() is O(1):
// slots are live only when their stamp matches the current generation.
class FlatMap {
 public:
  using Key = std::pair<std::uint64_t, std::uint64_t>;

  FlatMap() { Rehash(1024); }

  std::uint32_t* Find(const Key& k) {
    for (std::size_t i = Hash(k) & mask_;; i = (i + 1) & mask_) {
      Slot& slot = slots_[i];
      if (slot.stamp != generation_) return nullptr;
      if (slot.key == k) return &slot.value;
    }
  }

  // Returns the value slot for k and whether it was newly inserted.
  std::pair<std::uint32_t*, bool> Insert(const Key& k, std::uint32_t value) {
    if (2 * (size_ + 1) > slots_.size()) Rehash(2 * slots_.size());
    for (std::size_t i = Hash(k) & mask_;; i = (i + 1) & mask_) {
      Slot& slot = slots_[i];
      if (slot.stamp != generation_) {
        slot = {k, value, generation_};
        ++size_;
        return {&slot.value, true};
      }
      if (slot.key == k) return {&slot.value, false};
    }
  }

  void Clear() {
    size_ = 0;
    if (++generation_ == 0) {
      for (Slot& slot : slots_) slot.stamp = 0;
      generation_ = 1;
    }
  }

 private:
  struct Slot {
    Key key;
    std::uint32_t value;
    std::uint32_t stamp;
  };

  static std::size_t Hash(const Key& k) {
    std::uint64_t h = k.first * 0x9E3779B97F4A7C15ULL;
    h ^= (k.second + 0x7F4A7C159E3779B9ULL) * 0xC2B2AE3D27D4EB4FULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

  void Rehash(std::size_t capacity) {
    std::vector<Slot> old = std::move(slots_);
    const std::uint32_t old_generation = generation_;
    slots_.assign(capacity, Slot{{0, 0}, 0, 0});
    mask_ = capacity - 1;
    generation_ = 1;
    size_ = 0;
    for (const Slot& slot : old) {
      if (slot.stamp == old_generation) Insert(slot.key, slot.value);
    }
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
  std::uint32_t generation_ = 1;
};

// Membership test for signatures already kept in the cell being filled.
// Exact mode hashes bit patterns. Tolerance mode buckets signatures on a grid
// of 2*eps cells and checks the 3x3 neighbourhood; coordinates too large for
// the grid fall back to a range scan over an ordered set.
class SignatureIndex {
 public:
  explicit SignatureIndex(double eps) : eps_(eps), width_(2.0 * eps) {}

  // Returns true and records the signature if no kept signature lies within
  // eps in both coordinates.
  bool InsertIfNovel(double s, double a) {
    if (eps_ == 0.0) return table_.Insert(BitKey(s, a), 0).second;
    const double qs = std::floor(s / width_);
    const double qa = std::floor(a / width_);
    if (!(std::abs(qs) < kGridLimit && std::abs(qa) < kGridLimit) || !ordered_.empty()) {
      if (LinearNear(s, a) || OrderedNear(s, a)) return false;
      ordered_.emplace(s, a);
      return true;
    }
    const auto cs = static_cast<std::int64_t>(qs);
    const auto ca = static_cast<std::int64_t>(qa);
    if (GridNear(s, a, cs, ca)) return false;
    const auto [head, fresh] = table_.Insert(CellKey(cs, ca), kEnd);
    entries_.push_back({s, a, *head});
    *head = static_cast<std::uint32_t>(entries_.size() - 1);
    return true;
  }

  void Clear() {
    table_.Clear();
    entries_.clear();
    ordered_.clear();
  }

 private:
  static constexpr double kGridLimit = 4.0e18;
  static constexpr std::uint32_t kEnd = UINT32_MAX;

  struct Entry {
    double s;
    double a;
    std::uint32_t next;
  };

  static FlatMap::Key BitKey(double s, double a) {
    // Adding 0.0 folds -0.0 into +0.0.
    return {std::bit_cast<std::uint64_t>(s + 0.0), std::bit_cast<std::uint64_t>(a + 0.0)};
  }

  static FlatMap::Key CellKey(std::int64_t cs, std::int64_t ca) {
    return {static_cast<std::uint64_t>(cs), static_cast<std::uint64_t>(ca)};
  }

  bool GridNear(double s, double a, std::int64_t cs, std::int64_t ca) {
    for (std::int64_t ds = -1; ds <= 1; ++ds) {
      for (std::int64_t da = -1; da <= 1; ++da) {
        const std::uint32_t* head = table_.Find(CellKey(cs + ds, ca + da));
        if (!head) continue;
        for (std::uint32_t e = *head; e != kEnd; e = entries_[e].next) {
          if (std::abs(entries_[e].s - s) <= eps_ && std::abs(entries_[e].a - a) <= eps_) return true;
        }
      }
    }
    return false;
  }

  // Entries gridded before the index switched to the ordered fallback.
  bool LinearNear(double s, double a) const {
    for (const Entry& e : entries_) {
      if (std::abs(e.s - s) <= eps_ && std::abs(e.a - a) <= eps_) return true;
    }
    return false;
  }

  bool OrderedNear(double s, double a) const {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    // Widen the scan bounds by one ulp; the exact test below decides.
    const double s_lo = std::nextafter(s - eps_, -kInf);
    const double s_hi = std::nextafter(s + eps_, kInf);
    const double a_lo = std::nextafter(a - eps_, -kInf);
    auto it = ordered_.lower_bound({s_lo, -kInf});
    while (it != ordered_.end() && it->first <= s_hi) {
      const double group = it->first;
      if (std::abs(group - s) <= eps_) {
        for (auto jt = ordered_.lower_bound({group, a_lo});
             jt != ordered_.end() && jt->first == group; ++jt) {
          const double da = jt->second - a;
          if (std::abs(da) <= eps_) return true;
          if (da > eps_) break;
        }
      }
      it = ordered_.upper_bound({group, kInf});
    }
    return false;
  }

  double eps_;
  double width_;
  FlatMap table_;
  std::vector<Entry> entries_;
  std::set<std::pair<double, double>> ordered_;
};

}  // namespace

Chart BuildChart(const ScoredDocument& doc, const AggregationPolicy& policy,
                 const BuilderOptions& options) {
  if (doc.size() > options.max_edus) {
    throw DocumentTooLargeError(doc.size(), options.max_edus);
  }
  if (auto violations = ValidateDocument(doc); !violations.empty()) {
    throw DataError("document '" + doc.doc_id + "': " + violations.front());
  }
  if (!(options.eps_dedup >= 0.0) || !std::isfinite(options.eps_dedup)) {
    throw std::invalid_argument("eps_dedup must be a finite non-negative value");
  }
  if (policy.kind == AggregationKind::kSum &&
      !(policy.lambda >= 0.0 && policy.lambda < 1.0)) {
    throw std::invalid_argument("lambda must lie in [0, 1)");
  }

  const SentenceMap sentences(doc.sentence_ids());
  Chart chart(doc.doc_id, sentences, policy);
  const int n = chart.n_;
  const auto coeffs = PolarityCoefficients::Make(doc.num_classes);

  for (int i = 0; i < n; ++i) {
    Candidate leaf;
    leaf.sentiment = PolarityOfDistribution(doc.scores[i].sentiment_dist, coeffs);
    leaf.attention = doc.scores[i].attention;
    chart.cells_[chart.Index(i, i)].push_back(leaf);
  }
  chart.total_ = static_cast<std::size_t>(n);

  SignatureIndex seen(options.eps_dedup);
  for (int len = 2; len <= n; ++len) {
    for (int lo = 0; lo + len - 1 < n; ++lo) {
      const int hi = lo + len - 1;
      if (!chart.has_cell(lo, hi)) continue;
      std::vector<Candidate>& out = chart.cells_[chart.Index(lo, hi)];
      seen.Clear();
      for (int k = lo; k < hi; ++k) {
        if (!chart.has_cell(lo, k) || !chart.has_cell(k + 1, hi)) continue;
        const std::vector<Candidate>& left = chart.cells_[chart.Index(lo, k)];
        const std::vector<Candidate>& right = chart.cells_[chart.Index(k + 1, hi)];
        for (std::uint32_t li = 0; li < left.size(); ++li) {
          for (std::uint32_t ri = 0; ri < right.size(); ++ri) {
            Candidate c;
            c.sentiment = AggregateSentiment(left[li], right[ri]);
            c.attention = AggregateAttention(left[li], right[ri], policy);
            if (!seen.InsertIfNovel(c.sentiment, c.attention)) continue;
            if (chart.total_ >= options.candidate_budget) {
              throw ResourceError("document '" + doc.doc_id +
                                  "' exceeds the chart budget of " +
                                  std::to_string(options.candidate_budget) +
                                  " candidates");
            }
            c.split = k;
            c.left_ref = li;
            c.right_ref = ri;
            out.push_back(c);
            ++chart.total_;
          }
        }
      }
    }
  }

  if (chart.root().empty()) {
    // Sentence-aligned right branching is always admissible.
    throw std::logic_error("no admissible tree for document '" + doc.doc_id + "'");
  }
  return chart;
}

namespace {

DiscourseNode Materialize(const Chart& chart, int lo, int hi, std::uint32_t ref) {
  const Candidate& c = chart.cell(lo, hi)[ref];
  DiscourseNode node;
  node.span = {lo, hi};
  node.sentiment = c.sentiment;
  node.attention = c.attention;
  if (!c.is_leaf()) {
    node.children.reserve(2);
    node.children.push_back(Materialize(chart, lo, c.split, c.left_ref));
    node.children.push_back(Materialize(chart, c.split + 1, hi, c.right_ref));
  }
  return node;
}

void LabelChildren(DiscourseNode& node) {
  node.relation = std::string(kSpanRelation);
  if (node.is_leaf()) return;
  DiscourseNode& l = node.children[0];
  DiscourseNode& r = node.children[1];
  const bool left_nucleus = l.attention >= r.attention;
  l.nuclearity = left_nucleus ? Nuclearity::kNucleus : Nuclearity::kSatellite;
  r.nuclearity = left_nucleus ? Nuclearity::kSatellite : Nuclearity::kNucleus;
  LabelChildren(l);
  LabelChildren(r);
}

}  // namespace

std::size_t SelectCandidate(std::span<const Candidate> candidates, double gold_polarity) {
  if (candidates.empty()) throw std::invalid_argument("no candidates to select from");
  std::size_t best = 0;
  double best_distance = std::abs(candidates[0].sentiment - gold_polarity);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double d = std::abs(candidates[i].sentiment - gold_polarity);
    if (d < best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

DiscourseTree SelectTree(const Chart& chart, double gold_polarity) {
  if (chart.edu_count() == 0 || chart.root().empty()) {
    throw std::invalid_argument("cannot select a tree from an empty chart");
  }
  const auto root = chart.root();
  const auto best = static_cast<std::uint32_t>(SelectCandidate(root, gold_polarity));
  DiscourseTree tree;
  tree.doc_id = chart.doc_id();
  tree.aggregation = chart.policy().kind;
  tree.root = Materialize(chart, 0, chart.edu_count() - 1, best);
  tree.root_distance = std::abs(root[best].sentiment - gold_polarity);
  return tree;
}

DiscourseTree AssignNuclearity(DiscourseTree tree) {
  tree.root.nuclearity.reset();
  LabelChildren(tree.root);
  return tree;
}

DiscourseTree Generate(const ScoredDocument& doc, const AggregationPolicy& policy,
                       const BuilderOptions& options) {
  const Chart chart = BuildChart(doc, policy, options);
  const auto coeffs = PolarityCoefficients::Make(doc.num_classes);
  return AssignNuclearity(SelectTree(chart, PolarityOfGold(doc.gold_class, coeffs)));
}

}  // namespace rstgen
