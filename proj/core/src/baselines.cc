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

#include "rstgen/baselines.h"

#include <stdexcept>
#include <utility>
#include <vector>

namespace rstgen {
namespace {

DiscourseNode Leaf(int i) {
  DiscourseNode n;
  n.span = {i, i};
  n.attention = 1.0;
  return n;
}

DiscourseNode Join(DiscourseNode left, DiscourseNode right) {
  DiscourseNode n;
  n.span = {left.span.lo, right.span.hi};
  n.attention = 1.0;
  left.nuclearity = Nuclearity::kNucleus;
  right.nuclearity = Nuclearity::kSatellite;
  n.children.reserve(2);
  n.children.push_back(std::move(left));
  n.children.push_back(std::move(right));
  return n;
}

// Folds adjacent subtrees into a single chain.
DiscourseNode Chain(std::vector<DiscourseNode> parts, Branching dir) {
  if (dir == Branching::kRight) {
    DiscourseNode acc = std::move(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
      acc = Join(std::move(parts[i]), std::move(acc));
    }
    return acc;
  }
  DiscourseNode acc = std::move(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = Join(std::move(acc), std::move(parts[i]));
  }
  return acc;
}

DiscourseNode ChainRange(int lo, int hi, Branching dir) {
  std::vector<DiscourseNode> leaves;
  leaves.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int i = lo; i <= hi; ++i) leaves.push_back(Leaf(i));
  return Chain(std::move(leaves), dir);
}

DiscourseTree Wrap(DiscourseNode root, std::string doc_id) {
  DiscourseTree t;
  t.doc_id = std::move(doc_id);
  t.root = std::move(root);
  t.root.nuclearity.reset();
  return t;
}

void RequireEdus(int n) {
  if (n < 1) throw std::invalid_argument("baseline tree needs at least one EDU");
}

}  // namespace

DiscourseTree RightBranching(int n, std::string doc_id) {
  RequireEdus(n);
  return Wrap(ChainRange(0, n - 1, Branching::kRight), std::move(doc_id));
}

DiscourseTree LeftBranching(int n, std::string doc_id) {
  RequireEdus(n);
  return Wrap(ChainRange(0, n - 1, Branching::kLeft), std::move(doc_id));
}

DiscourseTree HierarchicalBranching(std::span<const int> sentence_ids,
                                    Branching within, Branching across,
                                    std::string doc_id) {
  const int n = static_cast<int>(sentence_ids.size());
  RequireEdus(n);
  std::vector<DiscourseNode> sentences;
  int start = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n || sentence_ids[i] != sentence_ids[i - 1]) {
      if (i < n && sentence_ids[i] < sentence_ids[i - 1]) {
        throw std::invalid_argument("sentence ids must be non-decreasing");
      }
      sentences.push_back(ChainRange(start, i - 1, within));
      start = i;
    }
  }
  return Wrap(Chain(std::move(sentences), across), std::move(doc_id));
}

}  // namespace rstgen
