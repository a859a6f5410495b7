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

#ifndef RSTGEN_CORPUS_STATS_H_
#define RSTGEN_CORPUS_STATS_H_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "rstgen/types.h"

namespace rstgen {

using Vocabulary = std::set<std::string, std::less<>>;

// Lowercased, whitespace-separated tokens of every EDU text.
Vocabulary BuildVocabulary(std::span<const ScoredDocument> docs);

struct CorpusStats {
  std::size_t doc_count = 0;
  double mean_edus_per_doc = 0.0;
  std::size_t vocab_size = 0;
};

// Throws std::invalid_argument for an empty corpus.
CorpusStats ComputeCorpusStats(std::span<const ScoredDocument> docs);

// |a ∩ b| / |a ∪ b|. Two empty vocabularies are rejected.
double VocabJaccard(const Vocabulary& a, const Vocabulary& b);

}  // namespace rstgen

#endif  // RSTGEN_CORPUS_STATS_H_
