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

#include "rstgen/corpus_stats.h"

#include <cctype>
#include <stdexcept>

namespace rstgen {

Vocabulary BuildVocabulary(std::span<const ScoredDocument> docs) {
  Vocabulary vocab;
  std::string token;
  for (const ScoredDocument& d : docs) {
    for (const Edu& e : d.edus) {
      for (char c : e.text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isspace(u)) {
          if (!token.empty()) vocab.insert(std::move(token));
          token.clear();
        } else {
          token.push_back(static_cast<char>(std::tolower(u)));
        }
      }
      if (!token.empty()) vocab.insert(std::move(token));
      token.clear();
    }
  }
  return vocab;
}

CorpusStats ComputeCorpusStats(std::span<const ScoredDocument> docs) {
  if (docs.empty()) throw std::invalid_argument("corpus statistics need at least one document");
  CorpusStats s;
  s.doc_count = docs.size();
  std::size_t edus = 0;
  for (const ScoredDocument& d : docs) edus += d.size();
  s.mean_edus_per_doc = static_cast<double>(edus) / static_cast<double>(docs.size());
  s.vocab_size = BuildVocabulary(docs).size();
  return s;
}

double VocabJaccard(const Vocabulary& a, const Vocabulary& b) {
  if (a.empty() && b.empty()) throw std::invalid_argument("both vocabularies are empty");
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

}  // namespace rstgen
