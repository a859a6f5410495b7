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

#ifndef RSTGEN_BASELINES_H_
#define RSTGEN_BASELINES_H_

#include <span>
#include <string>

#include "rstgen/types.h"

namespace rstgen {

// Structural baselines. Their nodes carry placeholder annotations (attention
// 1.0, sentiment 0, left child Nucleus) so they serialize like generated
// trees; evaluation only reads spans.

enum class Branching { kLeft, kRight };

// Internal spans (0,n-1), (1,n-1), ..., (n-2,n-1). Throws
// std::invalid_argument for n < 1.
DiscourseTree RightBranching(int n, std::string doc_id = {});

// Internal spans (0,n-1), (0,n-2), ..., (0,1).
DiscourseTree LeftBranching(int n, std::string doc_id = {});

// One `within`-branching subtree per sentence, joined at document level in
// `across`-branching order. sentence_ids must be non-decreasing.
DiscourseTree HierarchicalBranching(std::span<const int> sentence_ids,
                                    Branching within, Branching across,
                                    std::string doc_id = {});

}  // namespace rstgen

#endif  // RSTGEN_BASELINES_H_
