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

#ifndef RSTGEN_TREE_IO_H_
#define RSTGEN_TREE_IO_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rstgen/errors.h"
#include "rstgen/metrics.h"
#include "rstgen/types.h"

namespace rstgen {

// Bracketed tree corpus. One record per document, written on one line:
//
//   (doc "ID" AGG DIST NODE)
//   NODE := (span LO HI NUC REL SENT ATTN NODE NODE)
//         | (leaf IDX NUC REL SENT ATTN)
//
// AGG is sum, max, avg or none. NUC is Nucleus, Satellite or Root (root
// node only). Indices are 1-based and inclusive; reals are rendered with 9
// significant digits. The reader accepts any whitespace layout.

class TreeParseError : public DataError {
 public:
  TreeParseError(std::size_t line, std::size_t column, const std::string& what)
      : DataError("line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

std::string FormatTree(const DiscourseTree& tree);
void WriteTree(std::ostream& out, const DiscourseTree& tree);

namespace detail {
struct TreeCursor {
  std::istream* in;
  std::size_t line = 1;
  std::size_t column = 1;
};
}  // namespace detail

class TreeReader {
 public:
  explicit TreeReader(std::istream& in) : cursor_{&in} {}

  // Reads the next record. Returns false at a clean end of input; throws
  // TreeParseError on malformed or structurally invalid records.
  bool Next(DiscourseTree* tree);

 private:
  detail::TreeCursor cursor_;
};

DiscourseTree ParseTree(const std::string& text);

std::vector<DiscourseTree> ReadTreeFile(const std::string& path);
void WriteTreeFile(const std::string& path, const std::vector<DiscourseTree>& trees);

// Gold structures for evaluation; same format as generated trees.
std::vector<SpanSet> ReadGoldCorpus(const std::string& path, bool include_leaves = false);

}  // namespace rstgen

#endif  // RSTGEN_TREE_IO_H_
