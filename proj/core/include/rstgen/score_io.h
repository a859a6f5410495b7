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

#ifndef RSTGEN_SCORE_IO_H_
#define RSTGEN_SCORE_IO_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rstgen/errors.h"
#include "rstgen/types.h"

namespace rstgen {

// Newline-delimited JSON score records, one document per line:
//
//   {"doc_id": "...", "num_classes": 5, "gold_class": 3,
//    "edus": [{"text": "...", "sentence_id": 0,
//              "sentiment_dist": [0.1, ...], "attention": 0.4}, ...]}
//
// EDU indices are implied by position. Blank lines are ignored.

class ScoreParseError : public DataError {
 public:
  ScoreParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ScoreReadOptions {
  // Documents with more EDUs are skipped and counted. Zero disables the
  // limit.
  std::size_t max_edus = 20;
};

class ScoreReader {
 public:
  explicit ScoreReader(std::istream& in, ScoreReadOptions options = {})
      : in_(in), options_(options) {}

  // Yields the next validated document within the size limit. Returns false
  // at end of input; throws ScoreParseError on malformed or invalid records.
  bool Next(ScoredDocument* doc);

  std::size_t skipped() const { return skipped_ids_.size(); }
  const std::vector<std::string>& skipped_ids() const { return skipped_ids_; }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  ScoreReadOptions options_;
  std::size_t line_ = 0;
  std::vector<std::string> skipped_ids_;
  std::string buffer_;
};

// Parses and validates one record. line is used in error messages only.
ScoredDocument ParseScoreRecord(const std::string& json, std::size_t line = 1);
std::string FormatScoreRecord(const ScoredDocument& doc);

struct ScoreFile {
  std::vector<ScoredDocument> docs;
  std::vector<std::string> skipped_ids;
};

ScoreFile ReadScoreFile(const std::string& path, ScoreReadOptions options = {});
void WriteScoreFile(const std::string& path, const std::vector<ScoredDocument>& docs);

}  // namespace rstgen

#endif  // RSTGEN_SCORE_IO_H_
