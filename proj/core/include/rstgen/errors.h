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

#ifndef RSTGEN_ERRORS_H_
#define RSTGEN_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rstgen {

// Input data that is malformed or violates a schema or type invariant.
// Precondition violations by callers raise std::invalid_argument instead.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A document has more EDUs than the tree builder accepts.
class DocumentTooLargeError : public DataError {
 public:
  DocumentTooLargeError(std::size_t edus, std::size_t limit)
      : DataError("document has " + std::to_string(edus) +
                  " EDUs; only documents with at most " +
                  std::to_string(limit) + " EDUs are processed"),
        edus_(edus),
        limit_(limit) {}

  std::size_t edus() const { return edus_; }
  std::size_t limit() const { return limit_; }

 private:
  std::size_t edus_;
  std::size_t limit_;
};

// The chart for a document grew past its candidate budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rstgen

#endif  // RSTGEN_ERRORS_H_
