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

#ifndef RSTGEN_POLARITY_H_
#define RSTGEN_POLARITY_H_

#include <cstddef>
#include <span>
#include <vector>

namespace rstgen {

// Class weights spread uniformly over [-1, 1]: the lowest class maps to -1,
// the highest to +1.
class PolarityCoefficients {
 public:
  // Throws std::invalid_argument for fewer than two classes.
  static PolarityCoefficients Make(int num_classes);

  std::size_t size() const { return coeffs_.size(); }
  double operator[](std::size_t c) const { return coeffs_[c]; }
  std::span<const double> values() const { return coeffs_; }

 private:
  explicit PolarityCoefficients(std::vector<double> coeffs)
      : coeffs_(std::move(coeffs)) {}

  std::vector<double> coeffs_;
};

// Scalar polarity of a (possibly un-normalized) class distribution:
// sum_c dist[c] * coeffs[c]. No clamping is applied.
double PolarityOfDistribution(std::span<const double> dist,
                              const PolarityCoefficients& coeffs);

// Polarity of a one-hot gold label, i.e. coeffs[gold_class].
double PolarityOfGold(int gold_class, const PolarityCoefficients& coeffs);

}  // namespace rstgen

#endif  // RSTGEN_POLARITY_H_
