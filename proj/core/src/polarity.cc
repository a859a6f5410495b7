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

#include "rstgen/polarity.h"

#include <stdexcept>
#include <string>

namespace rstgen {

PolarityCoefficients PolarityCoefficients::Make(int num_classes) {
  if (num_classes < 2) {
    throw std::invalid_argument(
        "polarity scale needs at least 2 classes, got " +
        std::to_string(num_classes));
  }
  std::vector<double> coeffs(static_cast<std::size_t>(num_classes));
  const double last = num_classes - 1;
  for (int c = 0; c < num_classes; ++c) {
    // Written as (2c - last) / last so the endpoints and the midpoint are
    // exact.
    coeffs[c] = (2.0 * c - last) / last;
  }
  return PolarityCoefficients(std::move(coeffs));
}

double PolarityOfDistribution(std::span<const double> dist,
                              const PolarityCoefficients& coeffs) {
  if (dist.size() != coeffs.size()) {
    throw std::invalid_argument("distribution has " +
                                std::to_string(dist.size()) +
                                " classes, coefficients have " +
                                std::to_string(coeffs.size()));
  }
  double pol = 0.0;
  for (std::size_t c = 0; c < dist.size(); ++c) pol += dist[c] * coeffs[c];
  return pol;
}

double PolarityOfGold(int gold_class, const PolarityCoefficients& coeffs) {
  if (gold_class < 0 || static_cast<std::size_t>(gold_class) >= coeffs.size()) {
    throw std::invalid_argument("gold class " + std::to_string(gold_class) +
                                " out of range for " +
                                std::to_string(coeffs.size()) + " classes");
  }
  return coeffs[static_cast<std::size_t>(gold_class)];
}

}  // namespace rstgen
