// Copyright 2026 The vrfr Authors
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

#include "vrfr/resolvents/prox.h"

#include <algorithm>
#include <functional>
#include <vector>

namespace vrfr {

DenseVec ProjectSimplex(const DenseVec& y) {
  if (y.size() == 0) throw DimensionError("ProjectSimplex: empty input");
  std::vector<double> sorted(y.data(), y.data() + y.size());
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());

  // Largest k with sorted[k-1] > (sum_{j<k} sorted[j] - 1) / k.
  double prefix = 0.0;
  double theta = 0.0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    prefix += sorted[k];
    const double candidate = (prefix - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] > candidate) theta = candidate;
  }
  return (y.array() - theta).max(0.0).matrix();
}

DenseVec ProjectBox(const DenseVec& y, double radius) {
  if (!(radius > 0.0)) throw ConfigError("ProjectBox: radius must be > 0");
  return y.cwiseMax(-radius).cwiseMin(radius);
}

DenseVec SoftThreshold(const DenseVec& y, double threshold) {
  if (!(threshold >= 0.0)) {
    throw ConfigError("SoftThreshold: threshold must be >= 0");
  }
  return (y.array().abs() - threshold).max(0.0).matrix().cwiseProduct(
      y.array().sign().matrix());
}

}  // namespace vrfr
