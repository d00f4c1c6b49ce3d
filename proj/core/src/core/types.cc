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

#include "vrfr/core/types.h"

#include <cmath>

namespace vrfr {

void CheckSameDim(const DenseVec& a, const DenseVec& b, const char* context) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(context) + ": dimension " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

double Dot(const DenseVec& a, const DenseVec& b) {
  CheckSameDim(a, b, "Dot");
  return a.dot(b);
}

double Norm(const DenseVec& a) { return a.norm(); }

DenseVec Axpy(double alpha, const DenseVec& x, const DenseVec& y) {
  CheckSameDim(x, y, "Axpy");
  return alpha * x + y;
}

DenseVec Scale(double alpha, const DenseVec& x) { return alpha * x; }

DenseVec VecFromValues(std::span<const double> values) {
  if (values.empty()) throw DimensionError("VecFromValues: empty input");
  DenseVec v(static_cast<Eigen::Index>(values.size()));
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw NumericError("VecFromValues: non-finite entry at index " +
                         std::to_string(i));
    }
    v[static_cast<Eigen::Index>(i)] = values[i];
  }
  return v;
}

void CheckFinite(const DenseVec& v, const char* context) {
  if (!v.allFinite()) {
    throw NumericError(std::string(context) + ": non-finite entry");
  }
}

}  // namespace vrfr
