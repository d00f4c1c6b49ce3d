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

#include "vrfr/operators/finite_sum_operator.h"

#include <string>

namespace vrfr {

FiniteSumOperator::FiniteSumOperator(int n, int dim) : n_(n), dim_(dim) {
  if (n < 1 || dim < 1) {
    throw ConfigError("FiniteSumOperator: need n >= 1 and dim >= 1");
  }
}

void FiniteSumOperator::CheckIndex(int i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("component index " + std::to_string(i) +
                            " outside [0, " + std::to_string(n_) + ")");
  }
}

void FiniteSumOperator::CheckPoint(const DenseVec& x) const {
  if (x.size() != dim_) {
    throw DimensionError("operator of dimension " + std::to_string(dim_) +
                         " applied to a vector of size " +
                         std::to_string(x.size()));
  }
}

DenseVec FiniteSumOperator::MeanUncounted(const DenseVec& x) const {
  CheckPoint(x);
  DenseVec sum = DenseVec::Zero(dim_);
  DenseVec gi;
  for (int i = 0; i < n_; ++i) {
    ComponentInto(i, x, gi);
    sum += gi;
  }
  return sum / static_cast<double>(n_);
}

DenseVec FiniteSumOperator::Component(int i, const DenseVec& x,
                                      OracleCounter* counter) const {
  CheckIndex(i);
  CheckPoint(x);
  DenseVec out;
  ComponentInto(i, x, out);
  if (counter) counter->AddComponentEvals(1);
  return out;
}

DenseVec FiniteSumOperator::Minibatch(std::span<const int> batch,
                                      const DenseVec& x,
                                      OracleCounter* counter) const {
  if (batch.empty()) throw ConfigError("Minibatch: empty batch");
  if (IsIdentityBatch(batch, n_)) return Full(x, counter);
  CheckPoint(x);
  DenseVec sum = DenseVec::Zero(dim_);
  DenseVec gi;
  for (int i : batch) {
    CheckIndex(i);
    ComponentInto(i, x, gi);
    sum += gi;
  }
  if (counter) counter->AddComponentEvals(static_cast<int64_t>(batch.size()));
  return sum / static_cast<double>(batch.size());
}

DenseVec FiniteSumOperator::Full(const DenseVec& x,
                                 OracleCounter* counter) const {
  DenseVec g = MeanUncounted(x);
  if (counter) counter->AddComponentEvals(n_);
  return g;
}

bool IsIdentityBatch(std::span<const int> batch, int n) {
  if (static_cast<int>(batch.size()) != n) return false;
  for (int i = 0; i < n; ++i) {
    if (batch[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

}  // namespace vrfr
