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

#include "vrfr/operators/saddle_operator.h"

#include <utility>

namespace vrfr {

SaddleOperator::SaddleOperator(int n, int p1, int p2, SaddleGradient gradient)
    : FiniteSumOperator(n, p1 + p2),
      p1_(p1),
      p2_(p2),
      gradient_(std::move(gradient)) {
  if (p1 < 1 || p2 < 1) throw ConfigError("SaddleOperator: empty block");
  if (!gradient_) throw ConfigError("SaddleOperator: missing gradient");
}

void SaddleOperator::ComponentInto(int i, const DenseVec& x,
                                   DenseVec& out) const {
  const DenseVec u = x.head(p1_);
  const DenseVec v = x.tail(p2_);
  DenseVec grad_u(p1_), grad_v(p2_);
  gradient_(i, u, v, grad_u, grad_v);
  if (grad_u.size() != p1_ || grad_v.size() != p2_) {
    throw DimensionError("SaddleOperator: gradient block has wrong size");
  }
  out.resize(dim());
  out.head(p1_) = grad_u;
  out.tail(p2_) = -grad_v;
}

}  // namespace vrfr
