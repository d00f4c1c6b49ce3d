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

#ifndef VRFR_OPERATORS_SADDLE_OPERATOR_H_
#define VRFR_OPERATORS_SADDLE_OPERATOR_H_

#include <functional>

#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

// Gradient oracle of one coupling term H_i(u, v): fills grad_u and grad_v.
using SaddleGradient =
    std::function<void(int i, const DenseVec& u, const DenseVec& v,
                       DenseVec& grad_u, DenseVec& grad_v)>;

// G_i [u; v] = [grad_u H_i(u, v); -grad_v H_i(u, v)], with u in R^p1 and
// v in R^p2 stacked into one vector of size p1 + p2.
class SaddleOperator : public FiniteSumOperator {
 public:
  SaddleOperator(int n, int p1, int p2, SaddleGradient gradient);

  void ComponentInto(int i, const DenseVec& x, DenseVec& out) const override;

  int p1() const { return p1_; }
  int p2() const { return p2_; }

 private:
  int p1_;
  int p2_;
  SaddleGradient gradient_;
};

}  // namespace vrfr

#endif  // VRFR_OPERATORS_SADDLE_OPERATOR_H_
