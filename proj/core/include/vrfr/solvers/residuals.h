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

#ifndef VRFR_SOLVERS_RESIDUALS_H_
#define VRFR_SOLVERS_RESIDUALS_H_

#include "vrfr/core/types.h"
#include "vrfr/operators/finite_sum_operator.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

// Measurement helpers; none of them touch an oracle counter.

// Forward-backward residual (x - J_{eta T}(x - eta G x)) / eta. Zero exactly
// at solutions of 0 in Gx + Tx. A null `t` means T = 0, giving Gx.
DenseVec FbsResidual(const FiniteSumOperator& op, const MonotoneMap* t,
                     double eta, const DenseVec& x);

// |Gx + v| for a given element v of Tx (v may be empty for T = 0).
double OperatorResidualNorm(const FiniteSumOperator& op, const DenseVec& x,
                            const DenseVec& v);

}  // namespace vrfr

#endif  // VRFR_SOLVERS_RESIDUALS_H_
