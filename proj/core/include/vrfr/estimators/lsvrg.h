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

#ifndef VRFR_ESTIMATORS_LSVRG_H_
#define VRFR_ESTIMATORS_LSVRG_H_

#include <span>

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/types.h"
#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

// Snapshot w and its cached full value G w, always refreshed together.
struct LsvrgState {
  DenseVec snapshot;
  DenseVec snapshot_value;
};

// w = x0 and G w (n evaluations).
LsvrgState LsvrgInit(const FiniteSumOperator& op, const DenseVec& x0,
                     OracleCounter* counter);

// (1 - gamma)(G w - G_B w) + G_B x_k - gamma G_B x_km1.
// Three mini-batch evaluations of size |batch|.
DenseVec LsvrgEstimate(const LsvrgState& state, const FiniteSumOperator& op,
                       double gamma, const DenseVec& x_k, const DenseVec& x_km1,
                       std::span<const int> batch, OracleCounter* counter);

// On `coin`, w <- x_k and G w recomputed (n evaluations); else no-op.
void LsvrgSnapshotUpdate(LsvrgState& state, const FiniteSumOperator& op,
                         const DenseVec& x_k, bool coin,
                         OracleCounter* counter);

}  // namespace vrfr

#endif  // VRFR_ESTIMATORS_LSVRG_H_
