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

#include "vrfr/estimators/lsvrg.h"

namespace vrfr {

LsvrgState LsvrgInit(const FiniteSumOperator& op, const DenseVec& x0,
                     OracleCounter* counter) {
  return LsvrgState{x0, op.Full(x0, counter)};
}

DenseVec LsvrgEstimate(const LsvrgState& state, const FiniteSumOperator& op,
                       double gamma, const DenseVec& x_k, const DenseVec& x_km1,
                       std::span<const int> batch, OracleCounter* counter) {
  const DenseVec gb_w = op.Minibatch(batch, state.snapshot, counter);
  const DenseVec gb_k = op.Minibatch(batch, x_k, counter);
  const DenseVec gb_km1 = op.Minibatch(batch, x_km1, counter);
  return (1.0 - gamma) * (state.snapshot_value - gb_w) + gb_k - gamma * gb_km1;
}

void LsvrgSnapshotUpdate(LsvrgState& state, const FiniteSumOperator& op,
                         const DenseVec& x_k, bool coin,
                         OracleCounter* counter) {
  if (!coin) return;
  state.snapshot = x_k;
  state.snapshot_value = op.Full(x_k, counter);
}

}  // namespace vrfr
