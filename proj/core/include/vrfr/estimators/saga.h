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

#ifndef VRFR_ESTIMATORS_SAGA_H_
#define VRFR_ESTIMATORS_SAGA_H_

#include <span>

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/types.h"
#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

// Table of stored component values (column i holds the entry for G_i) and
// its running mean. The mean is recomputed from scratch once at least n
// entries have been replaced since the last resynchronization, which bounds
// accumulated rounding drift.
struct SagaState {
  DenseMat table;  // dim x n
  DenseVec table_mean;
  int updates_since_sync = 0;
};

// Entry i = G_i x0 (n evaluations).
SagaState SagaInit(const FiniteSumOperator& op, const DenseVec& x0,
                   OracleCounter* counter);

// [G_B x_k - gamma G_B x_km1 - (1 - gamma) T_B] + (1 - gamma) mean(T), where
// T_B averages the table over the batch with multiplicity (no oracle cost).
// Performs 2|batch| evaluations. When `fresh` is non-null it receives the
// per-index values G_i x_k (dim x |batch|, batch order) for table reuse.
DenseVec SagaEstimate(const SagaState& state, const FiniteSumOperator& op,
                      double gamma, const DenseVec& x_k, const DenseVec& x_km1,
                      std::span<const int> batch, OracleCounter* counter,
                      DenseMat* fresh = nullptr);

// Entry i <- G_i x_k for every i in batch (duplicates idempotent).
// Evaluates |batch| components.
void SagaTableUpdate(SagaState& state, const FiniteSumOperator& op,
                     const DenseVec& x_k, std::span<const int> batch,
                     OracleCounter* counter);

// Same update from values already computed by SagaEstimate.
void SagaTableUpdateFromValues(SagaState& state, std::span<const int> batch,
                               const DenseMat& fresh);

}  // namespace vrfr

#endif  // VRFR_ESTIMATORS_SAGA_H_
