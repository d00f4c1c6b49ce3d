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

#include "vrfr/estimators/saga.h"

namespace vrfr {

SagaState SagaInit(const FiniteSumOperator& op, const DenseVec& x0,
                   OracleCounter* counter) {
  SagaState state;
  state.table.resize(op.dim(), op.n());
  DenseVec gi;
  for (int i = 0; i < op.n(); ++i) {
    op.ComponentInto(i, x0, gi);
    state.table.col(i) = gi;
  }
  if (counter) counter->AddComponentEvals(op.n());
  state.table_mean = state.table.rowwise().sum() / static_cast<double>(op.n());
  return state;
}

DenseVec SagaEstimate(const SagaState& state, const FiniteSumOperator& op,
                      double gamma, const DenseVec& x_k, const DenseVec& x_km1,
                      std::span<const int> batch, OracleCounter* counter,
                      DenseMat* fresh) {
  if (batch.empty()) throw ConfigError("SagaEstimate: empty batch");
  const int b = static_cast<int>(batch.size());
  DenseVec sum_k = DenseVec::Zero(op.dim());
  DenseVec sum_km1 = DenseVec::Zero(op.dim());
  DenseVec sum_table = DenseVec::Zero(op.dim());
  if (fresh) fresh->resize(op.dim(), b);
  DenseVec gk, gkm1;
  for (int j = 0; j < b; ++j) {
    const int i = batch[static_cast<size_t>(j)];
    // Component() validates the index and point.
    gk = op.Component(i, x_k, counter);
    gkm1 = op.Component(i, x_km1, counter);
    sum_k += gk;
    sum_km1 += gkm1;
    sum_table += state.table.col(i);
    if (fresh) fresh->col(j) = gk;
  }
  const double inv_b = 1.0 / static_cast<double>(b);
  return (sum_k * inv_b - gamma * (sum_km1 * inv_b) -
          (1.0 - gamma) * (sum_table * inv_b)) +
         (1.0 - gamma) * state.table_mean;
}

void SagaTableUpdateFromValues(SagaState& state, std::span<const int> batch,
                               const DenseMat& fresh) {
  if (fresh.cols() != static_cast<Eigen::Index>(batch.size()) ||
      fresh.rows() != state.table.rows()) {
    throw DimensionError("SagaTableUpdateFromValues: value block shape");
  }
  const int n = static_cast<int>(state.table.cols());
  for (size_t j = 0; j < batch.size(); ++j) {
    const int i = batch[j];
    state.table_mean +=
        (fresh.col(static_cast<Eigen::Index>(j)) - state.table.col(i)) /
        static_cast<double>(n);
    state.table.col(i) = fresh.col(static_cast<Eigen::Index>(j));
    ++state.updates_since_sync;
  }
  if (state.updates_since_sync >= n) {
    state.table_mean = state.table.rowwise().sum() / static_cast<double>(n);
    state.updates_since_sync = 0;
  }
}

void SagaTableUpdate(SagaState& state, const FiniteSumOperator& op,
                     const DenseVec& x_k, std::span<const int> batch,
                     OracleCounter* counter) {
  DenseMat fresh(op.dim(), static_cast<Eigen::Index>(batch.size()));
  for (size_t j = 0; j < batch.size(); ++j) {
    fresh.col(static_cast<Eigen::Index>(j)) = op.Component(batch[j], x_k, counter);
  }
  SagaTableUpdateFromValues(state, batch, fresh);
}

}  // namespace vrfr
