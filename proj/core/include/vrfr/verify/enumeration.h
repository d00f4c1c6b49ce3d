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

#ifndef VRFR_VERIFY_ENUMERATION_H_
#define VRFR_VERIFY_ENUMERATION_H_

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>

#include "vrfr/core/types.h"
#include "vrfr/estimators/lsvrg.h"
#include "vrfr/estimators/saga.h"
#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

struct EnumerationBudget {
  int64_t max_outcomes = 1'000'000;
};

// Raised when n^b exceeds the budget; nothing is evaluated in that case.
class BudgetExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// n^b, or BudgetExceeded.
int64_t OutcomeCount(int n, int b, const EnumerationBudget& budget = {});

// Visits all n^b ordered with-replacement batches in lexicographic order.
void ForEachBatch(int n, int b, const EnumerationBudget& budget,
                  const std::function<void(std::span<const int>)>& visit);

// Estimator value as a function of the sampled batch, all other state fixed.
using BatchEstimate = std::function<DenseVec(std::span<const int>)>;

BatchEstimate LsvrgBatchEstimate(const LsvrgState& state,
                                 const FiniteSumOperator& op, double gamma,
                                 const DenseVec& x_k, const DenseVec& x_km1);
BatchEstimate SagaBatchEstimate(const SagaState& state,
                                const FiniteSumOperator& op, double gamma,
                                const DenseVec& x_k, const DenseVec& x_km1);

// Exact mean of the estimator over all batches (each with weight n^{-b}).
DenseVec BruteExpectation(int n, int b, const BatchEstimate& estimate,
                          const EnumerationBudget& budget = {});
// Exact E|estimate - target|^2 over all batches.
double BruteVariance(int n, int b, const BatchEstimate& estimate,
                     const DenseVec& target,
                     const EnumerationBudget& budget = {});

// Per-component reference values R_i: G_i w for loopless SVRG, the stored
// table entries for SAGA. Columns are components.
DenseMat LsvrgReference(const LsvrgState& state, const FiniteSumOperator& op);
const DenseMat& SagaReference(const SagaState& state);

// Residual terms X_i = G_i x^k - gamma G_i x^{k-1} - (1 - gamma) R_i.
DenseMat ResidualTerms(const FiniteSumOperator& op, double gamma,
                       const DenseVec& x_k, const DenseVec& x_km1,
                       const DenseMat& reference);

// Delta_k = (1/(n b)) sum_i |X_i|^2.
double DeltaExact(const FiniteSumOperator& op, double gamma,
                  const DenseVec& x_k, const DenseVec& x_km1,
                  const DenseMat& reference, int b);
// (1/b) |mean_i X_i|^2, subtracted in the tightened variance bound.
double VarianceTightening(const FiniteSumOperator& op, double gamma,
                          const DenseVec& x_k, const DenseVec& x_km1,
                          const DenseMat& reference, int b);

}  // namespace vrfr

#endif  // VRFR_VERIFY_ENUMERATION_H_
