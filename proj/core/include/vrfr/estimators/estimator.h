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

#ifndef VRFR_ESTIMATORS_ESTIMATOR_H_
#define VRFR_ESTIMATORS_ESTIMATOR_H_

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/rng.h"
#include "vrfr/core/types.h"
#include "vrfr/estimators/constants.h"
#include "vrfr/estimators/frq.h"
#include "vrfr/estimators/lsvrg.h"
#include "vrfr/estimators/saga.h"
#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

enum class EstimatorKind { kFullBatch, kLsvrg, kSaga, kSvrgDoubleLoop };

const char* EstimatorKindName(EstimatorKind kind);
// Accepts "full", "lsvrg" (alias "svrg"), "saga", "dsvrg".
EstimatorKind ParseEstimatorKind(std::string_view name);

// Stateful estimator of the forward-reflected quantity. One instance per run.
//
// Start() returns the initial estimate (1 - gamma) G x0 and performs the
// initialization evaluations. Next() must then be called with consecutive
// iterate pairs (x^k, x^{k-1}), k = 1, 2, ...; it returns the estimate for
// step k and advances the internal state with x^k (snapshot coin, table
// refresh or inner-loop counter).
class FrqEstimator {
 public:
  virtual ~FrqEstimator() = default;

  virtual EstimatorKind kind() const = 0;
  virtual DenseVec Start(const DenseVec& x0, OracleCounter* counter) = 0;
  virtual DenseVec Next(const DenseVec& x_k, const DenseVec& x_km1,
                        RngStream& rng, OracleCounter* counter) = 0;
  // Expected charged evaluations per Next() call.
  virtual double ExpectedChargePerStep() const = 0;
  // Variance-recursion constants; empty for the double-loop variant.
  virtual std::optional<EstimatorConstants> constants() const = 0;
};

// Batches of size n are the deterministic index set [0, n) rather than n
// i.i.d. draws, so full-batch runs do not depend on the seed.
std::vector<int> DrawBatch(RngStream& rng, int n, int b);

// Throws ConfigError for invalid gamma, batch size or probability.
std::unique_ptr<FrqEstimator> MakeEstimator(EstimatorKind kind,
                                            const FiniteSumOperator& op,
                                            const FrqConfig& config);

}  // namespace vrfr

#endif  // VRFR_ESTIMATORS_ESTIMATOR_H_
