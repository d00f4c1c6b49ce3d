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

#ifndef VRFR_VERIFY_DELTA_AUDIT_H_
#define VRFR_VERIFY_DELTA_AUDIT_H_

#include <cstdint>
#include <vector>

#include "vrfr/core/types.h"
#include "vrfr/estimators/constants.h"
#include "vrfr/estimators/estimator.h"
#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

struct DeltaAuditOptions {
  EstimatorKind kind = EstimatorKind::kLsvrg;  // kLsvrg or kSaga
  double gamma = 0.75;
  int batch_size = 1;
  double snapshot_prob = 0.5;  // loopless SVRG only
  int steps = 100;
  uint64_t seed = 0;
  // Path driver: VFR steps of size `eta` with the audited estimator, or,
  // when `jump_scale` > 0, independent Gaussian jumps of that scale.
  double eta = 0.1;
  double jump_scale = 0.0;
};

struct DeltaAuditReport {
  EstimatorConstants constants;
  // slack[k-1] = bound_k - E[Delta_k | state at k-1, x^k] for k = 1..steps.
  std::vector<double> slack;
  std::vector<double> delta;  // realized exact Delta_k, k = 0..steps
  double min_slack = 0.0;
  // Delta_0 under the initialization contract; must be exactly zero.
  double initial_delta = 0.0;
};

// Checks Delta_k <= (1 - rho) Delta_{k-1} + C U_k + C_hat U_{k-1} in
// conditional expectation along one simulated path, with
// U_k = (1/n) sum_i |G_i x^k - G_i x^{k-1}|^2 and U_0 = 0. The expectation
// over the snapshot coin or the table refresh is taken in closed form from
// per-index refresh probabilities; the realized transition is then sampled.
DeltaAuditReport AuditDeltaRecursion(const FiniteSumOperator& op,
                                     const DenseVec& x0,
                                     const DeltaAuditOptions& options);

}  // namespace vrfr

#endif  // VRFR_VERIFY_DELTA_AUDIT_H_
