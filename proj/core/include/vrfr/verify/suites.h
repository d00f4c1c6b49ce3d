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

#ifndef VRFR_VERIFY_SUITES_H_
#define VRFR_VERIFY_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vrfr/estimators/estimator.h"
#include "vrfr/operators/affine_operator.h"
#include "vrfr/problems/cohypomonotone.h"
#include "vrfr/verify/enumeration.h"

namespace vrfr {

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json details;
};

struct CertificationOptions {
  int states = 50;
  int dim = 3;
  int audit_steps = 100;
  uint64_t seed = 0;
  double unbiased_tol = 1e-12;
  double variance_tol = 1e-12;
  double audit_tol = 1e-10;
  EnumerationBudget budget;
};

// Random affine finite sum with nonsymmetric standard normal components.
AffineOperator RandomAffineOperator(int n, int dim, uint64_t seed);

// For `states` random (gamma, p, x^k, x^{k-1}, snapshot or stale table):
// exact unbiasedness, the tightened variance bound, and a Delta-recursion
// audit along a path started at that state (VFR-driven for even states,
// Gaussian jumps for odd ones).
CheckResult CertifyEstimator(EstimatorKind kind, int n, int b,
                             const CertificationOptions& options = {});

// Weak-Minty certificate of the two-dimensional instance at kappa.
CheckResult CertifyTwoByTwo(const CoHypomonotoneInstance& inst, double kappa);

nlohmann::json ChecksToJson(const std::vector<CheckResult>& checks);

}  // namespace vrfr

#endif  // VRFR_VERIFY_SUITES_H_
