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

#ifndef VRFR_ESTIMATORS_CONSTANTS_H_
#define VRFR_ESTIMATORS_CONSTANTS_H_

namespace vrfr {

// Constants of the variance recursion
//   Delta_k <= (1 - rho) Delta_{k-1} + C U_k + C_hat U_{k-1},
// where U_k is the mean squared component increment between consecutive
// iterates. rho lies in (0, 1]; C and C_hat are non-negative.
struct EstimatorConstants {
  double rho = 1.0;
  double c = 0.0;
  double c_hat = 0.0;

  // (C + C_hat) / rho.
  double Lambda() const { return (c + c_hat) / rho; }
};

// Loopless SVRG with batch b and snapshot probability p in (0, 1]:
//   rho = p/2, C = (4 - 6p + 3p^2)/(b p), C_hat = 2 gamma^2 (2 - 3p + p^2)/(b p).
EstimatorConstants LsvrgConstants(double gamma, int b, double p);

// SAGA with n components and batch b in [1, n]:
//   rho = b/(2n), C = [2(n-b)(2n+b) + b^2]/(n b^2),
//   C_hat = 2(n-b)(2n+b) gamma^2/(n b^2).
EstimatorConstants SagaConstants(double gamma, int n, int b);

// Exact evaluation: rho = 1, C = C_hat = 0.
EstimatorConstants FullBatchConstants();

// Conditions under which the closed-form step-size lower bounds hold:
// b p^2 <= 1 for loopless SVRG, 1 <= b <= n^{2/3} for SAGA.
bool LsvrgPresetCondition(int b, double p);
bool SagaPresetCondition(int n, int b);

}  // namespace vrfr

#endif  // VRFR_ESTIMATORS_CONSTANTS_H_
