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

#ifndef VRFR_SOLVERS_LYAPUNOV_H_
#define VRFR_SOLVERS_LYAPUNOV_H_

#include "vrfr/core/types.h"
#include "vrfr/estimators/constants.h"

namespace vrfr {

// Snapshot needed to evaluate the potential at iteration k.
// `v_k` is empty for root-finding problems (T = 0).
struct LyapunovPoint {
  DenseVec x_k;
  DenseVec x_km1;
  DenseVec x_km2;
  DenseVec gx_km1;  // G x^{k-1}
  DenseVec v_k;
  double delta_km1 = 0.0;  // Delta_{k-1}; zero in full-batch mode
};

struct LyapunovParams {
  double gamma = 0.75;
  double eta = 0.0;
  double mu = 0.0;
  double lipschitz = 1.0;
  EstimatorConstants estimator;
};

// Base term
//   |x^k + gamma eta (G x^{k-1} + v^k) - x*|^2
//     + mu |x^k - x^{k-1} + gamma eta (G x^{k-1} + v^k)|^2  (with T),
//   |x^k + gamma eta G x^{k-1} - x*|^2 + mu |x^k - x^{k-1}|^2  (T = 0),
// plus eta^2 (1+mu)(1-rho)/rho Delta_{k-1}
//   + L^2 eta^2 C_hat (1+mu)/rho |x^{k-1} - x^{k-2}|^2.
// The result is non-negative.
double LyapunovValue(const LyapunovPoint& point, const DenseVec& x_star,
                     const LyapunovParams& params);

}  // namespace vrfr

#endif  // VRFR_SOLVERS_LYAPUNOV_H_
