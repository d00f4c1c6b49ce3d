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

#include "vrfr/solvers/lyapunov.h"

namespace vrfr {

double LyapunovValue(const LyapunovPoint& p, const DenseVec& x_star,
                     const LyapunovParams& params) {
  CheckSameDim(p.x_k, x_star, "LyapunovValue");
  CheckSameDim(p.x_k, p.x_km1, "LyapunovValue");
  CheckSameDim(p.x_k, p.gx_km1, "LyapunovValue");
  const double ge = params.gamma * params.eta;
  DenseVec shift = ge * p.gx_km1;
  DenseVec step = p.x_k - p.x_km1;
  if (p.v_k.size() != 0) {
    CheckSameDim(p.x_k, p.v_k, "LyapunovValue");
    shift += ge * p.v_k;
    step += shift;
  }
  double value = (p.x_k + shift - x_star).squaredNorm() +
                 params.mu * step.squaredNorm();

  const EstimatorConstants& e = params.estimator;
  const double eta2 = params.eta * params.eta;
  const double one_mu = 1.0 + params.mu;
  value += eta2 * one_mu * (1.0 - e.rho) / e.rho * p.delta_km1;
  if (e.c_hat != 0.0) {
    CheckSameDim(p.x_km1, p.x_km2, "LyapunovValue");
    value += params.lipschitz * params.lipschitz * eta2 * e.c_hat * one_mu /
             e.rho * (p.x_km1 - p.x_km2).squaredNorm();
  }
  return value;
}

}  // namespace vrfr
