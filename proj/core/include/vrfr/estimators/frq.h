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

#ifndef VRFR_ESTIMATORS_FRQ_H_
#define VRFR_ESTIMATORS_FRQ_H_

#include "vrfr/core/types.h"

namespace vrfr {

// The forward-reflected quantity S = G x^k - gamma * G x^{k-1}: the target
// of every estimator in this module.
DenseVec FrqExact(const DenseVec& gx_k, const DenseVec& gx_km1, double gamma);

// Throws ConfigError unless 1/2 < gamma < 1.
void ValidateGamma(double gamma);

struct FrqConfig {
  double gamma = 0.75;
  int batch_size = 1;
  double snapshot_prob = 0.5;  // loopless SVRG only
};

}  // namespace vrfr

#endif  // VRFR_ESTIMATORS_FRQ_H_
