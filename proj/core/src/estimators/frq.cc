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

#include "vrfr/estimators/frq.h"

#include <string>

namespace vrfr {

DenseVec FrqExact(const DenseVec& gx_k, const DenseVec& gx_km1, double gamma) {
  CheckSameDim(gx_k, gx_km1, "FrqExact");
  return gx_k - gamma * gx_km1;
}

void ValidateGamma(double gamma) {
  if (!(gamma > 0.5 && gamma < 1.0)) {
    throw ConfigError("gamma must lie in (1/2, 1), got " +
                      std::to_string(gamma));
  }
}

}  // namespace vrfr
