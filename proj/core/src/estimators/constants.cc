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

#include "vrfr/estimators/constants.h"

#include <cmath>
#include <string>

#include "vrfr/core/types.h"

namespace vrfr {

EstimatorConstants LsvrgConstants(double gamma, int b, double p) {
  if (b < 1) throw ConfigError("LsvrgConstants: b must be >= 1");
  if (!(p > 0.0 && p <= 1.0)) {
    throw ConfigError("LsvrgConstants: p must lie in (0, 1]");
  }
  const double bp = static_cast<double>(b) * p;
  EstimatorConstants k;
  k.rho = p / 2.0;
  k.c = (4.0 - 6.0 * p + 3.0 * p * p) / bp;
  k.c_hat = 2.0 * gamma * gamma * (2.0 - 3.0 * p + p * p) / bp;
  return k;
}

EstimatorConstants SagaConstants(double gamma, int n, int b) {
  if (b < 1 || b > n) {
    throw ConfigError("SagaConstants: need 1 <= b <= n, got b=" +
                      std::to_string(b) + ", n=" + std::to_string(n));
  }
  const double nd = n, bd = b;
  const double spread = 2.0 * (nd - bd) * (2.0 * nd + bd);
  EstimatorConstants k;
  k.rho = bd / (2.0 * nd);
  k.c = (spread + bd * bd) / (nd * bd * bd);
  k.c_hat = spread * gamma * gamma / (nd * bd * bd);
  return k;
}

EstimatorConstants FullBatchConstants() { return EstimatorConstants{}; }

bool LsvrgPresetCondition(int b, double p) {
  return static_cast<double>(b) * p * p <= 1.0 + 1e-12;
}

bool SagaPresetCondition(int n, int b) {
  return b >= 1 && static_cast<double>(b) <=
                       std::pow(static_cast<double>(n), 2.0 / 3.0) + 1e-9;
}

}  // namespace vrfr
