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

#ifndef VRFR_CORE_ORACLE_COUNTER_H_
#define VRFR_CORE_ORACLE_COUNTER_H_

#include <cstdint>

namespace vrfr {

// Per-run oracle accounting. All counts are monotone non-decreasing.
//
// `component_evals` counts single G_i evaluations actually performed.
// `charged_evals` is the accounting that drives the epoch axis: it equals
// component_evals except for SAGA, which reuses its fresh G_i x^k values to
// refresh the table but is charged for that refresh as a third mini-batch.
struct OracleCounter {
  int64_t component_evals = 0;
  int64_t charged_evals = 0;
  int64_t resolvent_evals = 0;

  void AddComponentEvals(int64_t count) {
    component_evals += count;
    charged_evals += count;
  }
  // Charge without performing evaluations.
  void AddChargedOnly(int64_t count) { charged_evals += count; }
  void AddResolventEval() { ++resolvent_evals; }

  double Epochs(int n) const {
    return static_cast<double>(charged_evals) / static_cast<double>(n);
  }
};

}  // namespace vrfr

#endif  // VRFR_CORE_ORACLE_COUNTER_H_
