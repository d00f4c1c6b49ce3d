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

#ifndef VRFR_RESOLVENTS_PROX_H_
#define VRFR_RESOLVENTS_PROX_H_

#include "vrfr/core/types.h"

namespace vrfr {

// Euclidean projection onto {u >= 0, sum u = 1}. Sort-and-threshold, O(p log p).
// The projection is single-valued, so ties in y need no special handling.
DenseVec ProjectSimplex(const DenseVec& y);

// Componentwise clamp to [-radius, radius]. Requires radius > 0.
DenseVec ProjectBox(const DenseVec& y, double radius);

// sign(y_i) * max(|y_i| - threshold, 0). Requires threshold >= 0.
DenseVec SoftThreshold(const DenseVec& y, double threshold);

}  // namespace vrfr

#endif  // VRFR_RESOLVENTS_PROX_H_
