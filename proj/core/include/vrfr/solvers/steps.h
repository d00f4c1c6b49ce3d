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

#ifndef VRFR_SOLVERS_STEPS_H_
#define VRFR_SOLVERS_STEPS_H_

#include "vrfr/core/oracle_counter.h"
#include "vrfr/core/types.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

// Single-step update rules. They do not validate gamma, so gamma = 1/2 can
// be exercised in tests.

// x^{k+1} = x^k - eta * estimate.
DenseVec VfrStep(const DenseVec& x_k, const DenseVec& estimate, double eta);

// Iterate triple of the splitting method; v = (y - x)/(gamma eta) lies in
// T x whenever x = J_{gamma eta T}(y).
struct SplittingPoint {
  DenseVec x;
  DenseVec y;
  DenseVec v;
};

// x0 = J_{gamma eta T}(y0) with its element v0.
SplittingPoint SplittingStart(const MonotoneMap& t, const DenseVec& y0,
                              double gamma, double eta,
                              OracleCounter* counter);

// y^{k+1} = x^k - eta*estimate + ((2 gamma - 1)/gamma)(y^k - x^k),
// x^{k+1} = J_{gamma eta T}(y^{k+1}).
SplittingPoint VfrbsStep(const MonotoneMap& t, const SplittingPoint& current,
                         const DenseVec& estimate, double gamma, double eta,
                         OracleCounter* counter);

// Optimistic gradient: z = x^k - eta (2 G x^k - G x^{k-1}). Without T the
// result is z itself (with y = z, v = 0); with T, x^{k+1} = J_{eta T}(z)
// and v = (z - x^{k+1})/eta.
SplittingPoint OgStep(const MonotoneMap* t, const DenseVec& x_k,
                      const DenseVec& gx_k, const DenseVec& gx_km1, double eta,
                      OracleCounter* counter);

}  // namespace vrfr

#endif  // VRFR_SOLVERS_STEPS_H_
