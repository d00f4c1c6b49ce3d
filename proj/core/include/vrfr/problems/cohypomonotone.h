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

#ifndef VRFR_PROBLEMS_COHYPOMONOTONE_H_
#define VRFR_PROBLEMS_COHYPOMONOTONE_H_

#include <string_view>

#include "vrfr/core/types.h"
#include "vrfr/operators/affine_operator.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

// kSymmetric couples the two coordinates through [[0, 1], [1, 0]];
// kSkew uses [[0, 1], [-1, 0]], whose symmetric part vanishes.
enum class TwoByTwoCoupling { kSymmetric, kSkew };

const char* TwoByTwoCouplingName(TwoByTwoCoupling coupling);
TwoByTwoCoupling ParseTwoByTwoCoupling(std::string_view name);

// Two-dimensional inclusion 0 in (G x + g) + T x with T = [[-eps, 0], [0, 0]]
// and the claimed co-hypomonotonicity modulus kappa = eps.
struct CoHypomonotoneInstance {
  double epsilon = 0.0;
  double kappa = 0.0;
  TwoByTwoCoupling coupling = TwoByTwoCoupling::kSymmetric;
  DenseMat g;        // 2 x 2
  DenseMat t;        // 2 x 2
  DenseVec offset;   // g
  // Full certificate 1/2(G + G' + T + T') + kappa (G + T)'(G + T) and the
  // reduced form 1/2(T + T') + kappa (G + T)'(G + T); the reduced form
  // certifies the instance only when 1/2(G + G') is PSD.
  DenseMat full_certificate;
  DenseMat reduced_certificate;
  // The symmetric part of G + T has a negative eigenvalue.
  bool nonmonotone = false;
};

CoHypomonotoneInstance MakeCoHypomonotoneInstance(
    double epsilon, TwoByTwoCoupling coupling = TwoByTwoCoupling::kSymmetric,
    const DenseVec& offset = DenseVec());

// Single-component operator x -> G x + g; L equals the spectral norm of G.
AffineOperator CoHypomonotoneOperator(const CoHypomonotoneInstance& inst);
MonotoneMap CoHypomonotoneMap(const CoHypomonotoneInstance& inst);
// Solves (G + T) x = -g.
DenseVec CoHypomonotoneRoot(const CoHypomonotoneInstance& inst);

}  // namespace vrfr

#endif  // VRFR_PROBLEMS_COHYPOMONOTONE_H_
