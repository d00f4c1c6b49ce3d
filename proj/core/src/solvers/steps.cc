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

#include "vrfr/solvers/steps.h"

namespace vrfr {

DenseVec VfrStep(const DenseVec& x_k, const DenseVec& estimate, double eta) {
  CheckSameDim(x_k, estimate, "VfrStep");
  return x_k - eta * estimate;
}

SplittingPoint SplittingStart(const MonotoneMap& t, const DenseVec& y0,
                              double gamma, double eta,
                              OracleCounter* counter) {
  const double lambda = gamma * eta;
  SplittingPoint p;
  p.y = y0;
  p.x = t.Resolve(lambda, y0, counter);
  p.v = ElementOfT(lambda, p.y, p.x);
  return p;
}

SplittingPoint VfrbsStep(const MonotoneMap& t, const SplittingPoint& current,
                         const DenseVec& estimate, double gamma, double eta,
                         OracleCounter* counter) {
  CheckSameDim(current.x, estimate, "VfrbsStep");
  const double lambda = gamma * eta;
  SplittingPoint next;
  next.y = current.x - eta * estimate +
           ((2.0 * gamma - 1.0) / gamma) * (current.y - current.x);
  next.x = t.Resolve(lambda, next.y, counter);
  next.v = ElementOfT(lambda, next.y, next.x);
  return next;
}

SplittingPoint OgStep(const MonotoneMap* t, const DenseVec& x_k,
                      const DenseVec& gx_k, const DenseVec& gx_km1, double eta,
                      OracleCounter* counter) {
  CheckSameDim(x_k, gx_k, "OgStep");
  CheckSameDim(gx_k, gx_km1, "OgStep");
  SplittingPoint next;
  next.y = x_k - eta * (2.0 * gx_k - gx_km1);
  if (t == nullptr) {
    next.x = next.y;
    next.v = DenseVec::Zero(x_k.size());
  } else {
    next.x = t->Resolve(eta, next.y, counter);
    next.v = ElementOfT(eta, next.y, next.x);
  }
  return next;
}

}  // namespace vrfr
