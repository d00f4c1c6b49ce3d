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

#include "vrfr/solvers/residuals.h"

namespace vrfr {

DenseVec FbsResidual(const FiniteSumOperator& op, const MonotoneMap* t,
                     double eta, const DenseVec& x) {
  if (!(eta > 0.0)) throw ConfigError("FbsResidual: eta must be positive");
  const DenseVec gx = op.MeanUncounted(x);
  if (t == nullptr) return gx;
  const DenseVec forward = x - eta * gx;
  return (x - t->Resolve(eta, forward, nullptr)) / eta;
}

double OperatorResidualNorm(const FiniteSumOperator& op, const DenseVec& x,
                            const DenseVec& v) {
  DenseVec r = op.MeanUncounted(x);
  if (v.size() != 0) {
    CheckSameDim(r, v, "OperatorResidualNorm");
    r += v;
  }
  return r.norm();
}

}  // namespace vrfr
