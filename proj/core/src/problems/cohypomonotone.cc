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

#include "vrfr/problems/cohypomonotone.h"

#include <string>

#include "vrfr/problems/quadratic_minimax.h"

namespace vrfr {

const char* TwoByTwoCouplingName(TwoByTwoCoupling coupling) {
  return coupling == TwoByTwoCoupling::kSymmetric ? "symmetric" : "skew";
}

TwoByTwoCoupling ParseTwoByTwoCoupling(std::string_view name) {
  if (name == "symmetric") return TwoByTwoCoupling::kSymmetric;
  if (name == "skew") return TwoByTwoCoupling::kSkew;
  throw ConfigError("unknown coupling '" + std::string(name) +
                    "' (expected symmetric or skew)");
}

CoHypomonotoneInstance MakeCoHypomonotoneInstance(double epsilon,
                                                  TwoByTwoCoupling coupling,
                                                  const DenseVec& offset) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  CoHypomonotoneInstance inst;
  inst.epsilon = epsilon;
  inst.kappa = epsilon;
  inst.coupling = coupling;
  inst.g.resize(2, 2);
  inst.g << 0.0, 1.0, (coupling == TwoByTwoCoupling::kSymmetric ? 1.0 : -1.0),
      0.0;
  inst.t = DenseMat::Zero(2, 2);
  inst.t(0, 0) = -epsilon;
  if (offset.size() == 0) {
    inst.offset = DenseVec::Ones(2);
  } else {
    if (offset.size() != 2) throw DimensionError("offset must have size 2");
    inst.offset = offset;
  }
  const DenseMat sum = inst.g + inst.t;
  const DenseMat gram = sum.transpose() * sum;
  inst.full_certificate = 0.5 * (sum + sum.transpose()) + inst.kappa * gram;
  inst.reduced_certificate =
      0.5 * (inst.t + inst.t.transpose()) + inst.kappa * gram;
  inst.nonmonotone = MinSymmetricEigenvalue(sum) < 0.0;
  return inst;
}

AffineOperator CoHypomonotoneOperator(const CoHypomonotoneInstance& inst) {
  return AffineOperator::SharedMatrix(inst.g, inst.offset);
}

MonotoneMap CoHypomonotoneMap(const CoHypomonotoneInstance& inst) {
  return MonotoneMap::Linear(inst.t);
}

DenseVec CoHypomonotoneRoot(const CoHypomonotoneInstance& inst) {
  Eigen::FullPivLU<DenseMat> lu(inst.g + inst.t);
  if (!lu.isInvertible()) throw NumericError("G + T is singular");
  return lu.solve(-inst.offset);
}

}  // namespace vrfr
