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

#ifndef VRFR_OPERATORS_AFFINE_OPERATOR_H_
#define VRFR_OPERATORS_AFFINE_OPERATOR_H_

#include <optional>
#include <vector>

#include "vrfr/operators/finite_sum_operator.h"

namespace vrfr {

// G_i x = A_i x + g_i with A_i square, possibly nonsymmetric.
//
// Either every component carries its own matrix, or all components share one
// matrix and differ only in the offset. The mean matrix and mean offset are
// precomputed, so Full() costs one matrix-vector product. The averaged
// Lipschitz constant is computed once at construction by power iteration.
class AffineOperator : public FiniteSumOperator {
 public:
  // `offsets` is dim x n; column i is g_i. `matrices` holds either n
  // matrices or a single matrix shared by all components.
  AffineOperator(std::vector<DenseMat> matrices, DenseMat offsets);
  static AffineOperator SharedMatrix(DenseMat matrix, DenseMat offsets);

  void ComponentInto(int i, const DenseVec& x, DenseVec& out) const override;
  DenseVec MeanUncounted(const DenseVec& x) const override;
  std::optional<double> KnownLipschitz() const override;

  bool shared() const { return matrices_.size() == 1; }
  const DenseMat& matrix(int i) const;
  DenseVec offset(int i) const { return offsets_.col(i); }
  const DenseMat& offsets() const { return offsets_; }
  const DenseMat& mean_matrix() const { return mean_matrix_; }
  const DenseVec& mean_offset() const { return mean_offset_; }

  // (1/n) sum_i A_i^T A_i, the matrix whose top eigenvalue is L^2.
  DenseMat GramMean() const;

 private:
  std::vector<DenseMat> matrices_;
  DenseMat offsets_;
  DenseMat mean_matrix_;
  DenseVec mean_offset_;
  double lipschitz_ = 0.0;
};

// Unique zero of the mean map, solving mean_matrix x = -mean_offset. Throws
// NumericError when the mean matrix is singular.
DenseVec AffineRoot(const AffineOperator& op);

}  // namespace vrfr

#endif  // VRFR_OPERATORS_AFFINE_OPERATOR_H_
