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

#include "vrfr/operators/lipschitz.h"

#include <cmath>
#include <string>

#include "vrfr/core/trajectory.h"
#include "vrfr/operators/affine_operator.h"

namespace vrfr {

PowerIterationResult PowerIterationPsd(const DenseMat& psd,
                                       const PowerIterationOptions& options) {
  if (psd.rows() != psd.cols() || psd.rows() == 0) {
    throw DimensionError("PowerIterationPsd: matrix must be square, nonempty");
  }
  RngStream rng(options.seed);
  DenseVec v = rng.NormalVec(psd.rows());
  v.normalize();

  PowerIterationResult result;
  double previous = -1.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    DenseVec w = psd * v;
    const double quotient = v.dot(w);
    const double w_norm = w.norm();
    result.iterations = it;
    if (w_norm == 0.0) {
      result.eigenvalue = 0.0;
      result.eigenvector = v;
      return result;
    }
    v = w / w_norm;
    if (previous >= 0.0 &&
        std::abs(quotient - previous) <= options.tolerance * quotient) {
      result.eigenvalue = quotient;
      result.eigenvector = v;
      return result;
    }
    previous = quotient;
  }
  const DenseVec w = psd * v;
  throw NumericError("PowerIterationPsd: no convergence after " +
                     std::to_string(options.max_iterations) +
                     " iterations; last quotients " + FormatDouble(previous) +
                     ", " + FormatDouble(v.dot(w)));
}

double SpectralNorm(const DenseMat& matrix,
                    const PowerIterationOptions& options) {
  const DenseMat gram = matrix.rows() < matrix.cols()
                            ? DenseMat(matrix * matrix.transpose())
                            : DenseMat(matrix.transpose() * matrix);
  return std::sqrt(PowerIterationPsd(gram, options).eigenvalue);
}

LipschitzEstimate AveragedLipschitz(const AffineOperator& op,
                                    const PowerIterationOptions& options) {
  const double top = PowerIterationPsd(op.GramMean(), options).eigenvalue;
  return {std::sqrt(std::max(top, 0.0)), false};
}

LipschitzEstimate EmpiricalLipschitz(const FiniteSumOperator& op,
                                     RngStream& rng, int pairs,
                                     double radius) {
  double best = 0.0;
  DenseVec gx, gy;
  for (int t = 0; t < pairs; ++t) {
    const DenseVec x = radius * rng.NormalVec(op.dim());
    const DenseVec y = radius * rng.NormalVec(op.dim());
    const double dist = (x - y).norm();
    if (dist == 0.0) continue;
    double sum = 0.0;
    for (int i = 0; i < op.n(); ++i) {
      op.ComponentInto(i, x, gx);
      op.ComponentInto(i, y, gy);
      sum += (gx - gy).squaredNorm();
    }
    best = std::max(best, std::sqrt(sum / op.n()) / dist);
  }
  return {best, true};
}

}  // namespace vrfr
