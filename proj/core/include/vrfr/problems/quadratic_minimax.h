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

#ifndef VRFR_PROBLEMS_QUADRATIC_MINIMAX_H_
#define VRFR_PROBLEMS_QUADRATIC_MINIMAX_H_

#include <cstdint>
#include <vector>

#include "vrfr/core/types.h"
#include "vrfr/operators/affine_operator.h"
#include "vrfr/operators/saddle_operator.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

// Sum of n quadratic saddle functions
//   H_i(u, v) = 1/2 u'A_i u + u'L_i v - 1/2 v'B_i v + b_i'u - c_i'v
// with A_i = Q D Q' (eigenvalues clipped below at `clip`), likewise B_i.
// Component i of the gradient field is
//   G_i [u; v] = [A_i u + L_i v + b_i; -L_i' u + B_i v + c_i].
struct QuadraticMinimaxInstance {
  int n = 0;
  int p1 = 0;
  int p2 = 0;
  double clip = -0.1;
  uint64_t seed = 0;
  std::vector<DenseMat> a;  // p1 x p1, symmetric
  std::vector<DenseMat> b;  // p2 x p2, symmetric
  std::vector<DenseMat> l;  // p1 x p2
  DenseMat u_offsets;       // p1 x n, column i is b_i
  DenseMat v_offsets;       // p2 x n, column i is c_i

  int dim() const { return p1 + p2; }
};

inline constexpr int kQuadraticGeneratorVersion = 1;

// Component i draws from the child stream Derive(i) of the seed, so
// instances with different n share their leading components.
QuadraticMinimaxInstance GenerateQuadraticMinimax(int n, int p1, int p2,
                                                  uint64_t seed,
                                                  double clip = -0.1);

AffineOperator QuadraticMinimaxOperator(const QuadraticMinimaxInstance& inst);
// Same field through saddle gradients; used to cross-check the block form.
SaddleOperator QuadraticMinimaxSaddle(const QuadraticMinimaxInstance& inst);

// Product of unit simplices over the u and v blocks.
MonotoneMap SimplexConstraint(int p1, int p2);

// Smallest eigenvalue of the symmetric part of a square matrix.
double MinSymmetricEigenvalue(const DenseMat& m);

}  // namespace vrfr

#endif  // VRFR_PROBLEMS_QUADRATIC_MINIMAX_H_
