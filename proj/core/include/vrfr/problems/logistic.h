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

#ifndef VRFR_PROBLEMS_LOGISTIC_H_
#define VRFR_PROBLEMS_LOGISTIC_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "vrfr/core/types.h"
#include "vrfr/operators/finite_sum_operator.h"
#include "vrfr/problems/libsvm.h"
#include "vrfr/resolvents/monotone_map.h"

namespace vrfr {

// Logistic loss l(t, s) = log(1 + e^t) - s t and its derivative in t.
double LogisticLoss(double t, double s);
double LogisticLossDerivative(double t, double s);

// Worst-case logistic regression over m noisy copies X_ij of each nominal
// feature row, as a saddle problem over x = [w; z] with w in R^d and z in
// the unit simplex of R^m.
struct LogisticAmbiguousInstance {
  int samples = 0;      // N
  int features = 0;     // d, including the bias column
  int ambiguity = 0;    // m
  double tau = 1e-3;    // l1 weight
  double noise_variance = 0.5;
  uint64_t seed = 0;
  std::vector<DenseMat> copies;  // N matrices of size d x m, column j is X_ij
  std::vector<int> labels;       // 0 or 1
  DenseMat nominal;              // N x d normalized design with bias

  int dim() const { return features + ambiguity; }
};

inline constexpr int kLogisticGeneratorVersion = 1;

// Normalizes `data`, then adds N(0, noise_variance) to every non-bias entry
// of each of the m copies. `max_samples` > 0 keeps the first max_samples rows.
LogisticAmbiguousInstance GenerateLogisticAmbiguous(const LibsvmData& data,
                                                    int m, double tau,
                                                    double noise_variance,
                                                    uint64_t seed,
                                                    int max_samples = 0);

// Synthetic nominal data: N rows of d features with density `density`,
// labels from a random linear classifier. Used when no dataset is supplied.
LibsvmData SyntheticClassificationData(int samples, int features,
                                       double density, uint64_t seed);

// G_i [w; z] = [sum_j z_j l'(<X_ij, w>, y_i) X_ij; -l(<X_ij, w>, y_i)_j].
class LogisticAmbiguousOperator : public FiniteSumOperator {
 public:
  explicit LogisticAmbiguousOperator(
      std::shared_ptr<const LogisticAmbiguousInstance> inst);

  void ComponentInto(int i, const DenseVec& x, DenseVec& out) const override;

 private:
  std::shared_ptr<const LogisticAmbiguousInstance> inst_;
};

// T = [tau * d|w|_1; normal cone of the simplex in z].
MonotoneMap LogisticConstraint(const LogisticAmbiguousInstance& inst);

// Spectral norm of the nominal design, used as the step scale.
double LogisticLipschitzSurrogate(const LogisticAmbiguousInstance& inst);

}  // namespace vrfr

#endif  // VRFR_PROBLEMS_LOGISTIC_H_
