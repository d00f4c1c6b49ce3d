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

#include "vrfr/problems/logistic.h"

#include <cmath>

#include "vrfr/core/rng.h"
#include "vrfr/operators/lipschitz.h"

namespace vrfr {

double LogisticLoss(double t, double s) {
  // log(1 + e^t) evaluated without overflow.
  const double softplus = t > 0.0 ? t + std::log1p(std::exp(-t))
                                  : std::log1p(std::exp(t));
  return softplus - s * t;
}

double LogisticLossDerivative(double t, double s) {
  const double sigmoid = t >= 0.0 ? 1.0 / (1.0 + std::exp(-t))
                                  : std::exp(t) / (1.0 + std::exp(t));
  return sigmoid - s;
}

LogisticAmbiguousInstance GenerateLogisticAmbiguous(const LibsvmData& data,
                                                    int m, double tau,
                                                    double noise_variance,
                                                    uint64_t seed,
                                                    int max_samples) {
  if (m < 1) throw ConfigError("logistic: ambiguity count m must be >= 1");
  if (!(tau > 0.0)) throw ConfigError("logistic: tau must be positive");
  if (!(noise_variance >= 0.0)) {
    throw ConfigError("logistic: noise variance must be non-negative");
  }
  LibsvmData kept = data;
  if (max_samples > 0 && static_cast<size_t>(max_samples) < data.rows.size()) {
    kept.rows.resize(static_cast<size_t>(max_samples));
    kept.labels.resize(static_cast<size_t>(max_samples));
  }
  LogisticAmbiguousInstance inst;
  inst.nominal = NormalizedDesign(kept);
  inst.samples = static_cast<int>(inst.nominal.rows());
  inst.features = static_cast<int>(inst.nominal.cols());
  inst.ambiguity = m;
  inst.tau = tau;
  inst.noise_variance = noise_variance;
  inst.seed = seed;
  inst.labels = kept.labels;
  const double stddev = std::sqrt(noise_variance);
  const int d = inst.features;
  const RngStream root(seed);
  inst.copies.reserve(static_cast<size_t>(inst.samples));
  for (int i = 0; i < inst.samples; ++i) {
    RngStream rng = root.Derive(static_cast<uint64_t>(i));
    DenseMat copies(d, m);
    for (int j = 0; j < m; ++j) {
      copies.col(j) = inst.nominal.row(i).transpose();
      copies.col(j).head(d - 1) += stddev * rng.NormalVec(d - 1);
    }
    inst.copies.push_back(std::move(copies));
  }
  return inst;
}

LibsvmData SyntheticClassificationData(int samples, int features,
                                       double density, uint64_t seed) {
  if (samples < 1 || features < 1) {
    throw ConfigError("synthetic data: samples and features must be >= 1");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw ConfigError("synthetic data: density must lie in (0, 1]");
  }
  RngStream rng(seed);
  const DenseVec truth = rng.NormalVec(features);
  LibsvmData data;
  data.num_features = features;
  for (int i = 0; i < samples; ++i) {
    SparseRow row;
    double score = 0.0;
    for (int f = 0; f < features; ++f) {
      if (rng.Uniform() < density) {
        const double value = rng.Normal();
        row.indices.push_back(f);
        row.values.push_back(value);
        score += value * truth(f);
      }
    }
    data.labels.push_back(score + 0.1 * rng.Normal() > 0.0 ? 1 : 0);
    data.rows.push_back(std::move(row));
  }
  return data;
}

LogisticAmbiguousOperator::LogisticAmbiguousOperator(
    std::shared_ptr<const LogisticAmbiguousInstance> inst)
    : FiniteSumOperator(inst->samples, inst->dim()), inst_(std::move(inst)) {}

void LogisticAmbiguousOperator::ComponentInto(int i, const DenseVec& x,
                                              DenseVec& out) const {
  const int d = inst_->features, m = inst_->ambiguity;
  const DenseMat& copies = inst_->copies[static_cast<size_t>(i)];
  const double label = inst_->labels[static_cast<size_t>(i)];
  const DenseVec scores = copies.transpose() * x.head(d);
  DenseVec weights(m);
  out.resize(d + m);
  for (int j = 0; j < m; ++j) {
    weights(j) = x(d + j) * LogisticLossDerivative(scores(j), label);
    out(d + j) = -LogisticLoss(scores(j), label);
  }
  out.head(d).noalias() = copies * weights;
}

MonotoneMap LogisticConstraint(const LogisticAmbiguousInstance& inst) {
  const int d = inst.features, m = inst.ambiguity;
  std::vector<BlockRange> ranges{{0, d}, {d, m}};
  std::vector<MonotoneMap> maps{MonotoneMap::L1(d, inst.tau),
                                MonotoneMap::Simplex(m)};
  return MonotoneMap::Product(d + m, std::move(ranges), std::move(maps));
}

double LogisticLipschitzSurrogate(const LogisticAmbiguousInstance& inst) {
  return SpectralNorm(inst.nominal);
}

}  // namespace vrfr
