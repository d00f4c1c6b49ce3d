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

#include "vrfr/core/rng.h"

#include <cmath>
#include <string>

namespace vrfr {
namespace {

__extension__ typedef unsigned __int128 Uint128;

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

uint64_t Mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream)
    : seed_(seed),
      stream_(stream),
      key_(Mix64(seed ^ Mix64(stream + kGolden))) {}

uint64_t RngStream::NextU64() {
  ++counter_;
  return Mix64(key_ + counter_ * kGolden);
}

double RngStream::Uniform() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

uint64_t RngStream::UniformIndex(uint64_t n) {
  // Lemire, "Fast random integer generation in an interval" (2019).
  Uint128 m = static_cast<Uint128>(NextU64()) * n;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < n) {
    const uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<Uint128>(NextU64()) * n;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

double RngStream::Normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * Uniform() - 1.0;
    v = 2.0 * Uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

DenseVec RngStream::NormalVec(Eigen::Index dim) {
  DenseVec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = Normal();
  return v;
}

DenseMat RngStream::NormalMat(Eigen::Index rows, Eigen::Index cols) {
  DenseMat m(rows, cols);
  // Row-major fill order so the stream layout matches reading order.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Normal();
  }
  return m;
}

RngStream RngStream::Derive(uint64_t child) const {
  return RngStream(Mix64(key_ ^ Mix64(child * kGolden + 1)), stream_);
}

std::vector<int> SampleBatch(RngStream& rng, int n, int b) {
  if (b < 1 || b > n) {
    throw ConfigError("SampleBatch: need 1 <= b <= n, got b=" +
                      std::to_string(b) + ", n=" + std::to_string(n));
  }
  std::vector<int> batch(static_cast<size_t>(b));
  for (int& index : batch) {
    index = static_cast<int>(rng.UniformIndex(static_cast<uint64_t>(n)));
  }
  return batch;
}

bool FlipCoin(RngStream& rng, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ConfigError("FlipCoin: probability must lie in (0, 1), got " +
                      std::to_string(p));
  }
  return rng.Uniform() < p;
}

}  // namespace vrfr
