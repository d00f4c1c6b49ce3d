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

#ifndef VRFR_CORE_RNG_H_
#define VRFR_CORE_RNG_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "vrfr/core/types.h"

namespace vrfr {

// Counter-based generator: the k-th output is splitmix64's finalizer applied
// to key + (k + 1) * 0x9E3779B97F4A7C15, with key derived from (seed, stream).
// Output depends only on (seed, stream, k), so sequences are identical across
// platforms and independent of thread scheduling. Uniform doubles use the top
// 53 bits; normals use the Marsaglia polar method with a cached spare.
class RngStream {
 public:
  static constexpr std::string_view kAlgorithmId = "splitmix64-ctr";

  explicit RngStream(uint64_t seed, uint64_t stream = 0);

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }
  uint64_t counter() const { return counter_; }

  uint64_t NextU64();
  // Uniform on [0, 1).
  double Uniform();
  // Uniform integer in [0, n); Lemire's multiply-shift with rejection.
  uint64_t UniformIndex(uint64_t n);
  double Normal();
  DenseVec NormalVec(Eigen::Index dim);
  DenseMat NormalMat(Eigen::Index rows, Eigen::Index cols);

  // Independent child stream; does not advance this stream.
  RngStream Derive(uint64_t child) const;

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t key_;
  uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// b indices drawn i.i.d. uniformly from [0, n), with replacement.
// Throws ConfigError unless 1 <= b <= n.
std::vector<int> SampleBatch(RngStream& rng, int n, int b);

// True with probability p. Throws ConfigError unless 0 < p < 1.
bool FlipCoin(RngStream& rng, double p);

}  // namespace vrfr

#endif  // VRFR_CORE_RNG_H_
