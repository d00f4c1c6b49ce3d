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

#ifndef VRFR_HARNESS_AGGREGATE_H_
#define VRFR_HARNESS_AGGREGATE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "vrfr/core/trajectory.h"

namespace vrfr {

struct MeanRecord {
  int64_t iter = 0;
  double epochs = 0.0;        // mean over runs
  double residual = 0.0;      // mean over runs
  double rel_residual = 0.0;  // mean over runs
  double rel_min = 0.0;
  double rel_max = 0.0;
  double step_norm = 0.0;     // mean over runs

  bool operator==(const MeanRecord&) const = default;
};

struct MeanTrajectory {
  std::vector<MeanRecord> records;
  int runs = 0;
  int diverged = 0;
  // Some run stopped early; records cover the common prefix only.
  bool truncated = false;
};

inline constexpr char kMeanCsvHeader[] =
    "iter,epochs,residual,rel_residual,rel_residual_min,rel_residual_max,"
    "step_norm,runs";

// Pointwise mean over runs at equal record index. Every run must record the
// same iteration index at each position of the common prefix; otherwise
// NumericError. Runs of different length are cut to the shortest.
MeanTrajectory Aggregate(const std::vector<Trajectory>& runs);

void WriteMeanCsv(const MeanTrajectory& mean, std::ostream& out);
MeanTrajectory ReadMeanCsv(std::istream& in);

// First mean epoch count at which the mean relative residual is at most
// `threshold`; empty if never reached.
std::optional<double> EpochsToThreshold(const MeanTrajectory& mean,
                                        double threshold);

}  // namespace vrfr

#endif  // VRFR_HARNESS_AGGREGATE_H_
