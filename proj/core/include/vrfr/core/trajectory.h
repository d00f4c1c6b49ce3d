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

#ifndef VRFR_CORE_TRAJECTORY_H_
#define VRFR_CORE_TRAJECTORY_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace vrfr {

struct TrajectoryRecord {
  int64_t iter = 0;
  double epochs = 0.0;
  double residual = 0.0;
  double rel_residual = 0.0;
  double step_norm = 0.0;
  std::optional<double> lyapunov;

  bool operator==(const TrajectoryRecord&) const = default;
};

// One solver run. Records are in increasing iteration order with strictly
// increasing epochs and non-negative residuals.
struct Trajectory {
  std::vector<TrajectoryRecord> records;
  std::string config_json;  // resolved run configuration, compact JSON
  uint64_t seed = 0;
  bool diverged = false;
};

inline constexpr char kTrajectoryCsvHeader[] =
    "iter,epochs,residual,rel_residual,step_norm,lyapunov,seed";

// Shortest round-trip decimal form ("%.17g").
std::string FormatDouble(double value);

// Comment lines carry the config, its git-style content hash and the
// divergence flag; then the header row and one row per record.
void WriteTrajectoryCsv(const Trajectory& trajectory, std::ostream& out);
// Inverse of WriteTrajectoryCsv. Throws ParseError on schema violations.
Trajectory ReadTrajectoryCsv(std::istream& in);

// Throws NumericError naming the first violated invariant.
void ValidateTrajectory(const Trajectory& trajectory);

}  // namespace vrfr

#endif  // VRFR_CORE_TRAJECTORY_H_
