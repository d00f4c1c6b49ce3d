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

#include "vrfr/core/trajectory.h"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "vrfr/core/content_hash.h"
#include "vrfr/core/types.h"

namespace vrfr {
namespace {

constexpr char kConfigPrefix[] = "# config: ";
constexpr char kHashPrefix[] = "# config_hash: ";
constexpr char kDivergedPrefix[] = "# diverged: ";

bool StartsWith(const std::string& s, const char* prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::vector<std::string> SplitCommas(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double ParseDouble(const std::string& token, int line) {
  double value = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("not a number: '" + token + "'", line);
  }
  return value;
}

template <typename Int>
Int ParseInt(const std::string& token, int line) {
  Int value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError("not an integer: '" + token + "'", line);
  }
  return value;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void WriteTrajectoryCsv(const Trajectory& trajectory, std::ostream& out) {
  out << kConfigPrefix << trajectory.config_json << '\n';
  out << kHashPrefix << GitBlobHash(trajectory.config_json) << '\n';
  out << kDivergedPrefix << (trajectory.diverged ? 1 : 0) << '\n';
  out << kTrajectoryCsvHeader << '\n';
  for (const TrajectoryRecord& r : trajectory.records) {
    out << r.iter << ',' << FormatDouble(r.epochs) << ','
        << FormatDouble(r.residual) << ',' << FormatDouble(r.rel_residual)
        << ',' << FormatDouble(r.step_norm) << ',';
    if (r.lyapunov) out << FormatDouble(*r.lyapunov);
    out << ',' << trajectory.seed << '\n';
  }
}

Trajectory ReadTrajectoryCsv(std::istream& in) {
  Trajectory trajectory;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  bool seed_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (StartsWith(line, kConfigPrefix)) {
        trajectory.config_json = line.substr(sizeof(kConfigPrefix) - 1);
      } else if (StartsWith(line, kDivergedPrefix)) {
        trajectory.diverged =
            line.substr(sizeof(kDivergedPrefix) - 1) == std::string("1");
      }
      continue;
    }
    if (!header_seen) {
      if (line != kTrajectoryCsvHeader) {
        throw ParseError("unexpected header '" + line + "'", line_no);
      }
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = SplitCommas(line);
    if (f.size() != 7) {
      throw ParseError("expected 7 fields, found " + std::to_string(f.size()),
                       line_no);
    }
    TrajectoryRecord r;
    r.iter = ParseInt<int64_t>(f[0], line_no);
    r.epochs = ParseDouble(f[1], line_no);
    r.residual = ParseDouble(f[2], line_no);
    r.rel_residual = ParseDouble(f[3], line_no);
    r.step_norm = ParseDouble(f[4], line_no);
    if (!f[5].empty()) r.lyapunov = ParseDouble(f[5], line_no);
    const uint64_t seed = ParseInt<uint64_t>(f[6], line_no);
    if (seed_seen && seed != trajectory.seed) {
      throw ParseError("seed column is not constant", line_no);
    }
    trajectory.seed = seed;
    seed_seen = true;
    trajectory.records.push_back(r);
  }
  if (!header_seen) throw ParseError("missing CSV header", line_no);
  return trajectory;
}

void ValidateTrajectory(const Trajectory& trajectory) {
  const auto& records = trajectory.records;
  for (size_t i = 0; i < records.size(); ++i) {
    if (!(records[i].residual >= 0.0)) {
      throw NumericError("record " + std::to_string(i) +
                         ": residual is negative or NaN");
    }
    if (i > 0 && !(records[i].epochs > records[i - 1].epochs)) {
      throw NumericError("record " + std::to_string(i) +
                         ": epochs not strictly increasing");
    }
  }
}

}  // namespace vrfr
