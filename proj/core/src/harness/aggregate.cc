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

#include "vrfr/harness/aggregate.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "vrfr/core/types.h"

namespace vrfr {

MeanTrajectory Aggregate(const std::vector<Trajectory>& runs) {
  if (runs.empty()) throw ConfigError("Aggregate: no runs");
  MeanTrajectory mean;
  mean.runs = static_cast<int>(runs.size());
  size_t length = runs.front().records.size();
  size_t longest = length;
  for (const Trajectory& t : runs) {
    length = std::min(length, t.records.size());
    longest = std::max(longest, t.records.size());
    mean.diverged += t.diverged ? 1 : 0;
  }
  mean.truncated = length != longest;
  const double w = 1.0 / static_cast<double>(runs.size());
  for (size_t r = 0; r < length; ++r) {
    MeanRecord m;
    m.iter = runs.front().records[r].iter;
    m.rel_min = runs.front().records[r].rel_residual;
    m.rel_max = m.rel_min;
    for (const Trajectory& t : runs) {
      const TrajectoryRecord& rec = t.records[r];
      if (rec.iter != m.iter) {
        throw NumericError("Aggregate: record " + std::to_string(r) +
                           " has iteration " + std::to_string(rec.iter) +
                           " in one run and " + std::to_string(m.iter) +
                           " in another");
      }
      m.epochs += w * rec.epochs;
      m.residual += w * rec.residual;
      m.rel_residual += w * rec.rel_residual;
      m.step_norm += w * rec.step_norm;
      m.rel_min = std::min(m.rel_min, rec.rel_residual);
      m.rel_max = std::max(m.rel_max, rec.rel_residual);
    }
    mean.records.push_back(m);
  }
  return mean;
}

void WriteMeanCsv(const MeanTrajectory& mean, std::ostream& out) {
  out << "# runs: " << mean.runs << "\n";
  out << "# diverged: " << mean.diverged << "\n";
  out << "# truncated: " << (mean.truncated ? "true" : "false") << "\n";
  out << kMeanCsvHeader << "\n";
  for (const MeanRecord& m : mean.records) {
    out << m.iter << ',' << FormatDouble(m.epochs) << ','
        << FormatDouble(m.residual) << ',' << FormatDouble(m.rel_residual)
        << ',' << FormatDouble(m.rel_min) << ',' << FormatDouble(m.rel_max)
        << ',' << FormatDouble(m.step_norm) << ',' << mean.runs << "\n";
  }
}

namespace {

double ParseField(const std::string& s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("mean CSV: bad number '" + s + "'", line);
  }
  return v;
}

}  // namespace

MeanTrajectory ReadMeanCsv(std::istream& in) {
  MeanTrajectory mean;
  std::string line;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string key, value;
      meta >> key >> value;
      if (key == "runs:") mean.runs = std::stoi(value);
      if (key == "diverged:") mean.diverged = std::stoi(value);
      if (key == "truncated:") mean.truncated = value == "true";
      continue;
    }
    if (!header) {
      if (line != kMeanCsvHeader) {
        throw ParseError("mean CSV: unexpected header '" + line + "'", line_no);
      }
      header = true;
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 8) {
      throw ParseError("mean CSV: expected 8 fields", line_no);
    }
    MeanRecord m;
    m.iter = static_cast<int64_t>(ParseField(fields[0], line_no));
    m.epochs = ParseField(fields[1], line_no);
    m.residual = ParseField(fields[2], line_no);
    m.rel_residual = ParseField(fields[3], line_no);
    m.rel_min = ParseField(fields[4], line_no);
    m.rel_max = ParseField(fields[5], line_no);
    m.step_norm = ParseField(fields[6], line_no);
    mean.records.push_back(m);
  }
  if (!header) throw ParseError("mean CSV: missing header", line_no);
  return mean;
}

std::optional<double> EpochsToThreshold(const MeanTrajectory& mean,
                                        double threshold) {
  for (const MeanRecord& m : mean.records) {
    if (m.rel_residual <= threshold) return m.epochs;
  }
  return std::nullopt;
}

}  // namespace vrfr
