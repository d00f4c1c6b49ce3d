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

#include "vrfr/harness/report.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vrfr/core/types.h"

namespace vrfr {

namespace {

constexpr char kMeanSuffix[] = "__mean.csv";

std::string Cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *v);
  return buf;
}

nlohmann::json OrNull(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

ReportRow MakeReportRow(const std::string& problem, const std::string& label,
                        const MeanTrajectory& mean) {
  ReportRow row;
  row.problem = problem;
  row.label = label;
  row.runs = mean.runs;
  row.diverged = mean.diverged;
  if (!mean.records.empty()) {
    row.final_epochs = mean.records.back().epochs;
    row.final_rel_residual = mean.records.back().rel_residual;
  }
  row.epochs_to_1e1 = EpochsToThreshold(mean, 1e-1);
  row.epochs_to_1e2 = EpochsToThreshold(mean, 1e-2);
  return row;
}

std::vector<ReportRow> CollectReport(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw ConfigError("report: '" + dir + "' is not a directory");
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (name.size() > sizeof(kMeanSuffix) - 1 &&
        name.ends_with(kMeanSuffix)) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<ReportRow> rows;
  for (const fs::path& path : files) {
    std::string stem = path.filename().string();
    stem.resize(stem.size() - (sizeof(kMeanSuffix) - 1));
    const size_t split = stem.find("__");
    if (split == std::string::npos) continue;
    std::ifstream in(path);
    const MeanTrajectory mean = ReadMeanCsv(in);
    rows.push_back(
        MakeReportRow(stem.substr(0, split), stem.substr(split + 2), mean));
  }
  return rows;
}

std::string FormatReportTable(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "| problem | algorithm | runs | diverged | epochs | final rel. "
         "residual | epochs to 1e-1 | epochs to 1e-2 |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const ReportRow& r : rows) {
    char rel[32];
    std::snprintf(rel, sizeof(rel), "%.3e", r.final_rel_residual);
    out << "| " << r.problem << " | " << r.label << " | " << r.runs << " | "
        << r.diverged << " | " << Cell(r.final_epochs) << " | " << rel
        << " | " << Cell(r.epochs_to_1e1) << " | " << Cell(r.epochs_to_1e2)
        << " |\n";
  }
  return out.str();
}

nlohmann::json ReportToJson(const std::vector<ReportRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const ReportRow& r : rows) {
    out.push_back({{"problem", r.problem},
                   {"algorithm", r.label},
                   {"runs", r.runs},
                   {"diverged", r.diverged},
                   {"final_epochs", r.final_epochs},
                   {"final_rel_residual", r.final_rel_residual},
                   {"epochs_to_1e-1", OrNull(r.epochs_to_1e1)},
                   {"epochs_to_1e-2", OrNull(r.epochs_to_1e2)}});
  }
  return out;
}

}  // namespace vrfr
