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

#ifndef VRFR_HARNESS_REPORT_H_
#define VRFR_HARNESS_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vrfr/harness/aggregate.h"

namespace vrfr {

struct ReportRow {
  std::string problem;
  std::string label;
  int runs = 0;
  int diverged = 0;
  double final_epochs = 0.0;
  double final_rel_residual = 0.0;
  std::optional<double> epochs_to_1e1;
  std::optional<double> epochs_to_1e2;
};

ReportRow MakeReportRow(const std::string& problem, const std::string& label,
                        const MeanTrajectory& mean);

// One row per "<problem>__<label>__mean.csv" in `dir`, sorted by file name.
std::vector<ReportRow> CollectReport(const std::string& dir);

// Markdown table.
std::string FormatReportTable(const std::vector<ReportRow>& rows);
nlohmann::json ReportToJson(const std::vector<ReportRow>& rows);

}  // namespace vrfr

#endif  // VRFR_HARNESS_REPORT_H_
