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

#ifndef VRFR_PROBLEMS_LIBSVM_H_
#define VRFR_PROBLEMS_LIBSVM_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "vrfr/core/types.h"

namespace vrfr {

// Zero-based, strictly increasing feature indices.
struct SparseRow {
  std::vector<int> indices;
  std::vector<double> values;

  bool operator==(const SparseRow&) const = default;
};

struct LibsvmData {
  std::vector<SparseRow> rows;
  std::vector<int> labels;  // 0 or 1
  int num_features = 0;     // 1 + largest index seen

  bool operator==(const LibsvmData&) const = default;
};

// Lines read `label idx:val idx:val ...` with 1-based increasing indices.
// Labels -1 and 0 map to 0, +1 and 1 map to 1. Blank lines are skipped.
// Throws ParseError with the 1-based line number on malformed tokens,
// non-increasing indices, unsupported labels or an input without rows.
LibsvmData ParseLibsvm(std::istream& in);
LibsvmData ParseLibsvmFile(const std::string& path);

// Writes labels as +1/-1 and values with round-trip precision.
void WriteLibsvm(const LibsvmData& data, std::ostream& out);

// Dense N x (d + 1) design: each feature column scaled to unit Euclidean
// norm (all-zero columns are left as zero), then a column of ones appended.
DenseMat NormalizedDesign(const LibsvmData& data);

}  // namespace vrfr

#endif  // VRFR_PROBLEMS_LIBSVM_H_
