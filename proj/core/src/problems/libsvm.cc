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

#include "vrfr/problems/libsvm.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "vrfr/core/trajectory.h"

namespace vrfr {
namespace {

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    size_t j = i;
    while (j < line.size() && !IsSpace(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double ParseNumber(std::string_view token, int line, const char* what) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string("invalid ") + what + " '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

int ParseIndex(std::string_view token, int line) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("invalid feature index '" + std::string(token) + "'",
                     line);
  }
  if (value < 1) {
    throw ParseError("feature indices are 1-based, got " +
                         std::to_string(value),
                     line);
  }
  return value;
}

}  // namespace

LibsvmData ParseLibsvm(std::istream& in) {
  LibsvmData data;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string_view> tokens = Tokens(line);
    if (tokens.empty()) continue;
    const double label = ParseNumber(tokens[0], line_no, "label");
    if (label == 1.0) {
      data.labels.push_back(1);
    } else if (label == -1.0 || label == 0.0) {
      data.labels.push_back(0);
    } else {
      throw ParseError("unsupported label '" + std::string(tokens[0]) +
                           "' (expected -1, 0, 1 or +1)",
                       line_no);
    }
    SparseRow row;
    for (size_t t = 1; t < tokens.size(); ++t) {
      const std::string_view tok = tokens[t];
      const size_t colon = tok.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected idx:val, got '" + std::string(tok) + "'",
                         line_no);
      }
      const int index = ParseIndex(tok.substr(0, colon), line_no) - 1;
      if (!row.indices.empty() && index <= row.indices.back()) {
        throw ParseError("feature indices must be strictly increasing",
                         line_no);
      }
      row.indices.push_back(index);
      row.values.push_back(ParseNumber(tok.substr(colon + 1), line_no,
                                       "feature value"));
      data.num_features = std::max(data.num_features, index + 1);
    }
    data.rows.push_back(std::move(row));
  }
  if (data.rows.empty()) throw ParseError("no data rows", line_no);
  return data;
}

LibsvmData ParseLibsvmFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return ParseLibsvm(in);
}

void WriteLibsvm(const LibsvmData& data, std::ostream& out) {
  if (data.rows.size() != data.labels.size()) {
    throw DimensionError("WriteLibsvm: row and label counts differ");
  }
  for (size_t r = 0; r < data.rows.size(); ++r) {
    out << (data.labels[r] == 1 ? "+1" : "-1");
    const SparseRow& row = data.rows[r];
    for (size_t k = 0; k < row.indices.size(); ++k) {
      out << ' ' << row.indices[k] + 1 << ':' << FormatDouble(row.values[k]);
    }
    out << '\n';
  }
}

DenseMat NormalizedDesign(const LibsvmData& data) {
  const Eigen::Index rows = static_cast<Eigen::Index>(data.rows.size());
  const int d = data.num_features;
  DenseMat x = DenseMat::Zero(rows, d + 1);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const SparseRow& row = data.rows[static_cast<size_t>(r)];
    for (size_t k = 0; k < row.indices.size(); ++k) {
      if (row.indices[k] >= d) {
        throw DimensionError("NormalizedDesign: index beyond num_features");
      }
      x(r, row.indices[k]) = row.values[k];
    }
  }
  for (int c = 0; c < d; ++c) {
    const double norm = x.col(c).norm();
    if (norm > 0.0) x.col(c) /= norm;
  }
  x.col(d).setOnes();
  return x;
}

}  // namespace vrfr
