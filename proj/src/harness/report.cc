// Copyright 2026 The ldp-erm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "ldp/harness/report.h"

#include <cmath>
#include <fstream>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_replace.h"

namespace ldp::harness {

const std::vector<std::string>& ReportColumns() {
  static const auto* const kColumns = new std::vector<std::string>{
      "trial", "cell", "mechanism", "family", "n", "p", "k", "h", "t", "d",
      "alpha", "beta", "gamma", "epsilon", "delta", "mode", "flavor", "loss", "encoding",
      "err_empirical", "baseline_err", "value_bound", "bits_per_player",
      "reals_per_player", "max_epsilon_per_player", "seed", "status", "notes"};
  return *kColumns;
}

const std::vector<std::string>& TranscriptColumns() {
  static const auto* const kColumns = new std::vector<std::string>{
      "trial", "cell", "mechanism", "n", "messages", "total_bits",
      "total_reals", "bits_per_player", "reals_per_player"};
  return *kColumns;
}

std::vector<std::string> MechanismReportColumns(Mechanism m) {
  switch (m) {
    case Mechanism::kBernstein:
    case Mechanism::kOneBit:
      return {"trial", "n", "p", "k", "h", "epsilon", "mode", "err_empirical",
              "bits_per_player", "seed"};
    case Mechanism::kHinge:
    case Mechanism::kGeneralLinear:
      return {"trial", "n", "p", "d", "beta", "epsilon", "delta", "flavor",
              "err_empirical", "baseline_err", "reals_per_player", "seed"};
    default:
      return {};
  }
}

std::string FormatNumber(double v) {
  if (std::isfinite(v) && v == std::floor(v) && std::fabs(v) < 1e15) {
    return absl::StrFormat("%d", static_cast<long long>(v));
  }
  return absl::StrFormat("%.17g", v);
}

std::string CsvEscape(std::string_view cell) {
  if (cell.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(cell);
  }
  return "\"" + absl::StrReplaceAll(absl::string_view(cell.data(), cell.size()), {{"\"", "\"\""}}) + "\"";
}

std::string ReportRow::Get(const std::string& column) const {
  auto it = cells_.find(column);
  return it == cells_.end() ? std::string() : it->second;
}

absl::Status WriteCsv(const std::string& path,
                      const std::vector<std::string>& columns,
                      std::span<const ReportRow> rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::InternalError(absl::StrFormat("cannot open %s", path));
  out << absl::StrJoin(columns, ",") << "\n";
  for (const ReportRow& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out << ",";
      out << CsvEscape(row.Get(columns[c]));
    }
    out << "\n";
  }
  if (!out) return absl::InternalError(absl::StrFormat("write to %s failed", path));
  return absl::OkStatus();
}

}  // namespace ldp::harness
