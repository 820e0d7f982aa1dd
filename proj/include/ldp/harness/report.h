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


// Report rows and CSV output. Headers are fixed per file; a column a row
// does not set is written empty.

#ifndef LDP_HARNESS_REPORT_H_
#define LDP_HARNESS_REPORT_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "ldp/harness/config.h"

namespace ldp::harness {

// report.csv, shared by every mechanism.
const std::vector<std::string>& ReportColumns();
// transcript_summary.csv.
const std::vector<std::string>& TranscriptColumns();
// <mechanism>_report.csv, a projection of report.csv. Empty when the
// mechanism has no dedicated report.
std::vector<std::string> MechanismReportColumns(Mechanism m);

// Integers print without a decimal point; everything else as %.17g.
std::string FormatNumber(double v);
// Quotes cells holding a comma, quote or newline.
std::string CsvEscape(std::string_view cell);

class ReportRow {
 public:
  void Set(const std::string& column, double value) {
    cells_[column] = FormatNumber(value);
  }
  void Set(const std::string& column, std::string value) {
    cells_[column] = std::move(value);
  }
  void Set(const std::string& column, const char* value) {
    cells_[column] = value;
  }
  // Empty when unset.
  std::string Get(const std::string& column) const;

 private:
  std::map<std::string, std::string> cells_;
};

absl::Status WriteCsv(const std::string& path,
                      const std::vector<std::string>& columns,
                      std::span<const ReportRow> rows);

}  // namespace ldp::harness

#endif  // LDP_HARNESS_REPORT_H_
