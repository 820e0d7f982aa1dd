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


#include "ldp/query_release/release_io.h"

#include <fstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace ldp::query_release {

absl::Status WriteRelease(const std::string& path, const ReleaseFile& release) {
  std::ofstream out(path);
  if (!out) return absl::InternalError(absl::StrFormat("cannot open %s", path));
  for (const auto& [key, value] : release.header) {
    out << "# " << key << "=" << value << "\n";
  }
  out << "index,value\n";
  for (std::size_t i = 0; i < release.values.size(); ++i) {
    out << absl::StrFormat("%d,%.17g\n", i, release.values[i]);
  }
  if (!out) return absl::InternalError(absl::StrFormat("write to %s failed", path));
  return absl::OkStatus();
}

absl::StatusOr<ReleaseFile> ReadRelease(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrFormat("cannot open %s", path));
  ReleaseFile release;
  std::string line;
  bool in_table = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (!in_table) {
      absl::string_view rest = line;
      if (absl::ConsumePrefix(&rest, "# ")) {
        std::pair<std::string, std::string> kv = absl::StrSplit(rest, absl::MaxSplits('=', 1));
        release.header[kv.first] = kv.second;
        continue;
      }
      if (line != "index,value") {
        return absl::InvalidArgumentError(
            absl::StrFormat("%s:%d: expected the index,value header", path, line_no));
      }
      in_table = true;
      continue;
    }
    std::pair<std::string, std::string> cells = absl::StrSplit(line, absl::MaxSplits(',', 1));
    std::size_t index;
    double value;
    if (!absl::SimpleAtoi(cells.first, &index) ||
        !absl::SimpleAtod(cells.second, &value) ||
        index != release.values.size()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("%s:%d: malformed row '%s'", path, line_no, line));
    }
    release.values.push_back(value);
  }
  if (!in_table) {
    return absl::InvalidArgumentError(absl::StrFormat("%s: no value table", path));
  }
  return release;
}

absl::Status WriteAnswers(const std::string& path,
                          std::span<const QueryAnswer> answers) {
  std::ofstream out(path);
  if (!out) return absl::InternalError(absl::StrFormat("cannot open %s", path));
  out << "query_id,answer,raw_answer\n";
  for (const QueryAnswer& a : answers) {
    out << absl::StrFormat("%s,%.17g,%.17g\n", a.query_id, a.answer, a.raw_answer);
  }
  if (!out) return absl::InternalError(absl::StrFormat("write to %s failed", path));
  return absl::OkStatus();
}

}  // namespace ldp::query_release
