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


// Release files: `# key=value` header lines followed by `index,value` CSV.
// Answers: `query_id,answer,raw_answer`.

#ifndef LDP_QUERY_RELEASE_RELEASE_IO_H_
#define LDP_QUERY_RELEASE_RELEASE_IO_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace ldp::query_release {

struct ReleaseFile {
  // mechanism, p, k or t, gamma, epsilon, n, seed and any extras.
  std::map<std::string, std::string> header;
  std::vector<double> values;
};

absl::Status WriteRelease(const std::string& path, const ReleaseFile& release);
absl::StatusOr<ReleaseFile> ReadRelease(const std::string& path);

struct QueryAnswer {
  std::string query_id;
  double answer = 0.0;
  double raw_answer = 0.0;
};

absl::Status WriteAnswers(const std::string& path,
                          std::span<const QueryAnswer> answers);

}  // namespace ldp::query_release

#endif  // LDP_QUERY_RELEASE_RELEASE_IO_H_
