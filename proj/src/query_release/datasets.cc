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


#include "ldp/query_release/datasets.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace ldp::query_release {

absl::StatusOr<BinaryDataset> BinaryDataset::Create(
    std::size_t p, std::vector<std::uint8_t> bits) {
  if (p == 0) return absl::InvalidArgumentError("dimension must be positive");
  if (bits.empty() || bits.size() % p != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "bit buffer of %d entries is not a non-empty multiple of p=%d",
        bits.size(), p));
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row %d column %d holds %d, not a bit", i / p, i % p, bits[i]));
    }
  }
  return BinaryDataset(p, std::move(bits));
}

absl::StatusOr<BoxDataset> BoxDataset::Create(std::size_t p,
                                              std::vector<double> values) {
  if (p == 0) return absl::InvalidArgumentError("dimension must be positive");
  if (values.empty() || values.size() % p != 0) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "value buffer of %d entries is not a non-empty multiple of p=%d",
        values.size(), p));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(std::fabs(values[i]) <= 1.0)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "row %d column %d = %g is outside [-1, 1]", i / p, i % p, values[i]));
    }
  }
  return BoxDataset(p, std::move(values));
}

}  // namespace ldp::query_release
