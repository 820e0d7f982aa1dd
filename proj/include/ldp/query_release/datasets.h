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


// Datasets for query release: bit rows and points in [-1, 1]^p.

#ifndef LDP_QUERY_RELEASE_DATASETS_H_
#define LDP_QUERY_RELEASE_DATASETS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace ldp::query_release {

class BinaryDataset {
 public:
  // `bits` is n x p row-major with entries in {0, 1}.
  static absl::StatusOr<BinaryDataset> Create(std::size_t p,
                                              std::vector<std::uint8_t> bits);

  std::size_t n() const { return bits_.size() / p_; }
  std::size_t p() const { return p_; }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {bits_.data() + i * p_, p_};
  }

 private:
  BinaryDataset(std::size_t p, std::vector<std::uint8_t> bits)
      : p_(p), bits_(std::move(bits)) {}

  std::size_t p_;
  std::vector<std::uint8_t> bits_;
};

class BoxDataset {
 public:
  // `values` is n x p row-major with entries in [-1, 1].
  static absl::StatusOr<BoxDataset> Create(std::size_t p,
                                           std::vector<double> values);

  std::size_t n() const { return values_.size() / p_; }
  std::size_t p() const { return p_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * p_, p_};
  }

 private:
  BoxDataset(std::size_t p, std::vector<double> values)
      : p_(p), values_(std::move(values)) {}

  std::size_t p_;
  std::vector<double> values_;
};

}  // namespace ldp::query_release

#endif  // LDP_QUERY_RELEASE_DATASETS_H_
