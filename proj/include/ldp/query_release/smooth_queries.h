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


// Release of smooth queries f on [-1, 1]^p. Each player averages the tensor
// Chebyshev basis T_v(x) = prod_j T_{v_j}(x_j), v in {0..t-1}^p; a query is
// then answered by the inner product of its tensor Chebyshev coefficients
// with the released averages, so any number of queries share one release.

#ifndef LDP_QUERY_RELEASE_SMOOTH_QUERIES_H_
#define LDP_QUERY_RELEASE_SMOOTH_QUERIES_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/primitives/ldp_avg.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/run_notes.h"
#include "ldp/primitives/transcript.h"
#include "ldp/query_release/datasets.h"

namespace ldp::query_release {

using SmoothQuery = std::function<double(std::span<const double>)>;

// t^p, or ResourceExhausted above `cap`.
absl::StatusOr<std::size_t> SmoothBasisSize(std::size_t p, int t,
                                            std::size_t cap);

// out[v] = prod_j T_{v_j}(x_j), v flattened with the last axis fastest.
void SmoothPlayerBasis(std::span<const double> x, int t, std::span<double> out);

// Tensor Chebyshev coefficients of f from t Chebyshev-Gauss nodes per axis,
// exact when f has per-axis degree < t.
absl::StatusOr<std::vector<double>> SmoothQueryCoefficients(
    const SmoothQuery& f, std::size_t p, int t,
    std::size_t cap = std::size_t{1} << 22);

struct SmoothConfig {
  int t = 8;
  double epsilon = 1.0;
  AveragingMode mode = AveragingMode::kPrivate;
  double beta = 0.05;
  std::size_t max_dimension = std::size_t{1} << 22;
};

struct CosineCoefficientTable {
  std::size_t p = 0;
  int t = 0;
  // Private averages of the basis values, in the original [-1, 1] scale.
  std::vector<double> averages;
};

// One averaging call at full epsilon; basis values are mapped by
// (v + 1) / 2 into [0, 1] for the primitive and back afterwards.
absl::StatusOr<CosineCoefficientTable> SmoothRelease(
    const BoxDataset& data, const SmoothConfig& config, const Rng& rng,
    RunNotes* notes = nullptr, Transcript* transcript = nullptr);

absl::StatusOr<double> AnswerSmooth(const CosineCoefficientTable& table,
                                    std::span<const double> coefficients);

// Heuristic (sqrt(n) eps)^(2 / (5p + 2h)), at least 1.
int RecommendedT(std::size_t n, double epsilon, std::size_t p, int h);

}  // namespace ldp::query_release

#endif  // LDP_QUERY_RELEASE_SMOOTH_QUERIES_H_
