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


// Release of monotone disjunction queries q_y(x) = OR_{j : y_j = 1} x_j for
// |y| <= k. With an OR-polynomial p_k, q_y(x) ~ p_k(sum_j y_j x_j) and the
// right side expands into monomials y^a of degree <= t = deg p_k:
//   coefficient of y^a = c_|a| * |a|! / a! * x^supp(a).
// The server only needs the average of these coefficients over players.

#ifndef LDP_QUERY_RELEASE_MARGINALS_H_
#define LDP_QUERY_RELEASE_MARGINALS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ldp/polyapprox/or_polynomial.h"
#include "ldp/primitives/ldp_avg.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/run_notes.h"
#include "ldp/primitives/transcript.h"
#include "ldp/query_release/datasets.h"

namespace ldp::query_release {

// kSupportIndicators: players average the indicators x^S for 1 <= |S| <= t
// (values in [0, 1]) and the server applies the linear map to monomial
// coefficients. kFullCoefficients: players average their full coefficient
// vectors, shifted by the largest coefficient magnitude B into [0, 2B].
enum class MarginalEncoding { kSupportIndicators, kFullCoefficients };

const char* MarginalEncodingName(MarginalEncoding encoding);
absl::StatusOr<MarginalEncoding> ParseMarginalEncoding(std::string_view name);

using Monomial = std::vector<std::uint8_t>;

// All exponent vectors of length p and total degree <= t, by degree then
// lexicographically. Size C(p + t, t); fails above `cap`.
absl::StatusOr<std::vector<Monomial>> EnumerateMonomials(std::size_t p, int t,
                                                         std::size_t cap);

// |a|! / a!.
double MultinomialCoefficient(const Monomial& a);

// Coefficients of p_k(sum_j y_j x_j) over `monomials`.
std::vector<double> MarginalsPlayerExpand(std::span<const std::uint8_t> row,
                                          const polyapprox::OrPolynomial& poly,
                                          std::span<const Monomial> monomials);

struct MarginalsConfig {
  int k = 2;
  double gamma = 0.05;
  MarginalEncoding encoding = MarginalEncoding::kSupportIndicators;
  double epsilon = 1.0;
  AveragingMode mode = AveragingMode::kPrivate;
  double beta = 0.05;
  std::size_t max_dimension = std::size_t{1} << 22;
};

struct MarginalCoefficientTable {
  std::size_t p = 0;
  int k = 0;
  int t = 0;
  double gamma = 0.0;
  MarginalEncoding encoding = MarginalEncoding::kSupportIndicators;
  // Bound b handed to the averaging primitive.
  double value_bound = 0.0;
  std::vector<Monomial> monomials;
  std::vector<double> coefficients;

  // sum_a coefficient_a y^a.
  double Evaluate(std::span<const std::uint8_t> y) const;
};

absl::StatusOr<MarginalCoefficientTable> MarginalsRelease(
    const BinaryDataset& data, const MarginalsConfig& config, const Rng& rng,
    RunNotes* notes = nullptr, Transcript* transcript = nullptr);

struct MarginalAnswer {
  double answer = 0.0;  // clamped to [0, 1]
  double raw = 0.0;
};

// OutOfRange when |y| > k.
absl::StatusOr<MarginalAnswer> AnswerMarginal(
    const MarginalCoefficientTable& table, std::span<const std::uint8_t> y);

// Fraction of rows with at least one bit set among supp(y).
double ExactDisjunction(const BinaryDataset& data,
                        std::span<const std::uint8_t> y);

// Every y in {0,1}^p with |y| <= k, by weight then lexicographically.
std::vector<std::vector<std::uint8_t>> EnumerateDisjunctionQueries(
    std::size_t p, int k);

}  // namespace ldp::query_release

#endif  // LDP_QUERY_RELEASE_MARGINALS_H_
