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


#include "ldp/query_release/marginals.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "absl/strings/str_format.h"
#include "ldp/base/status_macros.h"
#include "ldp/primitives/privacy_budget.h"

namespace ldp::query_release {
namespace {

void FillDegree(std::size_t pos, int remaining, Monomial& current,
                std::vector<Monomial>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = static_cast<std::uint8_t>(remaining);
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = static_cast<std::uint8_t>(e);
    FillDegree(pos + 1, remaining - e, current, out);
  }
  current[pos] = 0;
}

int Degree(const Monomial& a) {
  int d = 0;
  for (std::uint8_t e : a) d += e;
  return d;
}

std::vector<std::size_t> Support(const Monomial& a) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > 0) s.push_back(j);
  }
  return s;
}

// Weight of monomial a in the expansion: c_|a| |a|! / a!.
std::vector<double> MonomialWeights(const polyapprox::OrPolynomial& poly,
                                    std::span<const Monomial> monomials) {
  std::vector<double> w(monomials.size());
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    const int deg = Degree(monomials[m]);
    w[m] = deg <= poly.degree()
               ? poly.coefficients()[deg] * MultinomialCoefficient(monomials[m])
               : 0.0;
  }
  return w;
}

bool SupportSet(std::span<const std::uint8_t> row,
                std::span<const std::size_t> support) {
  for (std::size_t j : support) {
    if (row[j] == 0) return false;
  }
  return true;
}

}  // namespace

const char* MarginalEncodingName(MarginalEncoding encoding) {
  return encoding == MarginalEncoding::kSupportIndicators ? "support_monomials"
                                                          : "coefficient_sampling";
}

absl::StatusOr<MarginalEncoding> ParseMarginalEncoding(std::string_view name) {
  if (name == "support_monomials") return MarginalEncoding::kSupportIndicators;
  if (name == "coefficient_sampling") return MarginalEncoding::kFullCoefficients;
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown marginal encoding '%s' (support_monomials|coefficient_sampling)",
      std::string(name)));
}

absl::StatusOr<std::vector<Monomial>> EnumerateMonomials(std::size_t p, int t,
                                                         std::size_t cap) {
  if (p == 0 || t < 0) {
    return absl::InvalidArgumentError("need p >= 1 and t >= 0");
  }
  double count = 1.0;  // C(p + t, t)
  for (int i = 1; i <= t; ++i) {
    count = count * static_cast<double>(p + static_cast<std::size_t>(i)) / i;
  }
  if (count > static_cast<double>(cap)) {
    return absl::ResourceExhaustedError(absl::StrFormat(
        "C(p+t, t) = %.0f coefficients for p=%d, t=%d exceeds the cap %d; "
        "lower k or raise gamma",
        count, p, t, cap));
  }
  std::vector<Monomial> out;
  out.reserve(static_cast<std::size_t>(count));
  Monomial current(p, 0);
  for (int deg = 0; deg <= t; ++deg) FillDegree(0, deg, current, out);
  return out;
}

double MultinomialCoefficient(const Monomial& a) {
  double result = 1.0;
  int running = 0;
  for (std::uint8_t e : a) {
    for (int i = 1; i <= e; ++i) {
      ++running;
      result = result * running / i;
    }
  }
  return result;
}

std::vector<double> MarginalsPlayerExpand(std::span<const std::uint8_t> row,
                                          const polyapprox::OrPolynomial& poly,
                                          std::span<const Monomial> monomials) {
  std::vector<double> out = MonomialWeights(poly, monomials);
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    if (!SupportSet(row, Support(monomials[m]))) out[m] = 0.0;
  }
  return out;
}

double MarginalCoefficientTable::Evaluate(
    std::span<const std::uint8_t> y) const {
  double sum = 0.0;
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    if (SupportSet(y, Support(monomials[m]))) sum += coefficients[m];
  }
  return sum;
}

absl::StatusOr<MarginalCoefficientTable> MarginalsRelease(
    const BinaryDataset& data, const MarginalsConfig& config, const Rng& rng,
    RunNotes* notes, Transcript* transcript) {
  ASSIGN_OR_RETURN(const PrivacyBudget budget,
                   PrivacyBudget::Create(config.epsilon));
  ASSIGN_OR_RETURN(const polyapprox::OrPolynomial poly,
                   polyapprox::OrPolynomial::Build(config.k, config.gamma));
  MarginalCoefficientTable table;
  table.p = data.p();
  table.k = config.k;
  table.t = poly.degree();
  table.gamma = config.gamma;
  table.encoding = config.encoding;
  ASSIGN_OR_RETURN(table.monomials, EnumerateMonomials(data.p(), table.t,
                                                       config.max_dimension));
  const std::vector<double> weights = MonomialWeights(poly, table.monomials);
  std::vector<std::vector<std::size_t>> supports(table.monomials.size());
  for (std::size_t m = 0; m < table.monomials.size(); ++m) {
    supports[m] = Support(table.monomials[m]);
  }
  VecAvgOptions options;
  options.mode = config.mode;
  options.beta = config.beta;

  if (config.encoding == MarginalEncoding::kSupportIndicators) {
    // Distinct non-empty supports, each averaged once.
    std::map<std::vector<std::size_t>, std::size_t> index;
    std::vector<const std::vector<std::size_t>*> distinct;
    std::vector<std::size_t> slot(table.monomials.size(), 0);
    for (std::size_t m = 0; m < table.monomials.size(); ++m) {
      if (supports[m].empty()) continue;
      auto [it, inserted] = index.emplace(supports[m], distinct.size());
      if (inserted) distinct.push_back(&it->first);
      slot[m] = it->second;
    }
    table.value_bound = 1.0;
    ASSIGN_OR_RETURN(
        const std::vector<double> avg,
        LdpAvgVec(
            data.n(), distinct.size(),
            [&](std::size_t i, std::size_t j) {
              return SupportSet(data.row(i), *distinct[j]) ? 1.0 : 0.0;
            },
            1.0, budget, rng, options, notes, transcript));
    table.coefficients.resize(table.monomials.size());
    for (std::size_t m = 0; m < table.monomials.size(); ++m) {
      table.coefficients[m] =
          supports[m].empty() ? weights[m] : weights[m] * avg[slot[m]];
    }
    return table;
  }

  double bound = 0.0;
  for (double w : weights) bound = std::max(bound, std::fabs(w));
  table.value_bound = 2 * bound;
  ASSIGN_OR_RETURN(
      std::vector<double> avg,
      LdpAvgVec(
          data.n(), table.monomials.size(),
          [&](std::size_t i, std::size_t m) {
            const double c = SupportSet(data.row(i), supports[m]) ? weights[m] : 0.0;
            return c + bound;
          },
          table.value_bound, budget, rng, options, notes, transcript));
  for (double& v : avg) v -= bound;
  table.coefficients = std::move(avg);
  return table;
}

absl::StatusOr<MarginalAnswer> AnswerMarginal(
    const MarginalCoefficientTable& table, std::span<const std::uint8_t> y) {
  if (y.size() != table.p) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "query has %d entries, table dimension is %d", y.size(), table.p));
  }
  int weight = 0;
  for (std::uint8_t b : y) {
    if (b > 1) return absl::InvalidArgumentError("query entries must be bits");
    weight += b;
  }
  if (weight > table.k) {
    return absl::OutOfRangeError(absl::StrFormat(
        "query touches %d attributes, the release covers at most k=%d", weight,
        table.k));
  }
  MarginalAnswer a;
  a.raw = table.Evaluate(y);
  a.answer = std::clamp(a.raw, 0.0, 1.0);
  return a;
}

double ExactDisjunction(const BinaryDataset& data,
                        std::span<const std::uint8_t> y) {
  std::size_t hits = 0;
  for (std::size_t i = 0; i < data.n(); ++i) {
    const auto row = data.row(i);
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] && row[j]) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(data.n());
}

std::vector<std::vector<std::uint8_t>> EnumerateDisjunctionQueries(
    std::size_t p, int k) {
  std::vector<std::vector<std::uint8_t>> out;
  for (int w = 0; w <= k && static_cast<std::size_t>(w) <= p; ++w) {
    // Combinations of w positions in lexicographic order.
    std::vector<std::size_t> pos(w);
    for (int i = 0; i < w; ++i) pos[i] = i;
    while (true) {
      std::vector<std::uint8_t> y(p, 0);
      for (std::size_t j : pos) y[j] = 1;
      out.push_back(std::move(y));
      int i = w - 1;
      while (i >= 0 && pos[i] == p - static_cast<std::size_t>(w - i)) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace ldp::query_release
