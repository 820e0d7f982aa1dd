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


#include "ldp/harness/runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <thread>
#include <utility>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "ldp/base/status_macros.h"
#include "ldp/bernstein_erm/cube_dataset.h"
#include "ldp/bernstein_erm/mechanism.h"
#include "ldp/glm_erm/glm_erm.h"
#include "ldp/harness/datasets.h"
#include "ldp/polyapprox/or_polynomial.h"
#include "ldp/primitives/ldp_avg.h"
#include "ldp/primitives/privacy_budget.h"
#include "ldp/primitives/rng.h"
#include "ldp/primitives/transcript.h"
#include "ldp/query_release/marginals.h"
#include "ldp/query_release/release_io.h"
#include "ldp/query_release/smooth_queries.h"

#ifndef LDP_ERM_GIT_DESCRIBE
#define LDP_ERM_GIT_DESCRIBE "unknown"
#endif

namespace ldp::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Slack for comparing a reported per-player spend with the declared epsilon.
constexpr double kBudgetSlack = 1e-9;

std::string U64(std::uint64_t v) { return absl::StrFormat("%d", v); }

std::string DefaultFamily(Mechanism m) {
  switch (m) {
    case Mechanism::kHinge:
    case Mechanism::kGeneralLinear:
      return "separable-two-class";
    case Mechanism::kMarginals:
      return "bernoulli-bits";
    default:
      return "uniform-cube";
  }
}

bool IsCube(Mechanism m) {
  return m == Mechanism::kBernstein || m == Mechanism::kOneBit;
}
bool IsGlm(Mechanism m) {
  return m == Mechanism::kHinge || m == Mechanism::kGeneralLinear;
}

absl::StatusOr<std::size_t> Count(double v, const char* name, double min) {
  if (!(v >= min) || v != std::floor(v) || v > 1e12) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "'%s' must be an integer >= %.0f, got %g", name, min, v));
  }
  return static_cast<std::size_t>(v);
}

absl::StatusOr<AveragingMode> ParseMode(const std::string& name) {
  if (name == "private") return AveragingMode::kPrivate;
  if (name == "non-private") return AveragingMode::kNonPrivate;
  return absl::InvalidArgumentError(absl::StrFormat(
      "unknown mode '%s' (private|non-private)", name));
}

const char* ModeName(AveragingMode mode) {
  return mode == AveragingMode::kPrivate ? "private" : "non-private";
}

// Every parameter of one cell, resolved and validated.
struct Resolved {
  std::size_t n = 0;
  std::size_t p = 0;
  double epsilon = 1.0;
  std::string family;

  // bernstein, onebit
  int k = 0;
  int h = 1;
  double beta = 0.05;
  std::string loss;
  std::string constraint;
  double radius = 0.5;
  std::size_t grid_cap = bernstein_erm::kDefaultGridCap;

  glm_erm::GlmErmConfig glm;
  query_release::MarginalsConfig marginals;
  query_release::SmoothConfig smooth;
  std::vector<double> widths;
  std::vector<double> center;
  double bound = 1.0;
};

absl::StatusOr<Resolved> Resolve(const ExperimentConfig& cfg, const Cell& cell,
                                 std::optional<RawDataset> const* file) {
  Resolved r;
  const Mechanism m = cfg.mechanism;
  r.family = cfg.dataset.path.empty()
                 ? (cfg.dataset.family.empty() ? DefaultFamily(m)
                                               : cfg.dataset.family)
                 : "file";
  if (file != nullptr && file->has_value()) {
    r.n = (*file)->n;
    r.p = (*file)->p;
  } else {
    ASSIGN_OR_RETURN(r.n, Count(cfg.Number(cell, "n", 1000), "n", 1));
    double p_default = 1;
    if (IsGlm(m)) p_default = 5;
    if (m == Mechanism::kMarginals) p_default = 8;
    if (m == Mechanism::kSmoothQueries) p_default = 2;
    ASSIGN_OR_RETURN(r.p, Count(cfg.Number(cell, "p", p_default), "p", 1));
  }
  if (m == Mechanism::kAvgBench && r.p != 1) {
    return absl::InvalidArgumentError("avg-bench works on one column (p = 1)");
  }
  r.epsilon = cfg.Number(cell, "epsilon", IsGlm(m) ? 2.0 : 1.0);
  if (!(r.epsilon > 0) || !std::isfinite(r.epsilon)) {
    return absl::InvalidArgumentError("'epsilon' must be positive");
  }
  ASSIGN_OR_RETURN(const PrivacyBudget budget, PrivacyBudget::Create(r.epsilon));

  switch (m) {
    case Mechanism::kBernstein:
    case Mechanism::kOneBit: {
      if (m == Mechanism::kOneBit) RETURN_IF_ERROR(budget.RequireOneBitRegime());
      ASSIGN_OR_RETURN(r.h, Count(cfg.Number(cell, "h", 1), "h", 1));
      r.beta = cfg.Number(cell, "beta", 0.05);
      if (!(r.beta > 0 && r.beta < 1)) {
        return absl::InvalidArgumentError("'beta' must be in (0, 1)");
      }
      ASSIGN_OR_RETURN(const std::size_t k, Count(cfg.Number(cell, "k", 0), "k", 0));
      r.k = k == 0 ? bernstein_erm::RecommendedK(r.n, static_cast<int>(r.p), r.h,
                                                 r.epsilon, r.beta)
                   : static_cast<int>(k);
      ASSIGN_OR_RETURN(r.grid_cap, Count(cfg.Number(cell, "grid_cap",
                                                    bernstein_erm::kDefaultGridCap),
                                         "grid_cap", 1));
      const double points = std::pow(r.k + 1.0, static_cast<double>(r.p));
      if (points > static_cast<double>(r.grid_cap)) {
        return absl::ResourceExhaustedError(absl::StrFormat(
            "(k+1)^p = %.0f grid points exceeds grid_cap %d; lower k", points,
            r.grid_cap));
      }
      r.loss = cfg.String("loss", "quadratic");
      if (r.loss != "quadratic" && r.loss != "absolute") {
        return absl::InvalidArgumentError(absl::StrFormat(
            "unknown cube loss '%s' (quadratic|absolute)", r.loss));
      }
      r.constraint = cfg.String("constraint", "cube");
      r.radius = cfg.Number(cell, "radius", 0.5);
      if (r.constraint != "cube" && r.constraint != "ball") {
        return absl::InvalidArgumentError(absl::StrFormat(
            "unknown constraint '%s' (cube|ball)", r.constraint));
      }
      if (r.constraint == "ball" && !(r.radius > 0 && r.radius <= 0.5)) {
        return absl::InvalidArgumentError("ball radius must be in (0, 0.5]");
      }
      if (r.constraint == "ball" && r.loss == "absolute") {
        return absl::InvalidArgumentError(
            "the absolute loss is supported on the cube constraint only");
      }
      break;
    }
    case Mechanism::kHinge:
    case Mechanism::kGeneralLinear: {
      glm_erm::GlmErmConfig& g = r.glm;
      g.flavor = m == Mechanism::kHinge ? glm_erm::GlmFlavor::kHinge
                                        : glm_erm::GlmFlavor::kGeneralLinear;
      if (m == Mechanism::kGeneralLinear) {
        ASSIGN_OR_RETURN(g.loss, glm_erm::LinearLossByName(cfg.String("loss", "logistic")));
      } else if (cfg.String("loss", "hinge") != "hinge") {
        return absl::InvalidArgumentError("the hinge mechanism uses the hinge loss");
      }
      g.epsilon = r.epsilon;
      g.delta = cfg.Number(cell, "delta", 1e-5);
      ASSIGN_OR_RETURN(const PrivacyBudget with_delta,
                       PrivacyBudget::Create(r.epsilon, g.delta));
      RETURN_IF_ERROR(with_delta.RequirePositiveDelta());
      g.target_alpha = cfg.Number(cell, "alpha", 0.5);
      if (!(g.target_alpha > 0)) {
        return absl::InvalidArgumentError("'alpha' must be positive");
      }
      g.beta_smoothing = cfg.Number(cell, "beta", 0.0);
      if (!(g.beta_smoothing >= 0)) {
        return absl::InvalidArgumentError("'beta' must be >= 0 (0: alpha / 4)");
      }
      ASSIGN_OR_RETURN(const std::size_t d, Count(cfg.Number(cell, "d", 3), "d", 0));
      g.degree = static_cast<int>(d);
      ASSIGN_OR_RETURN(glm_erm::QSampling q,
                       glm_erm::ParseQSampling(cfg.String("q_sampling", "shared")));
      g.q_sampling = q;
      ASSIGN_OR_RETURN(const std::size_t iterations,
                       Count(cfg.Number(cell, "iterations", 0), "iterations", 0));
      g.iterations = static_cast<std::int64_t>(iterations);
      g.radius = cfg.Number(cell, "radius", 1.0);
      if (!(g.radius > 0)) return absl::InvalidArgumentError("'radius' must be positive");
      g.add_noise = cfg.Bool("add_noise", true);
      g.sigma = cfg.Number(cell, "sigma", -1.0);
      ASSIGN_OR_RETURN(const std::size_t sigma_samples,
                       Count(cfg.Number(cell, "sigma_samples", 2000), "sigma_samples", 1));
      g.sigma_samples = static_cast<int>(sigma_samples);
      ASSIGN_OR_RETURN(const std::size_t baseline_iterations,
                       Count(cfg.Number(cell, "baseline_iterations", 10000),
                             "baseline_iterations", 1));
      g.baseline_iterations = static_cast<int>(baseline_iterations);
      break;
    }
    case Mechanism::kMarginals: {
      query_release::MarginalsConfig& q = r.marginals;
      ASSIGN_OR_RETURN(const std::size_t k, Count(cfg.Number(cell, "k", 2), "k", 1));
      q.k = static_cast<int>(k);
      q.gamma = cfg.Number(cell, "gamma", 0.05);
      q.epsilon = r.epsilon;
      ASSIGN_OR_RETURN(q.encoding, query_release::ParseMarginalEncoding(
                                       cfg.String("encoding", "support_monomials")));
      ASSIGN_OR_RETURN(q.mode, ParseMode(cfg.String("mode", "private")));
      q.beta = cfg.Number(cell, "beta", 0.05);
      ASSIGN_OR_RETURN(q.max_dimension,
                       Count(cfg.Number(cell, "max_dimension", q.max_dimension),
                             "max_dimension", 1));
      ASSIGN_OR_RETURN(const polyapprox::OrPolynomial poly,
                       polyapprox::OrPolynomial::Build(q.k, q.gamma));
      RETURN_IF_ERROR(query_release::EnumerateMonomials(r.p, 0, 1).status());
      double count = 1.0;
      for (int i = 1; i <= poly.degree(); ++i) count = count * (r.p + i) / i;
      if (count > static_cast<double>(q.max_dimension)) {
        return absl::ResourceExhaustedError(absl::StrFormat(
            "C(p+t, t) = %.0f coefficients exceeds max_dimension %d; lower k or "
            "raise gamma",
            count, q.max_dimension));
      }
      break;
    }
    case Mechanism::kSmoothQueries: {
      query_release::SmoothConfig& s = r.smooth;
      ASSIGN_OR_RETURN(const std::size_t t, Count(cfg.Number(cell, "t", 8), "t", 1));
      s.t = static_cast<int>(t);
      s.epsilon = r.epsilon;
      ASSIGN_OR_RETURN(s.mode, ParseMode(cfg.String("mode", "private")));
      s.beta = cfg.Number(cell, "beta", 0.05);
      ASSIGN_OR_RETURN(s.max_dimension,
                       Count(cfg.Number(cell, "max_dimension", s.max_dimension),
                             "max_dimension", 1));
      RETURN_IF_ERROR(
          query_release::SmoothBasisSize(r.p, s.t, s.max_dimension).status());
      r.widths = cfg.List("widths", {1.0, 2.0});
      r.center = cfg.List("center", std::vector<double>(r.p, 0.0));
      if (r.widths.empty()) return absl::InvalidArgumentError("'widths' is empty");
      for (double w : r.widths) {
        if (!(w > 0)) return absl::InvalidArgumentError("widths must be positive");
      }
      if (r.center.size() != r.p) {
        return absl::InvalidArgumentError(
            absl::StrFormat("'center' needs %d entries", r.p));
      }
      break;
    }
    case Mechanism::kAvgBench:
      r.bound = cfg.Number(cell, "bound", 1.0);
      if (!(r.bound > 0)) return absl::InvalidArgumentError("'bound' must be positive");
      break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Datasets and their non-private reference values, shared by every cell and
// trial with the same (n, p).

struct Prepared {
  RawDataset raw;
  std::optional<bernstein_erm::CubeDataset> cube;
  double cube_min = 0.0;
  std::optional<glm_erm::BallDataset> ball;
  glm_erm::BaselineResult glm_baseline;
  std::optional<query_release::BinaryDataset> bits;
  std::optional<query_release::BoxDataset> box;
  std::vector<double> smooth_exact;  // one per width
  double mean = 0.0;
};

bernstein_erm::CubeLoss MakeCubeLoss(const std::string& name) {
  if (name == "absolute") {
    return [](std::span<const double> w, std::span<const double> x) {
      double s = 0;
      for (std::size_t j = 0; j < w.size(); ++j) s += std::fabs(w[j] - x[j]);
      return s / static_cast<double>(w.size());
    };
  }
  return [](std::span<const double> w, std::span<const double> x) {
    double s = 0;
    for (std::size_t j = 0; j < w.size(); ++j) s += (w[j] - x[j]) * (w[j] - x[j]);
    return s / static_cast<double>(w.size());
  };
}

absl::StatusOr<bernstein_erm::Constraint> MakeConstraint(const Resolved& r) {
  if (r.constraint == "ball") {
    return bernstein_erm::Constraint::Ball(std::vector<double>(r.p, 0.5), r.radius);
  }
  return bernstein_erm::Constraint::UnitCube(static_cast<int>(r.p));
}

// Exact minimum of the empirical risk: the projected mean for the
// quadratic loss (exact for boxes and balls), coordinate medians for the
// absolute loss on the cube.
absl::StatusOr<double> CubeMinimum(const bernstein_erm::CubeDataset& data,
                                   const Resolved& r) {
  const std::size_t n = data.n(), p = data.p();
  std::vector<double> w(p, 0.0);
  if (r.loss == "quadratic") {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < p; ++j) w[j] += data.record(i)[j];
    }
    for (double& v : w) v /= static_cast<double>(n);
    ASSIGN_OR_RETURN(const bernstein_erm::Constraint c, MakeConstraint(r));
    c.Project(w);
  } else {
    std::vector<double> column(n);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t i = 0; i < n; ++i) column[i] = data.record(i)[j];
      auto mid = column.begin() + static_cast<std::ptrdiff_t>(n / 2);
      std::nth_element(column.begin(), mid, column.end());
      w[j] = *mid;
    }
  }
  return data.EmpiricalRisk(w);
}

double GaussianKernel(std::span<const double> x, std::span<const double> c,
                      double width) {
  double s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += (x[j] - c[j]) * (x[j] - c[j]);
  return std::exp(-s / (2 * width * width));
}

absl::StatusOr<Prepared> Prepare(const ExperimentConfig& cfg, const Resolved& r,
                                 const std::optional<RawDataset>& file) {
  Prepared prep;
  if (file.has_value()) {
    prep.raw = *file;
  } else {
    const Rng rng = Rng(cfg.seed).Split(rng_tags::kDataset, r.n * 1024 + r.p);
    ASSIGN_OR_RETURN(prep.raw, GenerateDataset(cfg.dataset, r.family, r.n, r.p, rng));
  }
  switch (cfg.mechanism) {
    case Mechanism::kBernstein:
    case Mechanism::kOneBit: {
      ASSIGN_OR_RETURN(std::vector<double> records, ToCubeRecords(prep.raw));
      ASSIGN_OR_RETURN(bernstein_erm::CubeDataset cube,
                       bernstein_erm::CubeDataset::Create(
                           r.p, r.p, std::move(records), MakeCubeLoss(r.loss)));
      prep.cube.emplace(std::move(cube));
      ASSIGN_OR_RETURN(prep.cube_min, CubeMinimum(*prep.cube, r));
      break;
    }
    case Mechanism::kHinge:
    case Mechanism::kGeneralLinear: {
      ASSIGN_OR_RETURN(prep.ball, ToBallDataset(prep.raw));
      prep.glm_baseline = glm_erm::ProjectedSubgradientBaseline(
          *prep.ball, glm_erm::RiskLoss(r.glm), r.glm.radius,
          r.glm.baseline_iterations);
      break;
    }
    case Mechanism::kMarginals: {
      ASSIGN_OR_RETURN(prep.bits, ToBinaryDataset(prep.raw));
      break;
    }
    case Mechanism::kSmoothQueries: {
      ASSIGN_OR_RETURN(prep.box, ToBoxDataset(prep.raw));
      for (double width : r.widths) {
        double s = 0;
        for (std::size_t i = 0; i < prep.box->n(); ++i) {
          s += GaussianKernel(prep.box->row(i), r.center, width);
        }
        prep.smooth_exact.push_back(s / static_cast<double>(prep.box->n()));
      }
      break;
    }
    case Mechanism::kAvgBench: {
      if (prep.raw.domain == Domain::kUnitBall) {
        return absl::InvalidArgumentError(
            "avg-bench needs values in [0, bound] (uniform-cube or bernoulli-bits)");
      }
      double s = 0;
      for (double v : prep.raw.features) s += v;
      prep.mean = s / static_cast<double>(prep.raw.n);
      break;
    }
  }
  return prep;
}

// ---------------------------------------------------------------------------
// Trials.

struct TrialOutput {
  ReportRow row;
  ReportRow transcript;
  bool failed = false;
};

struct TrialContext {
  const ExperimentConfig* cfg;
  const Resolved* r;
  const Prepared* prep;
  std::size_t cell;
  int trial;
  Rng rng;
  std::string out_dir;
  // Set for trial 0: write the release and its answers.
  bool write_release;
};

std::string JoinNotes(const RunNotes& notes) {
  return absl::StrJoin(notes.warnings(), "; ");
}

// Fills mechanism columns; returns the declared epsilon check input.
absl::Status RunCube(const TrialContext& ctx, ReportRow& row,
                     Transcript& transcript) {
  const Resolved& r = *ctx.r;
  bernstein_erm::GridProtocolConfig gc;
  gc.k = r.k;
  gc.h = r.h;
  gc.epsilon = r.epsilon;
  gc.mode = ctx.cfg->mechanism == Mechanism::kOneBit
                ? bernstein_erm::GridMode::kOneBit
                : bernstein_erm::GridMode::kLaplacePerPoint;
  gc.grid_cap = r.grid_cap;
  ASSIGN_OR_RETURN(const bernstein_erm::Constraint constraint, MakeConstraint(r));
  // Own copy: the clip counter is per dataset object.
  const bernstein_erm::CubeDataset data(*ctx.prep->cube);
  ASSIGN_OR_RETURN(const bernstein_erm::GridMechanismResult result,
                   bernstein_erm::RunGridMechanism(data, gc, constraint, ctx.rng,
                                                   &transcript));
  row.Set("k", r.k);
  row.Set("h", r.h);
  row.Set("mode", std::string(bernstein_erm::GridModeName(gc.mode)));
  row.Set("loss", r.loss);
  row.Set("err_empirical",
          data.EmpiricalRisk(result.minimum.w) - ctx.prep->cube_min);
  row.Set("baseline_err", ctx.prep->cube_min);
  row.Set("bits_per_player", result.bits_per_player);
  row.Set("max_epsilon_per_player", result.max_epsilon_per_player);
  RunNotes notes = result.notes;
  if (result.clipped_losses > 0) {
    notes.Warn(absl::StrFormat("%d loss values clipped to [0, 1]",
                               result.clipped_losses));
  }
  row.Set("notes", JoinNotes(notes));
  return absl::OkStatus();
}

absl::Status RunGlm(const TrialContext& ctx, ReportRow& row,
                    Transcript& transcript) {
  const Resolved& r = *ctx.r;
  ASSIGN_OR_RETURN(const glm_erm::GlmErmResult result,
                   glm_erm::GlmErmRun(*ctx.prep->ball, r.glm, ctx.rng, &transcript,
                                      &ctx.prep->glm_baseline));
  row.Set("d", result.degree);
  row.Set("alpha", r.glm.target_alpha);
  row.Set("beta", result.beta_smoothing);
  row.Set("delta", r.glm.delta);
  row.Set("mode", r.glm.add_noise ? "private" : "non-private");
  row.Set("flavor", glm_erm::GlmFlavorName(r.glm.flavor));
  row.Set("loss", glm_erm::RiskLoss(r.glm).name);
  row.Set("err_empirical", result.excess_risk);
  row.Set("baseline_err", result.baseline.risk);
  row.Set("reals_per_player", result.reals_per_player);
  row.Set("max_epsilon_per_player", r.epsilon);
  row.Set("notes", JoinNotes(result.notes));
  return absl::OkStatus();
}

std::string BitString(std::span<const std::uint8_t> y) {
  std::string s;
  for (std::uint8_t b : y) s.push_back(b ? '1' : '0');
  return s;
}

absl::Status RunMarginals(const TrialContext& ctx, ReportRow& row,
                          Transcript& transcript) {
  const Resolved& r = *ctx.r;
  const query_release::BinaryDataset& data = *ctx.prep->bits;
  RunNotes notes;
  ASSIGN_OR_RETURN(const query_release::MarginalCoefficientTable table,
                   query_release::MarginalsRelease(data, r.marginals, ctx.rng,
                                                   &notes, &transcript));
  double worst = 0.0;
  std::vector<query_release::QueryAnswer> answers;
  for (const auto& y : query_release::EnumerateDisjunctionQueries(r.p, r.marginals.k)) {
    ASSIGN_OR_RETURN(const query_release::MarginalAnswer a,
                     query_release::AnswerMarginal(table, y));
    worst = std::max(worst, std::fabs(a.answer - query_release::ExactDisjunction(data, y)));
    answers.push_back({BitString(y), a.answer, a.raw});
  }
  row.Set("k", r.marginals.k);
  row.Set("t", table.t);
  row.Set("gamma", r.marginals.gamma);
  row.Set("mode", ModeName(r.marginals.mode));
  row.Set("encoding", query_release::MarginalEncodingName(r.marginals.encoding));
  row.Set("err_empirical", worst);
  row.Set("value_bound", table.value_bound);
  row.Set("max_epsilon_per_player", r.epsilon);
  row.Set("notes", JoinNotes(notes));
  if (ctx.write_release) {
    query_release::ReleaseFile file;
    file.header = {{"mechanism", "marginals"},
                   {"p", FormatNumber(r.p)},
                   {"k", FormatNumber(r.marginals.k)},
                   {"t", FormatNumber(table.t)},
                   {"gamma", FormatNumber(r.marginals.gamma)},
                   {"epsilon", FormatNumber(r.epsilon)},
                   {"n", FormatNumber(data.n())},
                   {"seed", U64(ctx.rng.key())},
                   {"encoding", query_release::MarginalEncodingName(r.marginals.encoding)},
                   {"value_bound", FormatNumber(table.value_bound)}};
    file.values = table.coefficients;
    const std::string stem = absl::StrFormat("marginals_cell%d.csv", ctx.cell);
    RETURN_IF_ERROR(query_release::WriteRelease(
        (fs::path(ctx.out_dir) / "releases" / stem).string(), file));
    RETURN_IF_ERROR(query_release::WriteAnswers(
        (fs::path(ctx.out_dir) / "answers" / stem).string(), answers));
  }
  return absl::OkStatus();
}

absl::Status RunSmooth(const TrialContext& ctx, ReportRow& row,
                       Transcript& transcript) {
  const Resolved& r = *ctx.r;
  RunNotes notes;
  ASSIGN_OR_RETURN(const query_release::CosineCoefficientTable table,
                   query_release::SmoothRelease(*ctx.prep->box, r.smooth, ctx.rng,
                                                &notes, &transcript));
  double worst = 0.0;
  std::vector<query_release::QueryAnswer> answers;
  for (std::size_t q = 0; q < r.widths.size(); ++q) {
    const double width = r.widths[q];
    const std::vector<double> center = r.center;
    ASSIGN_OR_RETURN(
        const std::vector<double> coef,
        query_release::SmoothQueryCoefficients(
            [&](std::span<const double> x) { return GaussianKernel(x, center, width); },
            r.p, r.smooth.t, r.smooth.max_dimension));
    ASSIGN_OR_RETURN(const double answer, query_release::AnswerSmooth(table, coef));
    worst = std::max(worst, std::fabs(answer - ctx.prep->smooth_exact[q]));
    answers.push_back({absl::StrFormat("gaussian_width_%s", FormatNumber(width)),
                       std::clamp(answer, 0.0, 1.0), answer});
  }
  row.Set("t", r.smooth.t);
  row.Set("mode", ModeName(r.smooth.mode));
  row.Set("err_empirical", worst);
  row.Set("value_bound", 1.0);
  row.Set("max_epsilon_per_player", r.epsilon);
  row.Set("notes", JoinNotes(notes));
  if (ctx.write_release) {
    query_release::ReleaseFile file;
    file.header = {{"mechanism", "smooth-queries"},
                   {"p", FormatNumber(r.p)},
                   {"t", FormatNumber(r.smooth.t)},
                   {"epsilon", FormatNumber(r.epsilon)},
                   {"n", FormatNumber(ctx.prep->box->n())},
                   {"seed", U64(ctx.rng.key())}};
    file.values = table.averages;
    const std::string stem = absl::StrFormat("smooth_cell%d.csv", ctx.cell);
    RETURN_IF_ERROR(query_release::WriteRelease(
        (fs::path(ctx.out_dir) / "releases" / stem).string(), file));
    RETURN_IF_ERROR(query_release::WriteAnswers(
        (fs::path(ctx.out_dir) / "answers" / stem).string(), answers));
  }
  return absl::OkStatus();
}

absl::Status RunAvg(const TrialContext& ctx, ReportRow& row,
                    Transcript& transcript) {
  const Resolved& r = *ctx.r;
  for (double v : ctx.prep->raw.features) {
    if (v < 0 || v > r.bound) {
      return absl::InvalidArgumentError("a value lies outside [0, bound]");
    }
  }
  ASSIGN_OR_RETURN(const PrivacyBudget budget, PrivacyBudget::Create(r.epsilon));
  ASSIGN_OR_RETURN(const double avg,
                   LdpAvg1d(ctx.prep->raw.features, r.bound, budget, ctx.rng,
                            &transcript));
  row.Set("mode", "private");
  row.Set("err_empirical", std::fabs(avg - ctx.prep->mean));
  row.Set("value_bound", r.bound);
  row.Set("max_epsilon_per_player", r.epsilon);
  return absl::OkStatus();
}

TrialOutput RunTrial(const TrialContext& ctx) {
  TrialOutput out;
  const ExperimentConfig& cfg = *ctx.cfg;
  const Resolved& r = *ctx.r;
  ReportRow& row = out.row;
  row.Set("trial", ctx.trial);
  row.Set("cell", static_cast<double>(ctx.cell));
  row.Set("mechanism", std::string(MechanismName(cfg.mechanism)));
  row.Set("family", r.family);
  row.Set("n", static_cast<double>(ctx.prep->raw.n));
  row.Set("p", static_cast<double>(r.p));
  row.Set("epsilon", r.epsilon);
  row.Set("seed", U64(ctx.rng.key()));

  Transcript transcript(/*keep_entries=*/false);
  absl::Status status;
  switch (cfg.mechanism) {
    case Mechanism::kBernstein:
    case Mechanism::kOneBit:
      status = RunCube(ctx, row, transcript);
      break;
    case Mechanism::kHinge:
    case Mechanism::kGeneralLinear:
      status = RunGlm(ctx, row, transcript);
      break;
    case Mechanism::kMarginals:
      status = RunMarginals(ctx, row, transcript);
      break;
    case Mechanism::kSmoothQueries:
      status = RunSmooth(ctx, row, transcript);
      break;
    case Mechanism::kAvgBench:
      status = RunAvg(ctx, row, transcript);
      break;
  }
  if (status.ok()) {
    double spent = 0;
    const std::string s = row.Get("max_epsilon_per_player");
    if (!s.empty()) spent = std::stod(s);
    if (spent > r.epsilon * (1 + kBudgetSlack)) {
      status = absl::InternalError(absl::StrFormat(
          "per-player spend %.17g exceeds the declared epsilon %.17g", spent,
          r.epsilon));
    }
  }
  if (status.ok()) {
    row.Set("status", "ok");
  } else {
    out.failed = true;
    row.Set("status", absl::StatusCodeToString(status.code()));
    row.Set("notes", std::string(status.message()));
  }
  if (row.Get("bits_per_player").empty() && transcript.num_messages() > 0) {
    row.Set("bits_per_player", transcript.BitsPerPlayer());
  }
  if (row.Get("reals_per_player").empty() && transcript.num_messages() > 0) {
    row.Set("reals_per_player", transcript.RealsPerPlayer());
  }

  ReportRow& tr = out.transcript;
  tr.Set("trial", ctx.trial);
  tr.Set("cell", static_cast<double>(ctx.cell));
  tr.Set("mechanism", std::string(MechanismName(cfg.mechanism)));
  tr.Set("n", static_cast<double>(ctx.prep->raw.n));
  tr.Set("messages", static_cast<double>(transcript.num_messages()));
  tr.Set("total_bits", static_cast<double>(transcript.total_bits()));
  tr.Set("total_reals", static_cast<double>(transcript.total_reals()));
  tr.Set("bits_per_player", transcript.BitsPerPlayer());
  tr.Set("reals_per_player", transcript.RealsPerPlayer());
  return out;
}

// Runs task(i) for i in [0, count) on `workers` threads.
template <typename Task>
void ParallelFor(std::size_t count, int workers, const Task& task) {
  const std::size_t threads =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, workers)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

// Least-squares slope of log(median error) against log(n), per epsilon.
std::vector<ReportRow> AvgBenchSlopes(const std::vector<ReportRow>& rows) {
  std::map<double, std::map<double, std::vector<double>>> by_eps;
  for (const ReportRow& row : rows) {
    if (row.Get("status") != "ok") continue;
    by_eps[std::stod(row.Get("epsilon"))][std::stod(row.Get("n"))].push_back(
        std::stod(row.Get("err_empirical")));
  }
  std::vector<ReportRow> out;
  for (auto& [eps, by_n] : by_eps) {
    if (by_n.size() < 2) continue;
    std::vector<std::pair<double, double>> pts;
    for (auto& [n, errs] : by_n) {
      std::sort(errs.begin(), errs.end());
      const std::size_t m = errs.size();
      const double median =
          m % 2 ? errs[m / 2] : 0.5 * (errs[m / 2 - 1] + errs[m / 2]);
      if (median > 0) pts.emplace_back(std::log(n), std::log(median));
    }
    if (pts.size() < 2) continue;
    double mx = 0, my = 0;
    for (auto [x, y] : pts) {
      mx += x;
      my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (auto [x, y] : pts) {
      sxy += (x - mx) * (y - my);
      sxx += (x - mx) * (x - mx);
    }
    ReportRow row;
    row.Set("epsilon", eps);
    row.Set("points", static_cast<double>(pts.size()));
    row.Set("slope", sxy / sxx);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

const char* GitDescribe() { return LDP_ERM_GIT_DESCRIBE; }

int DefaultWorkers() {
  if (const char* env = std::getenv("LDP_ERM_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

absl::Status ValidateConfig(const ExperimentConfig& config) {
  std::optional<RawDataset> file;
  if (!config.dataset.path.empty()) {
    ASSIGN_OR_RETURN(file, LoadCsvDataset(config.dataset.path, IsGlm(config.mechanism)));
  }
  for (const Cell& cell : config.Cells()) {
    RETURN_IF_ERROR(Resolve(config, cell, &file).status());
  }
  return absl::OkStatus();
}

absl::StatusOr<RunSummary> RunExperiment(const ExperimentConfig& config,
                                         const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<RawDataset> file;
  if (!config.dataset.path.empty()) {
    ASSIGN_OR_RETURN(file, LoadCsvDataset(config.dataset.path, IsGlm(config.mechanism)));
  }
  const std::vector<Cell> cells = config.Cells();
  std::vector<Resolved> resolved;
  for (const Cell& cell : cells) {
    ASSIGN_OR_RETURN(Resolved r, Resolve(config, cell, &file));
    resolved.push_back(std::move(r));
  }

  std::error_code ec;
  fs::create_directories(options.out_dir, ec);
  if (ec) {
    return absl::InvalidArgumentError(
        absl::StrFormat("cannot create %s: %s", options.out_dir, ec.message()));
  }
  if (config.mechanism == Mechanism::kMarginals ||
      config.mechanism == Mechanism::kSmoothQueries) {
    fs::create_directories(fs::path(options.out_dir) / "releases", ec);
    fs::create_directories(fs::path(options.out_dir) / "answers", ec);
  }

  // Datasets by (n, p), in first-use order. A dataset that cannot be built
  // is a configuration problem (wrong family for the mechanism).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> dataset_index;
  std::vector<Prepared> datasets;
  std::vector<std::size_t> cell_dataset(cells.size());
  json dataset_log = json::array();
  if (config.trials > 0) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto key = std::make_pair(resolved[c].n, resolved[c].p);
      auto it = dataset_index.find(key);
      if (it == dataset_index.end()) {
        ASSIGN_OR_RETURN(Prepared prep, Prepare(config, resolved[c], file));
        it = dataset_index.emplace(key, datasets.size()).first;
        datasets.push_back(std::move(prep));
        dataset_log.push_back({{"n", key.first}, {"p", key.second},
                               {"family", resolved[c].family},
                               {"stream_index", key.first * 1024 + key.second}});
      }
      cell_dataset[c] = it->second;
    }
  }

  const std::size_t trials = static_cast<std::size_t>(config.trials);
  const std::size_t total = cells.size() * trials;
  std::vector<TrialOutput> outputs(total);
  const Rng master(config.seed);
  ParallelFor(total, options.workers, [&](std::size_t i) {
    const std::size_t c = i / trials;
    const int trial = static_cast<int>(i % trials);
    TrialContext ctx{&config,
                     &resolved[c],
                     &datasets[cell_dataset[c]],
                     c,
                     trial,
                     master.Split(rng_tags::kTrial, (c << 20) + trial),
                     options.out_dir,
                     trial == 0};
    outputs[i] = RunTrial(ctx);
  });

  RunSummary summary;
  summary.cells = cells.size();
  summary.trials_run = total;
  std::vector<ReportRow> transcripts;
  for (TrialOutput& o : outputs) {
    summary.failures += o.failed;
    summary.rows.push_back(std::move(o.row));
    transcripts.push_back(std::move(o.transcript));
  }

  const fs::path out(options.out_dir);
  json outputs_log = json::array({"report.csv", "transcript_summary.csv"});
  RETURN_IF_ERROR(WriteCsv((out / "report.csv").string(), ReportColumns(), summary.rows));
  RETURN_IF_ERROR(WriteCsv((out / "transcript_summary.csv").string(),
                           TranscriptColumns(), transcripts));
  const std::vector<std::string> own = MechanismReportColumns(config.mechanism);
  if (!own.empty()) {
    const std::string name =
        absl::StrFormat("%s_report.csv", std::string(MechanismName(config.mechanism)));
    RETURN_IF_ERROR(WriteCsv((out / name).string(), own, summary.rows));
    outputs_log.push_back(name);
  }
  if (config.mechanism == Mechanism::kAvgBench) {
    summary.slopes = AvgBenchSlopes(summary.rows);
    RETURN_IF_ERROR(WriteCsv((out / "avg_bench_slope.csv").string(),
                             {"epsilon", "points", "slope"}, summary.slopes));
    outputs_log.push_back("avg_bench_slope.csv");
  }

  json manifest = config.ToJson();
  const double wall = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  manifest["run"] = {{"git_describe", GitDescribe()},
                     {"cells", summary.cells},
                     {"trials_run", summary.trials_run},
                     {"failures", summary.failures},
                     {"trial_stream", "Rng(seed).Split(0x71, (cell << 20) + trial)"},
                     {"datasets", dataset_log},
                     {"outputs", outputs_log},
                     {"wall_time_seconds", wall}};
  std::ofstream mf(out / "manifest.json");
  mf << manifest.dump(2) << "\n";
  if (!mf) return absl::InternalError("cannot write manifest.json");
  return summary;
}

}  // namespace ldp::harness
