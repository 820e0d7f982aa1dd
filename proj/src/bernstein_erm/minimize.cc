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


#include "ldp/bernstein_erm/minimize.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace ldp::bernstein_erm {
namespace {

constexpr std::array<unsigned, 16> kPrimes = {2,  3,  5,  7,  11, 13, 17, 19,
                                              23, 29, 31, 37, 41, 43, 47, 53};

double ValueOnly(const Objective& f, std::span<const double> w) {
  return f(w, {});
}

double SquaredDistance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return acc;
}

// Projected gradient descent from w (modified in place); returns the value.
double Descend(const Objective& f, const Constraint& constraint,
               const MinimizeOptions& options, std::vector<double>& w) {
  const std::size_t p = w.size();
  std::vector<double> grad(p), trial(p);
  double value = f(w, grad);
  double step = 1.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    bool accepted = false;
    while (step > 1e-14) {
      for (std::size_t a = 0; a < p; ++a) trial[a] = w[a] - step * grad[a];
      constraint.Project(trial);
      const double moved = SquaredDistance(trial, w);
      if (moved == 0.0) break;
      const double trial_value = ValueOnly(f, trial);
      if (trial_value <= value - 1e-4 * moved / step) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const double moved = std::sqrt(SquaredDistance(trial, w));
    w.swap(trial);
    value = f(w, grad);
    step = std::min(step * 2.0, 1e6);
    if (moved < options.step_tolerance) break;
  }
  return value;
}

void Refine(const Objective& f, const Constraint& constraint,
            const MinimizeOptions& options, MinimizeResult& best) {
  double radius = options.refine_radius;
  std::vector<double> probe = best.w;
  for (int sweep = 0; sweep < options.refine_sweeps; ++sweep) {
    for (int axis = 0; axis < constraint.p(); ++axis) {
      double t_lo, t_hi;
      constraint.AxisRange(best.w, axis, &t_lo, &t_hi);
      t_lo = std::max(t_lo, -radius);
      t_hi = std::min(t_hi, radius);
      if (!(t_hi > t_lo)) continue;
      const double base = best.w[axis];
      auto along = [&](double t) {
        probe = best.w;
        probe[axis] = base + t;
        constraint.Project(probe);
        return ValueOnly(f, probe);
      };
      const double t = GoldenSection(along, t_lo, t_hi);
      // Endpoints too: the golden search misses boundary minima by ~tol.
      for (double cand : {t, t_lo, t_hi}) {
        const double v = along(cand);
        if (v < best.value) {
          best.value = v;
          best.w = probe;
        }
      }
    }
    radius *= 0.5;
  }
}

}  // namespace

std::vector<double> HaltonPoint(unsigned index, int p) {
  std::vector<double> point(p);
  for (int a = 0; a < p; ++a) {
    const unsigned base = kPrimes[a % kPrimes.size()];
    double f = 1.0, r = 0.0;
    unsigned i = index + 1;  // skip the all-zero point
    while (i > 0) {
      f /= base;
      r += f * (i % base);
      i /= base;
    }
    point[a] = r;
  }
  return point;
}

double GoldenSection(const std::function<double(double)>& g, double lo,
                     double hi, double tol) {
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double gc = g(c), gd = g(d);
  while (b - a > tol) {
    if (gc <= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - ratio * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + ratio * (b - a);
      gd = g(d);
    }
  }
  return 0.5 * (a + b);
}

MinimizeResult MinimizeMultiStart(const Objective& f,
                                  const Constraint& constraint,
                                  const MinimizeOptions& options) {
  const int p = constraint.p();
  MinimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  // The center is always tried so a single start is still meaningful.
  for (int s = 0; s <= options.starts; ++s) {
    std::vector<double> w(p);
    if (s == 0) {
      w = constraint.center();
    } else {
      const std::vector<double> h = HaltonPoint(s - 1, p);
      for (int a = 0; a < p; ++a) {
        w[a] = constraint.lower()[a] +
               h[a] * (constraint.upper()[a] - constraint.lower()[a]);
      }
    }
    constraint.Project(w);
    const double value = Descend(f, constraint, options, w);
    if (value < best.value) {
      best.value = value;
      best.w = w;
    }
  }
  Refine(f, constraint, options, best);
  return best;
}

MinimizeResult DenseGridMinimize(
    const std::function<double(std::span<const double>)>& f,
    const Constraint& constraint, double step) {
  const int p = constraint.p();
  std::vector<int> counts(p);
  std::size_t total = 1;
  for (int a = 0; a < p; ++a) {
    counts[a] = static_cast<int>(std::floor(
                    (constraint.upper()[a] - constraint.lower()[a]) / step +
                    1e-9)) + 1;
    total *= static_cast<std::size_t>(counts[a]);
  }
  MinimizeResult best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<double> w(p);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (int a = p - 1; a >= 0; --a) {
      const int j = static_cast<int>(rest % counts[a]);
      rest /= counts[a];
      w[a] = std::min(constraint.lower()[a] + step * j, constraint.upper()[a]);
    }
    if (!constraint.Contains(w)) continue;
    const double v = f(w);
    if (v < best.value) {
      best.value = v;
      best.w = w;
    }
  }
  if (best.w.empty()) {
    best.w = constraint.center();
    best.value = f(best.w);
  }
  MinimizeOptions options;
  options.refine_radius = 2 * step;
  options.refine_sweeps = 3;
  Refine([&f](std::span<const double> x, std::span<double>) { return f(x); },
         constraint, options, best);
  return best;
}

}  // namespace ldp::bernstein_erm
