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


// Box/ball-constrained minimization of smooth but possibly non-convex
// objectives on low-dimensional cubes.

#ifndef LDP_BERNSTEIN_ERM_MINIMIZE_H_
#define LDP_BERNSTEIN_ERM_MINIMIZE_H_

#include <functional>
#include <span>
#include <vector>

#include "ldp/bernstein_erm/constraint.h"

namespace ldp::bernstein_erm {

// Returns f(w); writes the gradient when `grad` is non-empty.
using Objective = std::function<double(std::span<const double> w,
                                       std::span<double> grad)>;

struct MinimizeOptions {
  int starts = 32;
  int max_iterations = 500;
  double step_tolerance = 1e-10;
  int refine_sweeps = 4;
  double refine_radius = 0.05;
};

struct MinimizeResult {
  std::vector<double> w;
  double value = 0.0;
};

// Point `index` of the Halton sequence in [0,1)^p (bases 2, 3, 5, ...).
std::vector<double> HaltonPoint(unsigned index, int p);

// Multi-start projected gradient descent with Armijo backtracking from
// Halton starts, then coordinate-wise golden-section refinement around the
// best point. Always returns a feasible point.
MinimizeResult MinimizeMultiStart(const Objective& f,
                                  const Constraint& constraint,
                                  const MinimizeOptions& options = {});

// Minimum over the grid {lower + step * j} clipped to the constraint, then
// refined as above. Used as an oracle for p <= 2.
MinimizeResult DenseGridMinimize(
    const std::function<double(std::span<const double>)>& f,
    const Constraint& constraint, double step);

// Golden-section minimum of g on [lo, hi].
double GoldenSection(const std::function<double(double)>& g, double lo,
                     double hi, double tol = 1e-10);

}  // namespace ldp::bernstein_erm

#endif  // LDP_BERNSTEIN_ERM_MINIMIZE_H_
