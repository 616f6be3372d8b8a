// Copyright 2026 The pclab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PCLAB_STATS_H_
#define PCLAB_STATS_H_

#include <span>
#include <vector>

namespace pclab {

struct PowerFit {
  double slope = 0;
  double intercept = 0;  // natural log of the constant
  double r_squared = 0;
  std::vector<double> residuals;  // log-space, per point
};

// Least squares of log(y) against log(x). Needs two or more points with
// positive coordinates and at least two distinct x.
PowerFit FitLogLog(std::span<const double> x, std::span<const double> y);

// Best C for y ~ C * g under least squares, and per-point relative
// residuals (y - C g) / (C g).
struct ScaleFit {
  double constant = 0;
  std::vector<double> relative_residuals;
  double max_abs_residual = 0;
};
ScaleFit FitScale(std::span<const double> g, std::span<const double> y);

}  // namespace pclab

#endif  // PCLAB_STATS_H_
