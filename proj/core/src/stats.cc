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


#include "pclab/stats.h"

#include <algorithm>
#include <cmath>

#include "pclab/errors.h"

namespace pclab {

PowerFit FitLogLog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "fit needs two or more points");
  }
  const size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (size_t k = 0; k < n; ++k) {
    if (x[k] <= 0 || y[k] <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "log-log fit needs positive data");
    }
    lx[k] = std::log(x[k]);
    ly[k] = std::log(y[k]);
  }
  double mx = 0, my = 0;
  for (size_t k = 0; k < n; ++k) {
    mx += lx[k];
    my += ly[k];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (size_t k = 0; k < n; ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
    syy += (ly[k] - my) * (ly[k] - my);
  }
  if (sxx == 0) {
    throw Error(ErrorCode::kInvalidArgument, "fit needs distinct x values");
  }
  PowerFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (size_t k = 0; k < n; ++k) {
    const double r = ly[k] - (fit.intercept + fit.slope * lx[k]);
    fit.residuals.push_back(r);
    sse += r * r;
  }
  fit.r_squared = syy == 0 ? 1.0 : 1.0 - sse / syy;
  return fit;
}

ScaleFit FitScale(std::span<const double> g, std::span<const double> y) {
  if (g.size() != y.size() || g.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "fit needs matching nonempty data");
  }
  double gy = 0, gg = 0;
  for (size_t k = 0; k < g.size(); ++k) {
    gy += g[k] * y[k];
    gg += g[k] * g[k];
  }
  if (gg == 0) throw Error(ErrorCode::kInvalidArgument, "degenerate model");
  ScaleFit fit;
  fit.constant = gy / gg;
  for (size_t k = 0; k < g.size(); ++k) {
    const double model = fit.constant * g[k];
    const double r = (y[k] - model) / model;
    fit.relative_residuals.push_back(r);
    fit.max_abs_residual = std::max(fit.max_abs_residual, std::abs(r));
  }
  return fit;
}

}  // namespace pclab
