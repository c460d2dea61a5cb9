// Copyright 2026 The epipriv Authors
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

#include "epipriv/heatmap.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "epipriv/error.h"

namespace epipriv {

double HeatGrid::mass() const {
  double sum = 0.0;
  for (double v : values) {
    sum += v;
  }
  return sum * cell_area();
}

std::pair<int, int> HeatGrid::argmax() const {
  int best = 0;
  for (int i = 1; i < static_cast<int>(values.size()); ++i) {
    if (values[i] > values[best]) {
      best = i;
    }
  }
  return {best % nx, best / nx};
}

HeatGrid render_heatmap(std::span<const GeoPoint> points, double bandwidth,
                        const GridBounds& bounds, int nx, int ny) {
  if (points.empty()) {
    throw ValidationError("heat map needs at least one point");
  }
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    throw ValidationError("bandwidth must be positive");
  }
  if (nx < 1 || ny < 1) {
    throw ValidationError("grid resolution must be at least 1x1");
  }
  if (!(bounds.xmax > bounds.xmin) || !(bounds.ymax > bounds.ymin)) {
    throw ValidationError("grid bounds must have positive area");
  }
  for (const GeoPoint& p : points) {
    if (!is_finite(p)) {
      throw ValidationError("point coordinates must be finite");
    }
  }

  HeatGrid grid;
  grid.bounds = bounds;
  grid.nx = nx;
  grid.ny = ny;
  grid.bandwidth = bandwidth;
  grid.values.assign(static_cast<std::size_t>(nx) * ny, 0.0);

  const double norm = 1.0 / (2.0 * std::numbers::pi * bandwidth * bandwidth);
  const double inv_two_sigma2 = 1.0 / (2.0 * bandwidth * bandwidth);
  for (int iy = 0; iy < ny; ++iy) {
    const double cy = grid.y_center(iy);
    for (int ix = 0; ix < nx; ++ix) {
      const double cx = grid.x_center(ix);
      double v = 0.0;
      for (const GeoPoint& p : points) {
        const double dx = cx - p.x;
        const double dy = cy - p.y;
        v += std::exp(-(dx * dx + dy * dy) * inv_two_sigma2);
      }
      grid.values[static_cast<std::size_t>(iy) * nx + ix] = v * norm;
    }
  }
  return grid;
}

GridBounds auto_bounds(std::span<const GeoPoint> points, double bandwidth,
                       double margin_bandwidths) {
  if (points.empty()) {
    throw ValidationError("cannot derive bounds from zero points");
  }
  double xmin = std::numeric_limits<double>::infinity();
  double xmax = -xmin;
  double ymin = xmin;
  double ymax = -xmin;
  for (const GeoPoint& p : points) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double margin = margin_bandwidths * bandwidth;
  return {xmin - margin, xmax + margin, ymin - margin, ymax + margin};
}

}  // namespace epipriv
