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

#ifndef EPIPRIV_HEATMAP_H_
#define EPIPRIV_HEATMAP_H_

#include <span>
#include <vector>

#include "epipriv/geometry.h"

namespace epipriv {

struct GridBounds {
  double xmin = 0.0;
  double xmax = 1.0;
  double ymin = 0.0;
  double ymax = 1.0;
};

// Rectangular raster of Gaussian-KDE intensity evaluated at cell centers.
// Values integrate (cell area times sum) to the number of input points when
// the grid extends well past the point cloud.
struct HeatGrid {
  GridBounds bounds;
  int nx = 0;
  int ny = 0;
  double bandwidth = 0.0;
  std::vector<double> values;  // row-major: values[iy * nx + ix]

  double cell_width() const { return (bounds.xmax - bounds.xmin) / nx; }
  double cell_height() const { return (bounds.ymax - bounds.ymin) / ny; }
  double cell_area() const { return cell_width() * cell_height(); }
  double at(int ix, int iy) const { return values[iy * nx + ix]; }

  // Cell-center coordinates.
  double x_center(int ix) const {
    return bounds.xmin + (ix + 0.5) * cell_width();
  }
  double y_center(int iy) const {
    return bounds.ymin + (iy + 0.5) * cell_height();
  }

  // Total mass: sum of values times cell area.
  double mass() const;

  // (ix, iy) of the highest cell.
  std::pair<int, int> argmax() const;
};

// Isotropic Gaussian KDE on a regular grid:
//   value(c) = sum_i exp(-d(c, p_i)^2 / (2 sigma^2)) / (2 pi sigma^2).
// Throws ValidationError on empty points, non-positive bandwidth or
// resolution, or degenerate (zero-area) bounds.
HeatGrid render_heatmap(std::span<const GeoPoint> points, double bandwidth,
                        const GridBounds& bounds, int nx, int ny);

// Bounds covering the point cloud plus `margin_bandwidths` bandwidths on
// every side; the default margin keeps essentially all kernel mass on-grid.
GridBounds auto_bounds(std::span<const GeoPoint> points, double bandwidth,
                       double margin_bandwidths = 6.0);

}  // namespace epipriv

#endif  // EPIPRIV_HEATMAP_H_
