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

#ifndef EPIPRIV_GEOMETRY_H_
#define EPIPRIV_GEOMETRY_H_

#include <cmath>

namespace epipriv {

// Planar location in dimensionless units; whatever unit the caller's radii
// and distance cutoffs are expressed in.
struct GeoPoint {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const GeoPoint& a, const GeoPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline bool is_finite(const GeoPoint& p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

}  // namespace epipriv

#endif  // EPIPRIV_GEOMETRY_H_
