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

#include "epipriv/doppelganger.h"

#include <cmath>

#include "epipriv/error.h"

namespace epipriv {

void DoppelgangerParams::validate() const {
  if (k < 1) {
    throw ValidationError("doppelganger k must be >= 1, got " +
                          std::to_string(k));
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw ValidationError("utility radius r must be positive");
  }
  if (!(r_prime >= r) || !std::isfinite(r_prime)) {
    throw ValidationError("confusion radius r' must satisfy r' >= r");
  }
  if (epsilon.kind() != BudgetKind::kPerUnitDistance) {
    throw ValidationError("doppelganger budget must be per-unit-distance");
  }
}

namespace {

void sample_points(const GeoPoint& p, const DoppelgangerParams& params,
                   RandomSource& rng, std::vector<GeoPoint>& out) {
  const PrivacyBudget per_point = params.per_point_budget();
  out.clear();
  out.reserve(params.k);
  for (int i = 0; i < params.k; ++i) {
    out.push_back(perturb_location(p, per_point, rng));
  }
}

double binomial_se(double p_hat, int reps) {
  return std::sqrt(p_hat * (1.0 - p_hat) / reps);
}

}  // namespace

DoppelgangerSet generate_doppelganger(const GeoPoint& p,
                                      const DoppelgangerParams& params,
                                      RandomSource& rng,
                                      std::string origin_id) {
  params.validate();
  if (params.k < 2) {
    throw ValidationError("a doppelganger set needs k >= 2 locations");
  }
  if (!is_finite(p)) {
    throw ValidationError("origin coordinates must be finite");
  }
  DoppelgangerSet set;
  set.origin_id = std::move(origin_id);
  sample_points(p, params, rng, set.points);
  return set;
}

bool is_effective(const GeoPoint& p, const DoppelgangerSet& set, double r,
                  double r_prime) {
  if (!(r > 0.0) || !(r_prime >= r)) {
    throw ValidationError("effectiveness check needs r' >= r > 0");
  }
  bool near = false;
  bool far = false;
  for (const GeoPoint& q : set.points) {
    const double d = distance(p, q);
    near = near || d < r;
    far = far || d > r_prime;
  }
  return near && far;
}

GeoPoint infer_centroid(const DoppelgangerSet& set) {
  if (set.points.empty()) {
    throw ValidationError("cannot infer a location from an empty set");
  }
  GeoPoint c;
  for (const GeoPoint& q : set.points) {
    c.x += q.x;
    c.y += q.y;
  }
  c.x /= static_cast<double>(set.points.size());
  c.y /= static_cast<double>(set.points.size());
  return c;
}

GeoPoint infer_geometric_median(const DoppelgangerSet& set) {
  if (set.points.empty()) {
    throw ValidationError("cannot infer a location from an empty set");
  }
  GeoPoint m = infer_centroid(set);
  for (int iter = 0; iter < 200; ++iter) {
    double wx = 0.0, wy = 0.0, wsum = 0.0;
    bool at_point = false;
    for (const GeoPoint& q : set.points) {
      const double d = distance(m, q);
      if (d < 1e-12) {
        at_point = true;
        break;
      }
      const double w = 1.0 / d;
      wx += w * q.x;
      wy += w * q.y;
      wsum += w;
    }
    if (at_point) {
      break;
    }
    const GeoPoint next{wx / wsum, wy / wsum};
    const double step = distance(next, m);
    m = next;
    if (step < 1e-12) {
      break;
    }
  }
  return m;
}

DoppelgangerEvaluation evaluate_doppelganger(const DoppelgangerParams& params,
                                             double cutoff, int reps,
                                             RandomSource& rng) {
  params.validate();
  if (!(cutoff > 0.0)) {
    throw ValidationError("re-identification cutoff must be positive");
  }
  if (reps < 1) {
    throw ValidationError("need at least one repetition");
  }
  const GeoPoint origin{0.0, 0.0};
  DoppelgangerSet set;
  int effective = 0;
  int reidentified = 0;
  for (int rep = 0; rep < reps; ++rep) {
    sample_points(origin, params, rng, set.points);
    const GeoPoint inferred = infer_centroid(set);
    const bool hit = distance(inferred, origin) <= cutoff;
    reidentified += hit ? 1 : 0;
    if (params.k == 1) {
      // Baseline: with one release effectiveness degenerates to the
      // re-identification event.
      effective += hit ? 1 : 0;
    } else {
      effective += is_effective(origin, set, params.r, params.r_prime) ? 1 : 0;
    }
  }
  DoppelgangerEvaluation out;
  const double eff = static_cast<double>(effective) / reps;
  const double reid = static_cast<double>(reidentified) / reps;
  out.effectiveness = {eff, binomial_se(eff, reps), reps};
  out.reidentification = {reid, binomial_se(reid, reps), reps};
  return out;
}

Estimate estimate_effectiveness(const DoppelgangerParams& params, int reps,
                                RandomSource& rng) {
  return evaluate_doppelganger(params, params.r, reps, rng).effectiveness;
}

Estimate estimate_reidentification(const DoppelgangerParams& params,
                                   double cutoff, int reps,
                                   RandomSource& rng) {
  return evaluate_doppelganger(params, cutoff, reps, rng).reidentification;
}

double alpha_beta_gap(const DoppelgangerParams& params, double cutoff,
                      int reps, RandomSource& rng) {
  const DoppelgangerEvaluation eval =
      evaluate_doppelganger(params, cutoff, reps, rng);
  return eval.effectiveness.value - eval.reidentification.value;
}

double closed_form_effectiveness(int k, double epsilon, double r) {
  if (k < 2) {
    throw ValidationError("closed-form effectiveness needs k >= 2");
  }
  if (!(epsilon > 0.0) || !(r > 0.0)) {
    throw ValidationError("closed-form effectiveness needs epsilon*r > 0");
  }
  const double p = planar_radius_cdf(epsilon / k, r);
  return 1.0 - std::pow(p, k) - std::pow(1.0 - p, k);
}

}  // namespace epipriv
