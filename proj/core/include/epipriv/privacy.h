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

#ifndef EPIPRIV_PRIVACY_H_
#define EPIPRIV_PRIVACY_H_

#include <span>
#include <string>

#include "epipriv/geometry.h"
#include "epipriv/random.h"

namespace epipriv {

// What one unit of privacy loss is charged against. Budgets of different
// kinds never compose with each other.
enum class BudgetKind {
  kPerDataset,       // classic record-level DP over a whole dataset
  kPerNode,          // per person-node in a contact network
  kPerEdgePair,      // per unordered node pair under randomized response
  kPerUnitDistance,  // geo-indistinguishability loss per distance unit
};

std::string to_string(BudgetKind kind);

// Privacy loss parameter epsilon plus the accounting kind it is charged
// under. Budgets are inert values: sanitizers declare the composition rule
// they apply; nothing here tracks a running total.
class PrivacyBudget {
 public:
  // epsilon must be positive and finite.
  PrivacyBudget(double epsilon, BudgetKind kind);

  double epsilon() const { return epsilon_; }
  BudgetKind kind() const { return kind_; }

  // Same kind, epsilon scaled by 1/parts (e.g. the per-location share when
  // a total budget is split across K releases).
  PrivacyBudget split(int parts) const;

 private:
  double epsilon_;
  BudgetKind kind_;
};

// L1 global sensitivity of the statistic being released. Counting queries
// over disjoint bins have delta1 = 1.
class Sensitivity {
 public:
  explicit Sensitivity(double delta1);
  double delta1() const { return delta1_; }

 private:
  double delta1_;
};

// One draw from Laplace(0, scale), density exp(-|x|/scale) / (2*scale).
// Throws ValidationError unless scale is positive and finite.
double sample_laplace(double scale, RandomSource& rng);

// Laplace CDF at x for scale b.
double laplace_cdf(double b, double x);

// Noise scale the Laplace mechanism uses for this sensitivity and budget.
double laplace_scale(const Sensitivity& sens, const PrivacyBudget& budget);

// Laplace mechanism: value + Laplace(0, delta1/epsilon).
double sanitize_scalar(double value, const Sensitivity& sens,
                       const PrivacyBudget& budget, RandomSource& rng);

struct PlanarOffset {
  double dx = 0.0;
  double dy = 0.0;
};

// Polar Laplace draw: radius ~ gamma(2, epsilon), angle ~ Unif[0, 2*pi).
// The gamma draw is the sum of two Exponential(epsilon) draws, which is
// exact for integer shape. Requires a per-unit-distance budget.
PlanarOffset sample_planar_offset(const PrivacyBudget& budget,
                                  RandomSource& rng);

// CDF of the offset radius, i.e. gamma(2, epsilon) at r:
// 1 - exp(-eps*r) * (1 + eps*r).
double planar_radius_cdf(double epsilon, double r);

// Geo-indistinguishable location release: p translated by a planar Laplace
// offset. Loss is epsilon*gamma within any protection radius gamma.
GeoPoint perturb_location(const GeoPoint& p, const PrivacyBudget& budget,
                          RandomSource& rng);

// Sequential composition: losses add. All budgets must share one kind.
PrivacyBudget compose_sequential(std::span<const PrivacyBudget> budgets);

// Parallel composition over disjoint data partitions: the max loss.
// Disjointness is the caller's assertion; all budgets must share one kind.
PrivacyBudget compose_parallel(std::span<const PrivacyBudget> budgets);

}  // namespace epipriv

#endif  // EPIPRIV_PRIVACY_H_
