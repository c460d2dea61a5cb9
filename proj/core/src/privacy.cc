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

#include "epipriv/privacy.h"

#include <cmath>
#include <numbers>

#include "epipriv/error.h"

namespace epipriv {

std::string to_string(BudgetKind kind) {
  switch (kind) {
    case BudgetKind::kPerDataset:
      return "per-dataset";
    case BudgetKind::kPerNode:
      return "per-node";
    case BudgetKind::kPerEdgePair:
      return "per-edge-pair";
    case BudgetKind::kPerUnitDistance:
      return "per-unit-distance";
  }
  return "unknown";
}

PrivacyBudget::PrivacyBudget(double epsilon, BudgetKind kind)
    : epsilon_(epsilon), kind_(kind) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("privacy budget epsilon must be positive and finite, got " +
                          std::to_string(epsilon));
  }
}

PrivacyBudget PrivacyBudget::split(int parts) const {
  if (parts < 1) {
    throw ValidationError("budget split requires parts >= 1");
  }
  return PrivacyBudget(epsilon_ / parts, kind_);
}

Sensitivity::Sensitivity(double delta1) : delta1_(delta1) {
  if (!(delta1 > 0.0) || !std::isfinite(delta1)) {
    throw ValidationError("sensitivity delta1 must be positive and finite, got " +
                          std::to_string(delta1));
  }
}

double sample_laplace(double scale, RandomSource& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ValidationError("Laplace scale must be positive and finite, got " +
                          std::to_string(scale));
  }
  // Inverse CDF on u ~ Unif[0,1): x = -b * sgn(u - 1/2) * ln(1 - 2|u - 1/2|).
  const double u = rng.uniform() - 0.5;
  const double sign = u < 0.0 ? -1.0 : 1.0;
  return -scale * sign * std::log1p(-2.0 * std::abs(u));
}

double laplace_cdf(double b, double x) {
  if (x < 0.0) {
    return 0.5 * std::exp(x / b);
  }
  return 1.0 - 0.5 * std::exp(-x / b);
}

double laplace_scale(const Sensitivity& sens, const PrivacyBudget& budget) {
  return sens.delta1() / budget.epsilon();
}

double sanitize_scalar(double value, const Sensitivity& sens,
                       const PrivacyBudget& budget, RandomSource& rng) {
  return value + sample_laplace(laplace_scale(sens, budget), rng);
}

namespace {

double sample_exponential(double rate, RandomSource& rng) {
  // u in [0,1), so log1p(-u) is finite.
  return -std::log1p(-rng.uniform()) / rate;
}

}  // namespace

PlanarOffset sample_planar_offset(const PrivacyBudget& budget,
                                  RandomSource& rng) {
  if (budget.kind() != BudgetKind::kPerUnitDistance) {
    throw ValidationError(
        "planar Laplace requires a per-unit-distance budget, got kind " +
        to_string(budget.kind()));
  }
  const double eps = budget.epsilon();
  const double radius =
      sample_exponential(eps, rng) + sample_exponential(eps, rng);
  const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return {radius * std::cos(theta), radius * std::sin(theta)};
}

double planar_radius_cdf(double epsilon, double r) {
  if (r <= 0.0) {
    return 0.0;
  }
  const double t = epsilon * r;
  return 1.0 - std::exp(-t) * (1.0 + t);
}

GeoPoint perturb_location(const GeoPoint& p, const PrivacyBudget& budget,
                          RandomSource& rng) {
  if (!is_finite(p)) {
    throw ValidationError("location coordinates must be finite");
  }
  const PlanarOffset offset = sample_planar_offset(budget, rng);
  return {p.x + offset.dx, p.y + offset.dy};
}

namespace {

BudgetKind common_kind(std::span<const PrivacyBudget> budgets,
                       const char* what) {
  if (budgets.empty()) {
    throw ValidationError(std::string(what) + " requires a nonempty budget list");
  }
  const BudgetKind kind = budgets.front().kind();
  for (const PrivacyBudget& b : budgets) {
    if (b.kind() != kind) {
      throw ValidationError(std::string(what) + " cannot mix budget kinds " +
                            to_string(kind) + " and " + to_string(b.kind()));
    }
  }
  return kind;
}

}  // namespace

PrivacyBudget compose_sequential(std::span<const PrivacyBudget> budgets) {
  const BudgetKind kind = common_kind(budgets, "sequential composition");
  double total = 0.0;
  for (const PrivacyBudget& b : budgets) {
    total += b.epsilon();
  }
  return PrivacyBudget(total, kind);
}

PrivacyBudget compose_parallel(std::span<const PrivacyBudget> budgets) {
  const BudgetKind kind = common_kind(budgets, "parallel composition");
  double worst = 0.0;
  for (const PrivacyBudget& b : budgets) {
    worst = std::max(worst, b.epsilon());
  }
  return PrivacyBudget(worst, kind);
}

}  // namespace epipriv
