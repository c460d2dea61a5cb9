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

#include "epipriv/experiments.h"

#include <cmath>
#include <limits>

#include "epipriv/doppelganger.h"
#include "epipriv/graph_stats.h"

namespace epipriv {

namespace {

DoppelgangerParams sweep_params(int k, double r_eps) {
  DoppelgangerParams params;
  params.k = k;
  params.r = 1.0;
  params.r_prime = 1.0;
  params.epsilon = PrivacyBudget(r_eps, BudgetKind::kPerUnitDistance);
  return params;
}

}  // namespace

std::vector<DoppelgangerSweepCell> run_effectiveness_sweep(
    int reps, const RandomSource& base) {
  std::vector<DoppelgangerSweepCell> cells;
  std::uint64_t task = 0;
  for (int k = 2; k <= 10; ++k) {
    for (double r_eps : sweep_r_eps_grid()) {
      RandomSource rng = base.substream(1000 + task++);
      const DoppelgangerParams params = sweep_params(k, r_eps);
      const DoppelgangerEvaluation eval =
          evaluate_doppelganger(params, params.r, reps, rng);
      DoppelgangerSweepCell cell;
      cell.k = k;
      cell.r_eps = r_eps;
      cell.effectiveness = eval.effectiveness.value;
      cell.effectiveness_se = eval.effectiveness.std_error;
      cell.closed_form = closed_form_effectiveness(k, r_eps, 1.0);
      cell.reidentification = eval.reidentification.value;
      cell.reidentification_se = eval.reidentification.std_error;
      // Guard with the exact binomial SE so a zero empirical SE (all hits)
      // cannot make the check vacuous.
      const double se = std::max(
          cell.effectiveness_se,
          std::sqrt(cell.closed_form * (1.0 - cell.closed_form) / reps));
      cell.matches_closed_form =
          std::abs(cell.effectiveness - cell.closed_form) <= 3.0 * se;
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<GapSweepCell> run_gap_sweep(int reps, const RandomSource& base) {
  std::vector<GapSweepCell> cells;
  std::uint64_t task = 0;
  for (int k = 1; k <= 10; ++k) {
    for (double r_eps : sweep_r_eps_grid()) {
      RandomSource rng = base.substream(2000 + task++);
      const DoppelgangerParams params = sweep_params(k, r_eps);
      GapSweepCell cell;
      cell.k = k;
      cell.r_eps = r_eps;
      cell.gap = alpha_beta_gap(params, params.r, reps, rng);
      cells.push_back(cell);
    }
  }
  return cells;
}

double rr_expected_edges(int n, std::int64_t m, double epsilon) {
  const double all_pairs = static_cast<double>(n) * (n - 1) / 2.0;
  const double pi = rr_flip_probability(epsilon);
  return static_cast<double>(m) * (1.0 - pi) + (all_pairs - m) * pi;
}

namespace {

struct MeanSd {
  double mean = 0.0;
  double sd = 0.0;
};

MeanSd summarize(const std::vector<double>& values) {
  MeanSd out;
  const double n = static_cast<double>(values.size());
  for (double v : values) {
    out.mean += v;
  }
  out.mean /= n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) {
      ss += (v - out.mean) * (v - out.mean);
    }
    out.sd = std::sqrt(ss / (n - 1.0));
  }
  return out;
}

}  // namespace

std::vector<NetworkSummaryRow> run_network_summary(int reps,
                                                   const RandomSource& base) {
  RandomSource fixture_rng(kDefaultCtnSeed);
  const SimulatedCtn fixture = simulate_ctn(100, default_cluster_spec(),
                                            kDefaultContactDistance,
                                            fixture_rng);

  std::vector<NetworkSummaryRow> rows;
  {
    NetworkSummaryRow original;
    original.mechanism = "original";
    original.mean_edges = static_cast<double>(count_edges(fixture.graph));
    original.mean_triangles =
        static_cast<double>(count_triangles(fixture.graph));
    rows.push_back(original);
  }

  std::uint64_t task = 0;
  for (double eps : gi_epsilon_grid()) {
    const PrivacyBudget budget(eps, BudgetKind::kPerNode);
    std::vector<double> edges(reps), triangles(reps);
    for (int rep = 0; rep < reps; ++rep) {
      RandomSource rng = base.substream(3000 + task++);
      const ContactGraph g = sanitize_gi(fixture.locations, budget,
                                         kDefaultContactDistance, rng);
      edges[rep] = static_cast<double>(count_edges(g));
      triangles[rep] = static_cast<double>(count_triangles(g));
    }
    const MeanSd e = summarize(edges);
    const MeanSd t = summarize(triangles);
    rows.push_back({"gi", eps, e.mean, e.sd, t.mean, t.sd, 0.0});
  }
  for (double eps : rr_epsilon_grid()) {
    const PrivacyBudget budget(eps, BudgetKind::kPerEdgePair);
    std::vector<double> edges(reps), triangles(reps);
    for (int rep = 0; rep < reps; ++rep) {
      RandomSource rng = base.substream(4000 + task++);
      const ContactGraph g = sanitize_rr(fixture.graph, budget, rng);
      edges[rep] = static_cast<double>(count_edges(g));
      triangles[rep] = static_cast<double>(count_triangles(g));
    }
    const MeanSd e = summarize(edges);
    const MeanSd t = summarize(triangles);
    rows.push_back({"rr", eps, e.mean, e.sd, t.mean, t.sd,
                    rr_expected_edges(fixture.graph.node_count(),
                                      count_edges(fixture.graph), eps)});
  }
  return rows;
}

}  // namespace epipriv
