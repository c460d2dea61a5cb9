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

#ifndef EPIPRIV_EXPERIMENTS_H_
#define EPIPRIV_EXPERIMENTS_H_

#include <string>
#include <vector>

#include "epipriv/contact_graph.h"
#include "epipriv/random.h"

namespace epipriv {

// Doppelganger utility/attack sweep over the number of released locations
// and the radius-loss product. r = r' = 1 without loss of generality; only
// the product r*eps matters, so eps carries the grid value.
struct DoppelgangerSweepCell {
  int k = 0;
  double r_eps = 0.0;
  double effectiveness = 0.0;
  double effectiveness_se = 0.0;
  double closed_form = 0.0;  // exact effectiveness for r = r'; NaN for k = 1
  double reidentification = 0.0;
  double reidentification_se = 0.0;
  bool matches_closed_form = true;  // within 3 binomial SE (k >= 2)
};

inline const std::vector<double>& sweep_r_eps_grid() {
  static const std::vector<double> grid{2.5, 5.0, 10.0, 15.0};
  return grid;
}

// k in [2, 10] x the r*eps grid; each cell uses its own derived substream.
std::vector<DoppelgangerSweepCell> run_effectiveness_sweep(
    int reps, const RandomSource& base);

// Same sweep including the k = 1 single-release baseline, for the
// effectiveness-vs-reidentification gap plot data.
struct GapSweepCell {
  int k = 0;
  double r_eps = 0.0;
  double gap = 0.0;  // (1-beta) - (1-alpha)
};

std::vector<GapSweepCell> run_gap_sweep(int reps, const RandomSource& base);

// Edge/triangle summary of repeated GI- and RR-sanitized releases of the
// frozen 100-node contact network (39 edges, 10 triangles). The base
// network is rebuilt from the frozen generator seed, so rows are comparable
// across runs regardless of the sweep seed.
struct NetworkSummaryRow {
  std::string mechanism;  // "original", "gi", "rr"
  double epsilon = 0.0;   // 0 for the original row
  double mean_edges = 0.0;
  double sd_edges = 0.0;
  double mean_triangles = 0.0;
  double sd_triangles = 0.0;
  double expected_edges = 0.0;  // RR closed form m(1-pi) + (M-m)pi; 0 for GI
};

inline const std::vector<double>& gi_epsilon_grid() {
  static const std::vector<double> grid{0.5, 1.0, 1.5, 2.0};
  return grid;
}
inline const std::vector<double>& rr_epsilon_grid() {
  static const std::vector<double> grid{0.5, 2.0, 3.0, 5.0};
  return grid;
}

std::vector<NetworkSummaryRow> run_network_summary(int reps,
                                                   const RandomSource& base);

// Expected RR edge count: m(1-pi) + (M-m)pi for a base graph with m of the
// M = n(n-1)/2 possible edges present.
double rr_expected_edges(int n, std::int64_t m, double epsilon);

}  // namespace epipriv

#endif  // EPIPRIV_EXPERIMENTS_H_
