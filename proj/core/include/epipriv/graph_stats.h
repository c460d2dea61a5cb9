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

#ifndef EPIPRIV_GRAPH_STATS_H_
#define EPIPRIV_GRAPH_STATS_H_

#include <cstdint>
#include <vector>

#include "epipriv/contact_graph.h"

namespace epipriv {

std::int64_t count_edges(const ContactGraph& g);

// Unordered node triples with all three edges present.
std::int64_t count_triangles(const ContactGraph& g);

// Betweenness centrality per node: for node i, the sum over unordered pairs
// {j, j'} (j != j' != i, j' reachable from j) of the fraction of shortest
// j-j' paths passing through i. Unnormalized pair sums (no division by
// (N-1)(N-2)/2).
std::vector<double> betweenness(const ContactGraph& g);

// Closeness centrality per node: 1 / sum of shortest-path lengths to the
// nodes reachable from it. Isolated nodes get 0.
std::vector<double> closeness(const ContactGraph& g);

// Degree distribution d_k/N for k = 0..N-1.
std::vector<double> degree_distribution(const ContactGraph& g);

// Edgewise shared-partner distribution: for each edge, the number of common
// neighbors of its endpoints; entry k (k = 0..N-2) is the fraction of edges
// with exactly k shared partners. All-zero for an edgeless graph.
std::vector<double> espd(const ContactGraph& g);

// Geodesic distance distribution over all unordered node pairs. Entry
// d-1 (d = 1..N-1) is the fraction of pairs at shortest-path distance d;
// the final entry is the unreachable bucket. Length N.
std::vector<double> gdd(const ContactGraph& g);

// All seven statistics of the structural utility suite in one pass.
struct GraphStats {
  std::int64_t num_edges = 0;
  std::int64_t num_triangles = 0;
  std::vector<double> betweenness;
  std::vector<double> closeness;
  std::vector<double> degree_dist;
  std::vector<double> espd;
  std::vector<double> gdd;  // last entry: unreachable bucket
};

GraphStats compute_stats(const ContactGraph& g);

}  // namespace epipriv

#endif  // EPIPRIV_GRAPH_STATS_H_
