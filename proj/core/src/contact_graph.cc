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

#include "epipriv/contact_graph.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "epipriv/error.h"

namespace epipriv {

ContactGraph::ContactGraph(int node_count,
                           std::vector<std::pair<int, int>> edges)
    : node_count_(node_count) {
  if (node_count < 1) {
    throw ValidationError("graph needs at least one node");
  }
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i == j) {
      throw ValidationError("self-loop at node " + std::to_string(i));
    }
    if (i < 0 || j < 0 || i >= node_count || j >= node_count) {
      throw ValidationError("edge (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") references a missing node");
    }
    edges_.emplace_back(std::min(i, j), std::max(i, j));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw ValidationError("duplicate edge in edge list");
  }
  adjacency_.resize(node_count);
  for (auto [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (std::vector<int>& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }
}

bool ContactGraph::has_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= node_count_ || j >= node_count_ || i == j) {
    return false;
  }
  const std::vector<int>& nbrs = adjacency_[i];
  return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

int ContactGraph::degree(int i) const {
  return static_cast<int>(adjacency_[i].size());
}

ContactGraph build_ctn(std::span<const GeoPoint> locations,
                       double contact_distance) {
  if (locations.size() < 2) {
    throw ValidationError("contact network needs at least two locations");
  }
  if (!(contact_distance > 0.0) || !std::isfinite(contact_distance)) {
    throw ValidationError("contact distance must be positive");
  }
  for (const GeoPoint& p : locations) {
    if (!is_finite(p)) {
      throw ValidationError("location coordinates must be finite");
    }
  }
  const int n = static_cast<int>(locations.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (distance(locations[i], locations[j]) <= contact_distance) {
        edges.emplace_back(i, j);
      }
    }
  }
  return ContactGraph(n, std::move(edges));
}

ContactGraph sanitize_gi(std::span<const GeoPoint> locations,
                         const PrivacyBudget& budget, double contact_distance,
                         RandomSource& rng) {
  if (budget.kind() != BudgetKind::kPerNode) {
    throw ValidationError("GI network release requires a per-node budget");
  }
  // The per-node loss is spent through the planar Laplace sampler, whose
  // epsilon is a per-unit-distance rate of the same magnitude.
  const PrivacyBudget sampler(budget.epsilon(), BudgetKind::kPerUnitDistance);
  std::vector<GeoPoint> sanitized;
  sanitized.reserve(locations.size());
  for (const GeoPoint& p : locations) {
    sanitized.push_back(perturb_location(p, sampler, rng));
  }
  return build_ctn(sanitized, contact_distance);
}

double rr_flip_probability(double epsilon) {
  if (epsilon < 0.0 || !std::isfinite(epsilon)) {
    throw ValidationError("randomized-response epsilon must be >= 0");
  }
  return 1.0 / (1.0 + std::exp(epsilon));
}

namespace {

ContactGraph flip_pairs(const ContactGraph& graph,
                        std::span<const double> flip_probability,
                        RandomSource& rng) {
  const int n = graph.node_count();
  std::vector<std::pair<int, int>> edges;
  std::size_t pair_index = 0;
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++pair_index) {
      const bool edge = graph.has_edge(i, j);
      const bool flip = rng.bernoulli(flip_probability[pair_index]);
      if (edge != flip) {
        edges.emplace_back(i, j);
      }
    }
  }
  return ContactGraph(n, std::move(edges));
}

}  // namespace

ContactGraph sanitize_rr(const ContactGraph& graph,
                         const PrivacyBudget& budget, RandomSource& rng) {
  if (budget.kind() != BudgetKind::kPerEdgePair) {
    throw ValidationError("RR network release requires a per-edge-pair budget");
  }
  const int n = graph.node_count();
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::vector<double> pi(pairs, rr_flip_probability(budget.epsilon()));
  return flip_pairs(graph, pi, rng);
}

ContactGraph sanitize_rr(const ContactGraph& graph,
                         std::span<const double> epsilon_per_pair,
                         RandomSource& rng) {
  const int n = graph.node_count();
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (epsilon_per_pair.size() != pairs) {
    throw ValidationError("expected " + std::to_string(pairs) +
                          " per-pair budgets, got " +
                          std::to_string(epsilon_per_pair.size()));
  }
  std::vector<double> pi(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    if (!(epsilon_per_pair[p] > 0.0)) {
      throw ValidationError("per-pair epsilons must be positive");
    }
    pi[p] = rr_flip_probability(epsilon_per_pair[p]);
  }
  return flip_pairs(graph, pi, rng);
}

void ClusterSpec::validate() const {
  if (cluster_count < 0 || cluster_size < 1) {
    throw ValidationError("cluster spec needs cluster_count >= 0 and size >= 1");
  }
  if (!(cluster_sigma > 0.0) || !(region_size > 0.0)) {
    throw ValidationError("cluster sigma and region size must be positive");
  }
}

ClusterSpec default_cluster_spec() { return ClusterSpec{}; }

SimulatedCtn simulate_ctn(int n, const ClusterSpec& spec,
                          double contact_distance, RandomSource& rng) {
  if (n < 2) {
    throw ValidationError("simulation needs n >= 2");
  }
  spec.validate();
  std::vector<GeoPoint> locations;
  locations.reserve(n);
  for (int c = 0; c < spec.cluster_count && static_cast<int>(locations.size()) < n; ++c) {
    const GeoPoint center{rng.uniform(0.0, spec.region_size),
                          rng.uniform(0.0, spec.region_size)};
    for (int m = 0; m < spec.cluster_size && static_cast<int>(locations.size()) < n; ++m) {
      locations.push_back({center.x + spec.cluster_sigma * rng.normal(),
                           center.y + spec.cluster_sigma * rng.normal()});
    }
  }
  while (static_cast<int>(locations.size()) < n) {
    locations.push_back(
        {rng.uniform(0.0, spec.region_size), rng.uniform(0.0, spec.region_size)});
  }
  ContactGraph graph = build_ctn(locations, contact_distance);
  return {std::move(locations), std::move(graph)};
}

}  // namespace epipriv
