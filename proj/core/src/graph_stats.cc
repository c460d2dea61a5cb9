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

#include "epipriv/graph_stats.h"

#include <algorithm>
#include <queue>

namespace epipriv {

std::int64_t count_edges(const ContactGraph& g) {
  return static_cast<std::int64_t>(g.edges().size());
}

std::int64_t count_triangles(const ContactGraph& g) {
  // For each edge (i, j) with i < j, count common neighbors above j; every
  // triangle is counted exactly once at its lowest edge.
  std::int64_t triangles = 0;
  for (auto [i, j] : g.edges()) {
    const std::vector<int>& a = g.adjacency()[i];
    const std::vector<int>& b = g.adjacency()[j];
    auto ia = std::upper_bound(a.begin(), a.end(), j);
    auto ib = std::upper_bound(b.begin(), b.end(), j);
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) {
        ++triangles;
        ++ia;
        ++ib;
      } else if (*ia < *ib) {
        ++ia;
      } else {
        ++ib;
      }
    }
  }
  return triangles;
}

std::vector<double> betweenness(const ContactGraph& g) {
  // Brandes' accumulation; dividing by 2 at the end converts ordered-pair
  // sums to the unordered-pair convention.
  const int n = g.node_count();
  std::vector<double> centrality(n, 0.0);
  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::vector<int>> predecessors(n);
  std::vector<int> order;
  order.reserve(n);

  for (int source = 0; source < n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (std::vector<int>& p : predecessors) {
      p.clear();
    }
    order.clear();

    dist[source] = 0;
    sigma[source] = 1.0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      order.push_back(v);
      for (int w : g.adjacency()[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          predecessors[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const int w = *it;
      for (int v : predecessors[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != source) {
        centrality[w] += delta[w];
      }
    }
  }
  for (double& c : centrality) {
    c /= 2.0;
  }
  return centrality;
}

namespace {

// Shortest-path distances from `source`; -1 marks unreachable.
std::vector<int> bfs_distances(const ContactGraph& g, int source) {
  std::vector<int> dist(g.node_count(), -1);
  dist[source] = 0;
  std::queue<int> frontier;
  frontier.push(source);
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : g.adjacency()[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<double> closeness(const ContactGraph& g) {
  const int n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> dist = bfs_distances(g, i);
    std::int64_t total = 0;
    for (int j = 0; j < n; ++j) {
      if (j != i && dist[j] > 0) {
        total += dist[j];
      }
    }
    out[i] = total > 0 ? 1.0 / static_cast<double>(total) : 0.0;
  }
  return out;
}

std::vector<double> degree_distribution(const ContactGraph& g) {
  const int n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    out[g.degree(i)] += 1.0;
  }
  for (double& v : out) {
    v /= n;
  }
  return out;
}

std::vector<double> espd(const ContactGraph& g) {
  const int n = g.node_count();
  std::vector<double> out(std::max(1, n - 1), 0.0);
  if (g.edges().empty()) {
    return out;
  }
  for (auto [i, j] : g.edges()) {
    const std::vector<int>& a = g.adjacency()[i];
    const std::vector<int>& b = g.adjacency()[j];
    int shared = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (*ia == *ib) {
        ++shared;
        ++ia;
        ++ib;
      } else if (*ia < *ib) {
        ++ia;
      } else {
        ++ib;
      }
    }
    out[shared] += 1.0;
  }
  for (double& v : out) {
    v /= static_cast<double>(g.edges().size());
  }
  return out;
}

std::vector<double> gdd(const ContactGraph& g) {
  const int n = g.node_count();
  std::vector<double> out(n, 0.0);
  if (n < 2) {
    return out;
  }
  std::int64_t unreachable = 0;
  for (int i = 0; i < n; ++i) {
    const std::vector<int> dist = bfs_distances(g, i);
    for (int j = i + 1; j < n; ++j) {
      if (dist[j] < 0) {
        ++unreachable;
      } else {
        out[dist[j] - 1] += 1.0;
      }
    }
  }
  const double pairs = static_cast<double>(n) * (n - 1) / 2.0;
  for (double& v : out) {
    v /= pairs;
  }
  out[n - 1] = static_cast<double>(unreachable) / pairs;
  return out;
}

GraphStats compute_stats(const ContactGraph& g) {
  GraphStats stats;
  stats.num_edges = count_edges(g);
  stats.num_triangles = count_triangles(g);
  stats.betweenness = betweenness(g);
  stats.closeness = closeness(g);
  stats.degree_dist = degree_distribution(g);
  stats.espd = espd(g);
  stats.gdd = gdd(g);
  return stats;
}

}  // namespace epipriv
