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

// Exhaustive-enumeration reference implementations of the network
// statistics, independent of the library's BFS/Brandes code paths. Only
// viable for tiny graphs; used to cross-check the production algorithms.

#ifndef EPIPRIV_TESTS_BRUTE_FORCE_H_
#define EPIPRIV_TESTS_BRUTE_FORCE_H_

#include <vector>

namespace epipriv::testing {

// Dense adjacency for graphs of at most ~8 nodes.
struct TinyGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;

  explicit TinyGraph(int nodes)
      : n(nodes), adj(nodes, std::vector<bool>(nodes, false)) {}

  void add_edge(int i, int j) {
    adj[i][j] = true;
    adj[j][i] = true;
  }
};

constexpr int kUnreachable = 1 << 20;

// All-pairs shortest distances by Floyd-Warshall.
inline std::vector<std::vector<int>> bf_distances(const TinyGraph& g) {
  std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kUnreachable));
  for (int i = 0; i < g.n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < g.n; ++j) {
      if (g.adj[i][j]) d[i][j] = 1;
    }
  }
  for (int k = 0; k < g.n; ++k) {
    for (int i = 0; i < g.n; ++i) {
      for (int j = 0; j < g.n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

inline std::int64_t bf_edges(const TinyGraph& g) {
  std::int64_t m = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) m += g.adj[i][j];
  }
  return m;
}

inline std::int64_t bf_triangles(const TinyGraph& g) {
  std::int64_t t = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      for (int k = j + 1; k < g.n; ++k) {
        t += g.adj[i][j] && g.adj[j][k] && g.adj[i][k];
      }
    }
  }
  return t;
}

namespace internal {

// Enumerates every simple path from `current` to `target`, recording each
// completed path's interior nodes.
inline void enumerate_paths(const TinyGraph& g, int current, int target,
                            std::vector<bool>& visited,
                            std::vector<int>& path,
                            std::vector<std::vector<int>>& out) {
  if (current == target) {
    out.push_back(path);
    return;
  }
  for (int next = 0; next < g.n; ++next) {
    if (g.adj[current][next] && !visited[next]) {
      visited[next] = true;
      path.push_back(next);
      enumerate_paths(g, next, target, visited, path, out);
      path.pop_back();
      visited[next] = false;
    }
  }
}

}  // namespace internal

// Betweenness by listing all simple paths per unordered pair, keeping the
// shortest ones, and crediting their interior nodes.
inline std::vector<double> bf_betweenness(const TinyGraph& g) {
  std::vector<double> centrality(g.n, 0.0);
  for (int s = 0; s < g.n; ++s) {
    for (int t = s + 1; t < g.n; ++t) {
      std::vector<std::vector<int>> paths;
      std::vector<bool> visited(g.n, false);
      std::vector<int> path;
      visited[s] = true;
      internal::enumerate_paths(g, s, t, visited, path, paths);
      if (paths.empty()) continue;
      std::size_t shortest = paths.front().size();
      for (const std::vector<int>& p : paths) {
        shortest = std::min(shortest, p.size());
      }
      std::vector<const std::vector<int>*> geodesics;
      for (const std::vector<int>& p : paths) {
        if (p.size() == shortest) geodesics.push_back(&p);
      }
      const double sigma = static_cast<double>(geodesics.size());
      for (const std::vector<int>* p : geodesics) {
        for (std::size_t idx = 0; idx + 1 < p->size(); ++idx) {
          centrality[(*p)[idx]] += 1.0 / sigma;  // interior nodes only
        }
      }
    }
  }
  return centrality;
}

inline std::vector<double> bf_closeness(const TinyGraph& g) {
  const std::vector<std::vector<int>> d = bf_distances(g);
  std::vector<double> out(g.n, 0.0);
  for (int i = 0; i < g.n; ++i) {
    long total = 0;
    for (int j = 0; j < g.n; ++j) {
      if (j != i && d[i][j] < kUnreachable) total += d[i][j];
    }
    out[i] = total > 0 ? 1.0 / total : 0.0;
  }
  return out;
}

inline std::vector<double> bf_degree_distribution(const TinyGraph& g) {
  std::vector<double> out(g.n, 0.0);
  for (int i = 0; i < g.n; ++i) {
    int deg = 0;
    for (int j = 0; j < g.n; ++j) deg += g.adj[i][j];
    out[deg] += 1.0 / g.n;
  }
  return out;
}

inline std::vector<double> bf_espd(const TinyGraph& g) {
  std::vector<double> out(std::max(1, g.n - 1), 0.0);
  const std::int64_t m = bf_edges(g);
  if (m == 0) return out;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (!g.adj[i][j]) continue;
      int shared = 0;
      for (int k = 0; k < g.n; ++k) {
        shared += k != i && k != j && g.adj[i][k] && g.adj[j][k];
      }
      out[shared] += 1.0 / static_cast<double>(m);
    }
  }
  return out;
}

inline std::vector<double> bf_gdd(const TinyGraph& g) {
  const std::vector<std::vector<int>> d = bf_distances(g);
  std::vector<double> out(g.n, 0.0);
  const double pairs = static_cast<double>(g.n) * (g.n - 1) / 2.0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (d[i][j] >= kUnreachable) {
        out[g.n - 1] += 1.0 / pairs;
      } else {
        out[d[i][j] - 1] += 1.0 / pairs;
      }
    }
  }
  return out;
}

}  // namespace epipriv::testing

#endif  // EPIPRIV_TESTS_BRUTE_FORCE_H_
