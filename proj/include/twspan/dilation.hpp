#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twspan/geo_graph.hpp"

namespace twspan {

inline constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

struct DilationReport {
  double dilation = 1.0;
  Edge witness{0, 0};
  bool connected = true;
};

namespace detail {

// Plain binary-heap Dijkstra; unreachable vertices keep +infinity.
// `bound` allows early exit once every remaining vertex is farther away.
inline std::vector<double> dijkstra(const AdjacencyList& adj, VertexId source,
                                    double bound = kInfiniteDistance) {
  std::vector<double> dist(adj.size(), kInfiniteDistance);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  dist[source] = 0.0;
  heap.push({0.0, source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    if (d > bound) break;
    for (const WeightedNeighbor& nb : adj[v]) {
      const double nd = d + nb.length;
      if (nd < dist[nb.to]) {
        dist[nb.to] = nd;
        heap.push({nd, nb.to});
      }
    }
  }
  return dist;
}

}  // namespace detail

/// Exact graph distances from `source` with Euclidean edge weights.
inline std::vector<double> shortest_paths_from(const GeoGraph& g, VertexId source) {
  if (source >= g.vertex_count()) {
    throw std::invalid_argument("shortest_paths_from: source out of range");
  }
  return detail::dijkstra(adjacency_list(g), source);
}

// Exact dilation oracle: one Dijkstra per source, every pair inspected.
// This is the ground-truth instrument for all spanner checks; no
// approximation. O(n^2 log n) is fine at desk scale.
inline DilationReport dilation(const GeoGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw std::invalid_argument("dilation: need at least 2 points");
  const AdjacencyList adj = adjacency_list(g);
  const PointSet& ps = g.points();

  DilationReport report;
  report.dilation = 0.0;
  for (VertexId s = 0; s + 1 < n; ++s) {
    const std::vector<double> dist = detail::dijkstra(adj, s);
    for (VertexId t = s + 1; t < n; ++t) {
      if (dist[t] == kInfiniteDistance) {
        return DilationReport{kInfiniteDistance, {s, t}, false};
      }
      const double ratio = dist[t] / distance(ps[s], ps[t]);
      if (ratio > report.dilation) {
        report.dilation = ratio;
        report.witness = {s, t};
      }
    }
  }
  return report;
}

inline bool is_connected(const GeoGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  const AdjacencyList adj = adjacency_list(g);
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const WeightedNeighbor& nb : adj[v]) {
      if (!seen[nb.to]) {
        seen[nb.to] = true;
        ++count;
        stack.push_back(nb.to);
      }
    }
  }
  return count == n;
}

}  // namespace twspan
