#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twspan/dilation.hpp"
#include "twspan/geo_graph.hpp"

namespace twspan {

// Classical greedy t-spanner: scan all pairs in nondecreasing Euclidean
// distance (ties by index pair) and add {u,v} iff the current graph distance
// exceeds t*|uv|. Each candidate runs a length-bounded Dijkstra on the
// partial spanner; O(n^3 log n) worst case, fine at desk scale.
inline GeoGraph greedy_spanner(const PointSetPtr& ps, double t) {
  if (!(t > 1.0)) throw std::invalid_argument("greedy_spanner: stretch must be > 1");
  const std::size_t n = ps->size();
  if (n == 0) throw std::invalid_argument("greedy_spanner: empty point set");
  const PointSet& pts = *ps;

  struct Candidate {
    double length;
    Edge edge;
  };
  std::vector<Candidate> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (VertexId i = 0; i + 1 < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      pairs.push_back({distance(pts[i], pts[j]), {i, j}});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Candidate& a, const Candidate& b) {
    return a.length != b.length ? a.length < b.length : a.edge < b.edge;
  });

  AdjacencyList adj(n);
  std::vector<Edge> edges;
  std::vector<double> dist(n);
  using Item = std::pair<double, VertexId>;
  for (const Candidate& cand : pairs) {
    const double bound = t * cand.length;
    const auto [u, v] = cand.edge;
    // bounded Dijkstra from u, early exit on reaching v or exceeding bound
    std::fill(dist.begin(), dist.end(), kInfiniteDistance);
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[u] = 0.0;
    heap.push({0.0, u});
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (d > dist[x]) continue;
      if (d > bound || x == v) break;
      for (const WeightedNeighbor& nb : adj[x]) {
        const double nd = d + nb.length;
        if (nd < dist[nb.to] && nd <= bound) {
          dist[nb.to] = nd;
          heap.push({nd, nb.to});
        }
      }
    }
    if (dist[v] > bound) {
      edges.push_back(cand.edge);
      adj[u].push_back({v, cand.length});
      adj[v].push_back({u, cand.length});
    }
  }
  return GeoGraph(ps, std::move(edges));
}

}  // namespace twspan
