#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twspan/geometry.hpp"

namespace twspan {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Undirected graph over the indices of a PointSet. The weight of {i,j} is
// implied: the Euclidean distance |p_i p_j|. Edges are held canonically
// (i < j, sorted lexicographically, no duplicates) so edge lists compare
// directly across graphs on the same point set.
class GeoGraph {
 public:
  GeoGraph(PointSetPtr points, std::vector<Edge> edges)
      : points_(std::move(points)), edges_(std::move(edges)) {
    if (!points_) throw std::invalid_argument("GeoGraph: null point set");
    const std::size_t n = points_->size();
    for (Edge& e : edges_) {
      if (e.first > e.second) std::swap(e.first, e.second);
      if (e.first == e.second) throw std::invalid_argument("GeoGraph: self-loop");
      if (e.second >= n) throw std::invalid_argument("GeoGraph: edge index out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw std::invalid_argument("GeoGraph: duplicate edge");
    }
  }

  const PointSet& points() const { return *points_; }
  const PointSetPtr& points_ptr() const { return points_; }
  std::size_t vertex_count() const { return points_->size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  double edge_length(const Edge& e) const {
    return distance((*points_)[e.first], (*points_)[e.second]);
  }

  double total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges_) s += edge_length(e);
    return s;
  }

  bool has_edge(VertexId a, VertexId b) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
  }

 private:
  PointSetPtr points_;
  std::vector<Edge> edges_;
};

struct WeightedNeighbor {
  VertexId to;
  double length;
};

using AdjacencyList = std::vector<std::vector<WeightedNeighbor>>;

inline AdjacencyList adjacency_list(const GeoGraph& g) {
  AdjacencyList adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const double w = g.edge_length(e);
    adj[e.first].push_back({e.second, w});
    adj[e.second].push_back({e.first, w});
  }
  return adj;
}

inline std::size_t max_degree(const GeoGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.first];
    ++deg[e.second];
  }
  std::size_t best = 0;
  for (std::size_t d : deg) best = std::max(best, d);
  return best;
}

/// Union of two canonical edge lists, duplicates merged.
inline std::vector<Edge> merge_edge_sets(std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  for (Edge& e : a) {
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace twspan
