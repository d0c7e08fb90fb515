#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twspan/geo_graph.hpp"

namespace twspan {

// Simple unweighted undirected graph with sorted neighbor lists. Used for
// grid graphs, minors and tree-width solving; coordinates play no role here.
class AbstractGraph {
 public:
  AbstractGraph() = default;
  explicit AbstractGraph(std::uint32_t n) : adj_(n) {}

  static AbstractGraph from_edges(std::uint32_t n, const std::vector<Edge>& edges) {
    AbstractGraph g(n);
    for (const Edge& e : edges) g.add_edge(e.first, e.second);
    g.finish();
    return g;
  }

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(adj_.size()); }
  const std::vector<std::uint32_t>& neighbors(std::uint32_t v) const { return adj_[v]; }
  std::uint32_t degree(std::uint32_t v) const {
    return static_cast<std::uint32_t>(adj_[v].size());
  }

  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj_) twice += nb.size();
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::uint32_t v = 0; v < vertex_count(); ++v) {
      for (std::uint32_t w : adj_[v]) {
        if (v < w) out.push_back({v, w});
      }
    }
    return out;
  }

  bool empty() const { return adj_.empty(); }

  friend bool operator==(const AbstractGraph& a, const AbstractGraph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  void add_edge(std::uint32_t u, std::uint32_t v) {
    if (u == v) throw std::invalid_argument("AbstractGraph: self-loop");
    if (u >= adj_.size() || v >= adj_.size()) {
      throw std::invalid_argument("AbstractGraph: edge index out of range");
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  void finish() {
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
        throw std::invalid_argument("AbstractGraph: duplicate edge");
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> adj_;
};

/// Drops coordinates; same vertex indices, same edges.
inline AbstractGraph to_abstract(const GeoGraph& g) {
  return AbstractGraph::from_edges(static_cast<std::uint32_t>(g.vertex_count()), g.edges());
}

// Contract vertex u to its neighbor v: u disappears, u's other neighbors are
// rewired to v, parallel edges merge, no self-loop. Vertices above u shift
// down by one so the result is again indexed 0..n-2.
inline AbstractGraph contract(const AbstractGraph& g, std::uint32_t u, std::uint32_t v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || u == v || !g.has_edge(u, v)) {
    throw std::invalid_argument("contract: {u,v} must be an edge");
  }
  const auto relabel = [u](std::uint32_t w) { return w > u ? w - 1 : w; };
  std::vector<Edge> edges;
  for (std::uint32_t a = 0; a < g.vertex_count(); ++a) {
    for (std::uint32_t b : g.neighbors(a)) {
      if (a >= b) continue;
      std::uint32_t x = (a == u) ? v : a;
      std::uint32_t y = (b == u) ? v : b;
      if (x == y) continue;
      edges.push_back(make_edge(relabel(x), relabel(y)));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return AbstractGraph::from_edges(g.vertex_count() - 1, edges);
}

/// Delete an isolated vertex u; vertices above u shift down by one.
inline AbstractGraph remove_vertex(const AbstractGraph& g, std::uint32_t u) {
  if (u >= g.vertex_count()) throw std::invalid_argument("remove_vertex: out of range");
  const auto relabel = [u](std::uint32_t w) { return w > u ? w - 1 : w; };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e.first == u || e.second == u) {
      throw std::invalid_argument("remove_vertex: vertex is not isolated");
    }
    edges.push_back({relabel(e.first), relabel(e.second)});
  }
  return AbstractGraph::from_edges(g.vertex_count() - 1, edges);
}

}  // namespace twspan
