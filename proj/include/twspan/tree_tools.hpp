#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twspan/geo_graph.hpp"

namespace twspan {

namespace detail {

// Edge-induced view of a GeoGraph: the vertices actually touched by edges,
// in ascending order, plus adjacency restricted to them. Tree operations run
// on this view so that subtrees of a larger point set stay first-class.
struct TreeView {
  std::vector<VertexId> vertices;
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  std::size_t max_degree = 0;
};

inline TreeView edge_induced_view(const std::vector<Edge>& edges) {
  TreeView view;
  for (const Edge& e : edges) {
    view.adj[e.first].push_back(e.second);
    view.adj[e.second].push_back(e.first);
  }
  view.vertices.reserve(view.adj.size());
  for (const auto& [v, nbrs] : view.adj) {
    view.vertices.push_back(v);
    view.max_degree = std::max(view.max_degree, nbrs.size());
  }
  std::sort(view.vertices.begin(), view.vertices.end());
  for (auto& [v, nbrs] : view.adj) std::sort(nbrs.begin(), nbrs.end());
  return view;
}

// Throws unless the edges form a single connected acyclic graph.
inline TreeView tree_view(const GeoGraph& g) {
  TreeView view = edge_induced_view(g.edges());
  if (view.vertices.empty()) throw std::invalid_argument("tree operation: graph has no edges");
  if (g.edges().size() + 1 != view.vertices.size()) {
    throw std::invalid_argument("tree operation: input is not a tree");
  }
  std::vector<VertexId> stack{view.vertices.front()};
  std::unordered_map<VertexId, bool> seen{{view.vertices.front(), true}};
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : view.adj.at(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != view.vertices.size()) {
    throw std::invalid_argument("tree operation: input is not a tree");
  }
  return view;
}

struct RootedSizes {
  VertexId root;
  std::unordered_map<VertexId, VertexId> parent;
  std::unordered_map<VertexId, std::size_t> size;
};

inline RootedSizes rooted_subtree_sizes(const TreeView& view, VertexId root) {
  RootedSizes r;
  r.root = root;
  std::vector<VertexId> order;
  order.reserve(view.vertices.size());
  std::vector<VertexId> stack{root};
  r.parent[root] = root;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (VertexId w : view.adj.at(v)) {
      if (!r.parent.count(w)) {
        r.parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    r.size[*it] += 1;
    if (*it != root) r.size[r.parent[*it]] += r.size[*it];
  }
  return r;
}

inline VertexId vertex_separator_of_view(const TreeView& view) {
  const std::size_t n = view.vertices.size();
  const RootedSizes rooted = rooted_subtree_sizes(view, view.vertices.front());
  for (VertexId v : view.vertices) {
    bool ok = true;
    for (VertexId w : view.adj.at(v)) {
      const std::size_t side =
          (rooted.parent.at(w) == v) ? rooted.size.at(w) : n - rooted.size.at(v);
      if (2 * side > n) {
        ok = false;
        break;
      }
    }
    if (ok) return v;
  }
  throw std::logic_error("tree separator vertex must exist");
}

// Edge incident to the separator vertex toward its largest component; the
// two sides then have sizes in [n/(D+1), n*D/(D+1)] for tree degree D.
inline Edge edge_separator_of_view(const TreeView& view) {
  if (view.vertices.size() < 2) {
    throw std::invalid_argument("tree_edge_separator: need at least 2 vertices");
  }
  const VertexId v = vertex_separator_of_view(view);
  const RootedSizes rooted = rooted_subtree_sizes(view, v);
  VertexId best = view.adj.at(v).front();
  std::size_t best_size = 0;
  for (VertexId w : view.adj.at(v)) {
    if (rooted.size.at(w) > best_size) {
      best_size = rooted.size.at(w);
      best = w;
    }
  }
  return make_edge(v, best);
}

}  // namespace detail

/// Euclidean minimum spanning tree via dense Prim; deterministic tie-breaks
/// (smallest candidate vertex, first-found parent kept on equal distance).
inline GeoGraph emst(const PointSetPtr& ps) {
  const std::size_t n = ps->size();
  if (n == 0) throw std::invalid_argument("emst: empty point set");
  std::vector<Edge> edges;
  if (n > 1) {
    const PointSet& pts = *ps;
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<VertexId> parent(n, 0);
    std::vector<bool> used(n, false);
    used[0] = true;
    for (std::size_t i = 1; i < n; ++i) {
      const double d = distance(pts[0], pts[i]);
      best[i] = d;
    }
    for (std::size_t round = 1; round < n; ++round) {
      std::size_t pick = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (!used[v] && (pick == n || best[v] < best[pick])) pick = v;
      }
      used[pick] = true;
      edges.push_back(make_edge(parent[pick], static_cast<VertexId>(pick)));
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        const double d = distance(pts[pick], pts[v]);
        if (d < best[v]) {
          best[v] = d;
          parent[v] = static_cast<VertexId>(pick);
        }
      }
    }
  }
  return GeoGraph(ps, std::move(edges));
}

/// Minimum spanning tree of a connected GeoGraph (Kruskal, ties by
/// lexicographic index pair).
inline GeoGraph mst_of_graph(const GeoGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> sorted = g.edges();
  std::sort(sorted.begin(), sorted.end(), [&g](const Edge& a, const Edge& b) {
    const double la = g.edge_length(a), lb = g.edge_length(b);
    return la != lb ? la < lb : a < b;
  });
  std::vector<VertexId> uf(n);
  std::iota(uf.begin(), uf.end(), 0u);
  const auto find = [&uf](VertexId v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  std::vector<Edge> tree;
  for (const Edge& e : sorted) {
    const VertexId a = find(e.first), b = find(e.second);
    if (a != b) {
      uf[a] = b;
      tree.push_back(e);
    }
  }
  if (n > 0 && tree.size() + 1 != n) {
    throw std::invalid_argument("mst_of_graph: graph is disconnected");
  }
  return GeoGraph(g.points_ptr(), std::move(tree));
}

/// Vertex whose removal leaves components of size <= n/2 each; smallest such
/// index. Found by one subtree-size scan.
inline VertexId tree_vertex_separator(const GeoGraph& t) {
  return detail::vertex_separator_of_view(detail::tree_view(t));
}

/// Edge whose removal splits the tree into sides of size within
/// [n/(D+1), n*D/(D+1)], D the maximum degree.
inline Edge tree_edge_separator(const GeoGraph& t) {
  return detail::edge_separator_of_view(detail::tree_view(t));
}

// Result of cutting a tree into subtrees: subtree ids per vertex (-1 for
// vertices the tree does not touch), the removed tree edges in removal
// order, and the subtree count m. Exactly m-1 edges are removed and every
// subtree size lies in [n/((D+1)m), (D+1)n/m].
struct SubtreeSplit {
  std::vector<std::int32_t> assignment;
  std::vector<Edge> removed_edges;
  std::size_t subtree_count = 0;
};

// Repeatedly edge-separate the largest current subtree (ties: smallest
// minimum vertex) until none exceeds (D+1)n/m, then keep splitting until
// exactly m subtrees remain.
inline SubtreeSplit split_into_subtrees(const GeoGraph& t, std::size_t m) {
  const detail::TreeView view = detail::tree_view(t);
  const std::size_t n = view.vertices.size();
  if (m < 1 || m > n) throw std::invalid_argument("split_into_subtrees: need 1 <= m <= n");

  struct Component {
    std::vector<Edge> edges;
    std::vector<VertexId> vertices;  // ascending
  };
  std::vector<Component> comps{{t.edges(), view.vertices}};
  SubtreeSplit out;

  const double threshold =
      static_cast<double>(view.max_degree + 1) * static_cast<double>(n) / static_cast<double>(m);
  const auto largest = [&comps]() {
    std::size_t pick = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
      if (comps[i].vertices.size() > comps[pick].vertices.size() ||
          (comps[i].vertices.size() == comps[pick].vertices.size() &&
           comps[i].vertices.front() < comps[pick].vertices.front())) {
        pick = i;
      }
    }
    return pick;
  };
  const auto split_component = [&comps, &out](std::size_t idx) {
    Component comp = std::move(comps[idx]);
    comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(idx));
    const detail::TreeView cview = detail::edge_induced_view(comp.edges);
    const Edge cut = detail::edge_separator_of_view(cview);
    out.removed_edges.push_back(cut);

    std::unordered_map<VertexId, int> side;
    std::vector<VertexId> stack{cut.first};
    side[cut.first] = 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : cview.adj.at(v)) {
        if ((v == cut.first && w == cut.second) || (v == cut.second && w == cut.first)) continue;
        if (!side.count(w)) {
          side[w] = 0;
          stack.push_back(w);
        }
      }
    }
    Component a, b;
    for (VertexId v : comp.vertices) {
      (side.count(v) ? a : b).vertices.push_back(v);
    }
    for (const Edge& e : comp.edges) {
      if (e == cut) continue;
      (side.count(e.first) ? a : b).edges.push_back(e);
    }
    comps.push_back(std::move(a));
    comps.push_back(std::move(b));
  };

  for (;;) {
    const std::size_t idx = largest();
    if (static_cast<double>(comps[idx].vertices.size()) <= threshold) break;
    split_component(idx);
  }
  while (comps.size() < m) split_component(largest());

  std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
    return a.vertices.front() < b.vertices.front();
  });
  out.subtree_count = comps.size();
  out.assignment.assign(t.vertex_count(), -1);
  for (std::size_t id = 0; id < comps.size(); ++id) {
    for (VertexId v : comps[id].vertices) {
      out.assignment[v] = static_cast<std::int32_t>(id);
    }
  }
  return out;
}

// Vertices incident to removed tree edges, grouped by the subtree they ended
// up in. 2(m-1) endpoints counted with multiplicity; lists deduplicated.
struct RepresentativeSet {
  std::vector<std::vector<VertexId>> per_subtree;

  std::vector<VertexId> all() const {
    std::vector<VertexId> flat;
    for (const auto& reps : per_subtree) flat.insert(flat.end(), reps.begin(), reps.end());
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    return flat;
  }
};

inline RepresentativeSet representatives(const SubtreeSplit& split) {
  RepresentativeSet reps;
  reps.per_subtree.resize(split.subtree_count);
  for (const Edge& e : split.removed_edges) {
    reps.per_subtree[static_cast<std::size_t>(split.assignment[e.first])].push_back(e.first);
    reps.per_subtree[static_cast<std::size_t>(split.assignment[e.second])].push_back(e.second);
  }
  for (auto& list : reps.per_subtree) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return reps;
}

// Scan the tree's edges from long to short (ties: lexicographic index pair)
// and remove an edge iff, in the current forest, both of its sides still
// hold a representative. Afterwards every component has at most one.
inline std::vector<Edge> prune_between_representatives(const GeoGraph& t,
                                                       const std::vector<VertexId>& reps) {
  // accepts a forest; cycles are rejected
  const detail::TreeView view = detail::edge_induced_view(t.edges());
  if (!view.vertices.empty()) {
    std::unordered_map<VertexId, bool> seen;
    std::size_t comp_count = 0;
    for (VertexId start : view.vertices) {
      if (seen[start]) continue;
      ++comp_count;
      std::vector<VertexId> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : view.adj.at(v)) {
          if (!seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
        }
      }
    }
    if (t.edges().size() + comp_count != view.vertices.size()) {
      throw std::invalid_argument("prune_between_representatives: input has a cycle");
    }
  }

  std::vector<bool> is_rep(t.vertex_count(), false);
  for (VertexId r : reps) {
    if (r >= t.vertex_count()) {
      throw std::invalid_argument("prune_between_representatives: representative out of range");
    }
    is_rep[r] = true;
  }

  const std::vector<Edge>& canonical = t.edges();
  std::vector<std::size_t> order(canonical.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double la = t.edge_length(canonical[a]), lb = t.edge_length(canonical[b]);
    return la != lb ? la > lb : canonical[a] < canonical[b];
  });

  std::unordered_map<VertexId, std::vector<std::pair<VertexId, std::size_t>>> adj;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    adj[canonical[i].first].push_back({canonical[i].second, i});
    adj[canonical[i].second].push_back({canonical[i].first, i});
  }

  std::vector<bool> alive(canonical.size(), true);
  std::vector<Edge> removed;
  const auto reps_on_side = [&](VertexId start, std::size_t skip) {
    std::unordered_map<VertexId, bool> seen{{start, true}};
    std::vector<VertexId> stack{start};
    std::size_t count = is_rep[start] ? 1 : 0;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (const auto& [w, idx] : adj.at(v)) {
        if (idx == skip || !alive[idx]) continue;
        if (!seen[w]) {
          seen[w] = true;
          if (is_rep[w]) ++count;
          stack.push_back(w);
        }
      }
    }
    return count;
  };
  for (std::size_t idx : order) {
    const Edge& e = canonical[idx];
    if (reps_on_side(e.first, idx) >= 1 && reps_on_side(e.second, idx) >= 1) {
      removed.push_back(e);
      alive[idx] = false;
    }
  }
  return removed;
}

}  // namespace twspan
