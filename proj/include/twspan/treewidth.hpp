#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twspan/abstract_graph.hpp"

namespace twspan {

// Tree of bags over vertex indices. Bag i holds the vertices of node i; the
// nodes form a tree via tree_edges. Valid iff the bags cover all vertices,
// every edge fits inside some bag, and each vertex's occurrences induce a
// connected subtree.
struct TreeDecomposition {
  std::vector<std::vector<std::uint32_t>> bags;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
};

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

struct DecompositionCheck {
  bool valid = false;
  int width = -1;
};

inline constexpr std::uint32_t kExactTreewidthLimit = 20;

namespace detail {

// Bags from an elimination order: eliminating v connects its current
// neighborhood into a clique; bag(v) = {v} + that neighborhood. The bag of v
// hangs off the bag of the next-eliminated vertex it contains.
inline TreewidthResult decomposition_from_order(const AbstractGraph& g,
                                                const std::vector<std::uint32_t>& order) {
  const std::uint32_t n = g.vertex_count();
  TreewidthResult result;
  if (n == 0) return result;

  std::vector<std::set<std::uint32_t>> adj(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  std::vector<std::uint32_t> position(n);
  for (std::uint32_t i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<std::vector<std::uint32_t>> bags(n);
  int width = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t v = order[i];
    std::vector<std::uint32_t> nbrs(adj[v].begin(), adj[v].end());
    bags[i].push_back(v);
    bags[i].insert(bags[i].end(), nbrs.begin(), nbrs.end());
    std::sort(bags[i].begin(), bags[i].end());
    width = std::max(width, static_cast<int>(nbrs.size()));
    for (std::uint32_t a : nbrs) {
      adj[a].erase(v);
      for (std::uint32_t b : nbrs) {
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
      }
    }
    adj[v].clear();
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> tree_edges;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t v = order[i];
    std::uint32_t parent = n;  // n = no parent yet
    for (std::uint32_t w : bags[i]) {
      if (w == v) continue;
      if (parent == n || position[w] < position[parent]) parent = w;
    }
    if (parent != n) {
      tree_edges.push_back({i, position[parent]});
    } else if (i + 1 < n) {
      // isolated component root: chain to the next bag to keep one tree
      tree_edges.push_back({i, i + 1});
    }
  }

  result.width = width;
  result.decomposition.bags = std::move(bags);
  result.decomposition.tree_edges = std::move(tree_edges);
  return result;
}

// Number of vertices outside S+{v} reachable from v through S only: the
// degree v would have when eliminated right after the set S.
inline int elimination_degree(const std::vector<std::uint32_t>& adj_mask, std::uint32_t v,
                              std::uint32_t s_mask) {
  std::uint32_t reach = adj_mask[v];
  std::uint32_t frontier = reach & s_mask;
  std::uint32_t visited = frontier;
  while (frontier != 0) {
    std::uint32_t expand = 0;
    while (frontier != 0) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      expand |= adj_mask[u];
    }
    reach |= expand;
    frontier = expand & s_mask & ~visited;
    visited |= frontier;
  }
  return std::popcount(reach & ~s_mask & ~(1u << v));
}

}  // namespace detail

// Exact tree-width by dynamic programming over subsets of eliminated
// vertices (the elimination-ordering characterisation). 2^n table, hard cap
// n = 20. Also reconstructs an optimal order and emits a witness
// decomposition of exactly that width.
inline TreewidthResult exact_treewidth(const AbstractGraph& g) {
  const std::uint32_t n = g.vertex_count();
  if (n > kExactTreewidthLimit) {
    throw std::invalid_argument("exact_treewidth: more than 20 vertices");
  }
  if (n == 0) return TreewidthResult{};

  std::vector<std::uint32_t> adj_mask(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t w : g.neighbors(v)) adj_mask[v] |= 1u << w;
  }

  const std::uint32_t full = (n == 32) ? 0xFFFFFFFFu : ((1u << n) - 1);
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
    std::uint32_t rest = s;
    while (rest != 0) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint32_t prev = s & ~(1u << v);
      const int q = detail::elimination_degree(adj_mask, v, prev);
      const std::uint8_t cand =
          std::max<std::uint8_t>(table[prev], static_cast<std::uint8_t>(q));
      best = std::min(best, cand);
    }
    table[s] = best;
  }

  // Walk back from the full set: peel off, at each step, the first vertex
  // realising the optimum; that vertex is eliminated last among the set.
  std::vector<std::uint32_t> order(n);
  std::uint32_t s = full;
  for (std::uint32_t i = n; i-- > 0;) {
    std::uint32_t rest = s;
    while (rest != 0) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint32_t prev = s & ~(1u << v);
      const int q = detail::elimination_degree(adj_mask, v, prev);
      if (std::max<int>(table[prev], q) == table[s]) {
        order[i] = static_cast<std::uint32_t>(v);
        s = prev;
        break;
      }
    }
  }

  TreewidthResult result = detail::decomposition_from_order(g, order);
  result.width = table[full];
  return result;
}

// Min-fill elimination ordering; always yields a valid decomposition whose
// width upper-bounds the exact tree-width. Ties: fewest fill edges, then
// smallest current degree, then smallest index.
inline TreewidthResult heuristic_treewidth_upper(const AbstractGraph& g) {
  const std::uint32_t n = g.vertex_count();
  if (n == 0) return TreewidthResult{};

  std::vector<std::set<std::uint32_t>> adj(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  }
  std::vector<bool> gone(n, false);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t step = 0; step < n; ++step) {
    std::uint32_t best = n;
    std::size_t best_fill = 0, best_deg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::size_t fill = 0;
      for (auto it = adj[v].begin(); it != adj[v].end(); ++it) {
        for (auto jt = std::next(it); jt != adj[v].end(); ++jt) {
          if (!adj[*it].count(*jt)) ++fill;
        }
      }
      if (best == n || fill < best_fill ||
          (fill == best_fill && adj[v].size() < best_deg)) {
        best = v;
        best_fill = fill;
        best_deg = adj[v].size();
      }
    }
    order.push_back(best);
    gone[best] = true;
    std::vector<std::uint32_t> nbrs(adj[best].begin(), adj[best].end());
    for (std::uint32_t a : nbrs) {
      adj[a].erase(best);
      for (std::uint32_t b : nbrs) {
        if (a < b) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
      }
    }
    adj[best].clear();
  }
  return detail::decomposition_from_order(g, order);
}

// Checks the three tree-decomposition conditions; throws if the node/edge
// structure is not a tree at all.
inline DecompositionCheck validate_decomposition(const AbstractGraph& g,
                                                 const TreeDecomposition& td) {
  const std::size_t nodes = td.bags.size();
  if (nodes == 0) {
    if (!td.tree_edges.empty()) throw std::invalid_argument("decomposition: edges without bags");
    return {g.vertex_count() == 0, -1};
  }
  if (td.tree_edges.size() != nodes - 1) {
    throw std::invalid_argument("decomposition: node/edge count is not a tree");
  }
  std::vector<std::vector<std::uint32_t>> tadj(nodes);
  for (auto [a, b] : td.tree_edges) {
    if (a >= nodes || b >= nodes || a == b) {
      throw std::invalid_argument("decomposition: bad tree edge");
    }
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<bool> seen(nodes, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t y : tadj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != nodes) throw std::invalid_argument("decomposition: tree is disconnected");
  }

  const std::uint32_t n = g.vertex_count();
  int width = -1;
  std::vector<std::vector<std::uint32_t>> occurrences(n);
  for (std::uint32_t i = 0; i < nodes; ++i) {
    width = std::max(width, static_cast<int>(td.bags[i].size()) - 1);
    for (std::uint32_t v : td.bags[i]) {
      if (v >= n) return {false, width};
      occurrences[v].push_back(i);
    }
  }
  // condition 1: bags cover V
  for (std::uint32_t v = 0; v < n; ++v) {
    if (occurrences[v].empty()) return {false, width};
  }
  // condition 2: every edge inside some bag
  for (const Edge& e : g.edges()) {
    bool found = false;
    for (std::uint32_t i : occurrences[e.first]) {
      if (std::find(td.bags[i].begin(), td.bags[i].end(), e.second) != td.bags[i].end()) {
        found = true;
        break;
      }
    }
    if (!found) return {false, width};
  }
  // condition 3: occurrences of each vertex form a connected subtree
  for (std::uint32_t v = 0; v < n; ++v) {
    std::vector<bool> in_occ(nodes, false);
    for (std::uint32_t i : occurrences[v]) in_occ[i] = true;
    std::vector<bool> seen(nodes, false);
    std::vector<std::uint32_t> stack{occurrences[v].front()};
    seen[occurrences[v].front()] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (std::uint32_t y : tadj[x]) {
        if (in_occ[y] && !seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != occurrences[v].size()) return {false, width};
  }
  return {true, width};
}

}  // namespace twspan
