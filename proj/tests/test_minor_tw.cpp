#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "twspan/minor_core.hpp"
#include "twspan/pointgen.hpp"
#include "twspan/treewidth.hpp"

using namespace twspan;

namespace {

AbstractGraph complete_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return AbstractGraph::from_edges(n, edges);
}

AbstractGraph cycle_graph(std::uint32_t n) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return AbstractGraph::from_edges(n, edges);
}

AbstractGraph random_tree_graph(std::uint32_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (std::uint32_t v = 1; v < n; ++v) {
    edges.push_back(make_edge(static_cast<VertexId>(rng() % v), v));
  }
  return AbstractGraph::from_edges(n, edges);
}

// random tree plus `extra` distinct non-tree edges
AbstractGraph random_connected_graph(std::uint32_t n, std::uint32_t extra,
                                     std::mt19937_64& rng) {
  std::vector<Edge> edges;
  std::set<Edge> present;
  for (std::uint32_t v = 1; v < n; ++v) {
    const Edge e = make_edge(static_cast<VertexId>(rng() % v), v);
    edges.push_back(e);
    present.insert(e);
  }
  std::vector<Edge> candidates;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (!present.count({i, j})) candidates.push_back({i, j});
    }
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  for (std::uint32_t i = 0; i < extra && i < candidates.size(); ++i) {
    edges.push_back(candidates[i]);
  }
  return AbstractGraph::from_edges(n, edges);
}

// simple series-parallel graph: grow by replacing or doubling edges with
// two-edge paths; stays K4-minor-free
AbstractGraph random_series_parallel(std::uint32_t ops, std::mt19937_64& rng) {
  std::vector<Edge> edges{{0, 1}};
  std::uint32_t n = 2;
  for (std::uint32_t step = 0; step < ops; ++step) {
    const std::size_t pick = rng() % edges.size();
    const Edge e = edges[pick];
    const VertexId w = n++;
    if (rng() % 2 == 0) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick));  // series
    }
    edges.push_back(make_edge(e.first, w));
    edges.push_back(make_edge(e.second, w));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return AbstractGraph::from_edges(n, edges);
}

bool isomorphic_backtrack(const AbstractGraph& a, const AbstractGraph& b) {
  const std::uint32_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<std::uint32_t> map(n, n);
  std::vector<bool> used(n, false);
  auto degrees_match = [&](std::uint32_t va, std::uint32_t vb) {
    return a.degree(va) == b.degree(vb);
  };
  std::function<bool(std::uint32_t)> place = [&](std::uint32_t v) {
    if (v == n) return true;
    for (std::uint32_t target = 0; target < n; ++target) {
      if (used[target] || !degrees_match(v, target)) continue;
      bool ok = true;
      for (std::uint32_t prev = 0; prev < v && ok; ++prev) {
        ok = a.has_edge(prev, v) == b.has_edge(map[prev], target);
      }
      if (!ok) continue;
      map[v] = target;
      used[target] = true;
      if (place(v + 1)) return true;
      used[target] = false;
      map[v] = n;
    }
    return false;
  };
  return place(0);
}

std::vector<std::uint32_t> degree_sequence(const AbstractGraph& g) {
  std::vector<std::uint32_t> deg;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) deg.push_back(g.degree(v));
  std::sort(deg.begin(), deg.end());
  return deg;
}

}  // namespace

TEST_CASE("vertex contraction") {
  const AbstractGraph path = AbstractGraph::from_edges(3, {{0, 1}, {1, 2}});
  const AbstractGraph contracted = contract(path, 1, 0);
  CHECK(contracted.vertex_count() == 2);
  CHECK(contracted.edges() == std::vector<Edge>{{0, 1}});

  const AbstractGraph triangle = cycle_graph(3);
  const AbstractGraph merged = contract(triangle, 2, 0);
  CHECK(merged.vertex_count() == 2);
  CHECK(merged.edges() == std::vector<Edge>{{0, 1}});  // multi-edge collapsed

  // K4 minus {0,1}: contracting the degree-2 vertex 0 into 2 leaves a triangle
  const AbstractGraph k4_minus =
      AbstractGraph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const AbstractGraph after = contract(k4_minus, 0, 2);
  CHECK(after.vertex_count() == 3);
  CHECK(after.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  CHECK_THROWS_AS(contract(path, 0, 2), std::invalid_argument);
}

TEST_CASE("minor-3-core of basic families") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 10; ++iter) {
    const AbstractGraph tree = random_tree_graph(2 + rng() % 30, rng);
    CHECK(minor3core(tree).core.empty());
  }
  for (std::uint32_t n : {3u, 4u, 9u, 20u}) {
    CHECK(minor3core(cycle_graph(n)).core.empty());
  }
  // one extra chord still means at most one extra cycle after the tree
  const AbstractGraph unicyclic =
      AbstractGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(minor3core(unicyclic).core.empty());

  const AbstractGraph k4 = complete_graph(4);
  const Minor3CoreResult k4core = minor3core(k4);
  CHECK(k4core.core == k4);
  CHECK(k4core.trace.empty());

  // K4 with every edge subdivided once
  std::vector<Edge> sub;
  std::uint32_t next = 4;
  for (const Edge& e : k4.edges()) {
    sub.push_back(make_edge(e.first, next));
    sub.push_back(make_edge(e.second, next));
    ++next;
  }
  const AbstractGraph subdivided = AbstractGraph::from_edges(10, sub);
  const Minor3CoreResult score = minor3core(subdivided);
  CHECK(score.core.vertex_count() == 4);
  CHECK(score.core.edge_count() == 6);
  CHECK(degree_sequence(score.core) == std::vector<std::uint32_t>{3, 3, 3, 3});
}

TEST_CASE("minor-3-core trace replays") {
  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 25; ++iter) {
    const AbstractGraph g = random_connected_graph(6 + rng() % 10, rng() % 6, rng);
    const Minor3CoreResult result = minor3core(g);
    CHECK(replay_contractions(g, result.trace) == result.core);
  }
}

TEST_CASE("minor-3-core is order invariant") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 30; ++iter) {
    const std::uint32_t n = 6 + rng() % 9;
    const AbstractGraph g = random_connected_graph(n, rng() % 8, rng);
    const Minor3CoreResult canonical = minor3core(g);
    for (std::uint64_t shuffle = 0; shuffle < 10; ++shuffle) {
      const Minor3CoreResult other = minor3core_randomized(g, 1000 * iter + shuffle);
      CHECK(other.core.vertex_count() == canonical.core.vertex_count());
      CHECK(other.core.edge_count() == canonical.core.edge_count());
      CHECK(degree_sequence(other.core) == degree_sequence(canonical.core));
      if (n <= 10) {
        CHECK(isomorphic_backtrack(other.core, canonical.core));
      }
    }
  }
}

TEST_CASE("minor-3-core size bound") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 60; ++iter) {
    const std::uint32_t n = 5 + rng() % 20;
    const std::uint32_t extra = 1 + rng() % 8;
    const AbstractGraph g = random_connected_graph(n, extra, rng);
    const std::uint32_t m = static_cast<std::uint32_t>(g.edge_count()) - (n - 1);
    REQUIRE(m >= 1);
    CHECK(minor3core(g).core.vertex_count() <= 2 * (m - 1));
  }
}

TEST_CASE("series-parallel graphs have empty cores") {
  std::mt19937_64 rng(31);
  for (int iter = 0; iter < 20; ++iter) {
    const AbstractGraph sp = random_series_parallel(3 + rng() % 15, rng);
    CHECK(minor3core(sp).core.empty());
  }
}

TEST_CASE("exact tree-width reference values") {
  std::mt19937_64 rng(37);
  const AbstractGraph tree = random_tree_graph(12, rng);
  CHECK(exact_treewidth(tree).width == 1);
  CHECK(exact_treewidth(cycle_graph(5)).width == 2);
  CHECK(exact_treewidth(complete_graph(4)).width == 3);
  CHECK(exact_treewidth(complete_graph(5)).width == 4);
  CHECK(exact_treewidth(grid_graph(2, 3)).width == 3);
  CHECK(exact_treewidth(grid_graph(2, 4)).width == 4);

  CHECK(exact_treewidth(AbstractGraph(1)).width == 0);
  CHECK(exact_treewidth(AbstractGraph(0)).width == -1);
  CHECK_THROWS_AS(exact_treewidth(complete_graph(21)), std::invalid_argument);
}

TEST_CASE("exact tree-width witnesses validate") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 50; ++iter) {
    const std::uint32_t n = 4 + rng() % 9;
    const AbstractGraph g = random_connected_graph(n, rng() % (n * 2), rng);
    const TreewidthResult result = exact_treewidth(g);
    const DecompositionCheck check = validate_decomposition(g, result.decomposition);
    CHECK(check.valid);
    CHECK(check.width == result.width);
  }
}

TEST_CASE("heuristic upper bound") {
  std::mt19937_64 rng(43);
  const AbstractGraph tree = random_tree_graph(40, rng);
  CHECK(heuristic_treewidth_upper(tree).width == 1);
  CHECK(heuristic_treewidth_upper(complete_graph(5)).width == 4);

  const AbstractGraph grid6 = grid_graph(2, 6);
  const TreewidthResult result = heuristic_treewidth_upper(grid6);
  const DecompositionCheck check = validate_decomposition(grid6, result.decomposition);
  CHECK(check.valid);
  CHECK(check.width == result.width);
  CHECK(result.width >= 6);  // exact tree-width of the 6x6 grid

  for (int iter = 0; iter < 20; ++iter) {
    const std::uint32_t n = 4 + rng() % 9;
    const AbstractGraph g = random_connected_graph(n, rng() % 10, rng);
    CHECK(heuristic_treewidth_upper(g).width >= exact_treewidth(g).width);
    const TreewidthResult h = heuristic_treewidth_upper(g);
    CHECK(validate_decomposition(g, h.decomposition).valid);
  }
}

TEST_CASE("decomposition validation") {
  const AbstractGraph k4 = complete_graph(4);
  TreeDecomposition single;
  single.bags = {{0, 1, 2, 3}};
  const DecompositionCheck ok = validate_decomposition(k4, single);
  CHECK(ok.valid);
  CHECK(ok.width == 3);

  TreeDecomposition missing;  // covers vertices but loses edge {2,3}
  missing.bags = {{0, 1, 2}, {0, 1, 3}};
  missing.tree_edges = {{0, 1}};
  CHECK_FALSE(validate_decomposition(k4, missing).valid);

  TreeDecomposition torn;  // occurrences of vertex 0 are disconnected
  torn.bags = {{0, 1, 2, 3}, {1, 2, 3}, {0, 1, 2, 3}};
  torn.tree_edges = {{0, 1}, {1, 2}};
  CHECK_FALSE(validate_decomposition(k4, torn).valid);

  TreeDecomposition malformed;
  malformed.bags = {{0, 1, 2, 3}, {0, 1, 2, 3}};
  malformed.tree_edges = {};
  CHECK_THROWS_AS(validate_decomposition(k4, malformed), std::invalid_argument);
}

TEST_CASE("tree-width preservation under core pruning") {
  std::mt19937_64 rng(47);
  int found = 0;
  while (found < 12) {
    const std::uint32_t n = 7 + rng() % 8;
    const AbstractGraph g = random_connected_graph(n, 3 + rng() % (n + 4), rng);
    const int width = exact_treewidth(g).width;
    if (width < 3) continue;
    ++found;
    const AbstractGraph core = minor3core(g).core;
    REQUIRE(core.vertex_count() <= kExactTreewidthLimit);
    CHECK(exact_treewidth(core).width == width);
  }
}

TEST_CASE("contracting a low-degree vertex keeps tree-width when >= 3") {
  std::mt19937_64 rng(53);
  int found = 0;
  while (found < 12) {
    const std::uint32_t n = 7 + rng() % 7;
    AbstractGraph g = random_connected_graph(n, 3 + rng() % 8, rng);
    const int width = exact_treewidth(g).width;
    if (width < 3) continue;
    std::uint32_t low = n;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (g.degree(v) >= 1 && g.degree(v) <= 2) low = std::min(low, v);
    }
    if (low == n) continue;
    ++found;
    const AbstractGraph contracted = contract(g, low, g.neighbors(low).front());
    CHECK(exact_treewidth(contracted).width >= width);
  }
}
