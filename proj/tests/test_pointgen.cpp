#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <vector>

#include "twspan/dilation.hpp"
#include "twspan/pointgen.hpp"

using namespace twspan;

namespace {

// O(n^3) hull-edge oracle: (i,j) is a hull edge iff every other point lies
// strictly to its left.
std::set<Edge> hull_edges_oracle(const PointSet& ps) {
  std::set<Edge> edges;
  const std::size_t n = ps.size();
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      bool all_left = true;
      for (std::uint32_t k = 0; k < n && all_left; ++k) {
        if (k == i || k == j) continue;
        all_left = orient_sign(ps[i], ps[j], ps[k]) > 0;
      }
      if (all_left) edges.insert(make_edge(i, j));
    }
  }
  return edges;
}

bool is_tree(const GeoGraph& g) {
  return g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

std::vector<Edge> path_edges(const std::vector<VertexId>& order) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    edges.push_back(make_edge(order[i], order[i + 1]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TEST_CASE("random points are deterministic, in range, distinct") {
  const PointSet a = random_points(2, 5, 42, 1.0);
  const PointSet b = random_points(2, 5, 42, 1.0);
  CHECK(a == b);

  const PointSet c = random_points(3, 100, 7, 10.0);
  REQUIRE(c.size() == 100);
  for (const Point& p : c.points()) {
    for (double x : p.coords) {
      CHECK(x >= 0.0);
      CHECK(x <= 10.0);
    }
  }

  const PointSet d = random_points(2, 1000, 1, 1.0);
  std::set<std::vector<double>> seen;
  for (const Point& p : d.points()) seen.insert(p.coords);
  CHECK(seen.size() == 1000);
}

TEST_CASE("circle points") {
  const PointSet four = circle_points(4);
  CHECK(four[0][0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(four[0][1] == Catch::Approx(1.0).margin(1e-12));
  CHECK(four[1][0] == Catch::Approx(1.0).margin(1e-12));
  CHECK(four[1][1] == Catch::Approx(0.0).margin(1e-12));
  CHECK(four[2][0] == Catch::Approx(0.0).margin(1e-12));
  CHECK(four[2][1] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(four[3][0] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(four[3][1] == Catch::Approx(0.0).margin(1e-12));

  for (std::size_t n : {3u, 7u, 16u}) {
    const PointSet ps = circle_points(n);
    const Point origin = make_point({0, 0});
    for (const Point& p : ps.points()) {
      CHECK(distance(p, origin) == Catch::Approx(1.0).margin(1e-12));
    }
  }

  CHECK(distance(four[0], four[1]) ==
        Catch::Approx(2.0 * std::sin(std::numbers::pi / 4.0)).margin(1e-12));
  CHECK_THROWS_AS(circle_points(2), std::invalid_argument);
}

TEST_CASE("sawtooth spanner shape") {
  const GeoGraph four = sawtooth_spanner(4);
  CHECK(four.edges() == std::vector<Edge>{{0, 3}, {1, 2}, {1, 3}});

  for (std::size_t n : {3u, 5u, 8u, 33u, 128u}) {
    const GeoGraph g = sawtooth_spanner(n);
    CHECK(g.edge_count() == n - 1);
    CHECK(is_tree(g));
  }

  // the zig-zag orders behind the published drawings for n=10 and n=9
  CHECK(sawtooth_spanner(10).edges() ==
        path_edges({0, 9, 1, 8, 2, 7, 3, 6, 4, 5}));
  CHECK(sawtooth_spanner(9).edges() == path_edges({0, 8, 1, 7, 2, 6, 3, 5, 4}));
  CHECK_THROWS_AS(sawtooth_spanner(2), std::invalid_argument);
}

TEST_CASE("grid-like set reproduces the published instance") {
  GridLikeParams params;
  params.d = 2;
  params.n = 240;
  params.h = 4;
  const GridLikeSet set = grid_like_set(params);
  CHECK(set.m == 6);
  CHECK(set.points->size() == 225);  // d(hm+1)(h+1)^(d-1) - (d-1)(h+1)^d
  CHECK(set.grid_point_indices.size() == 25);
  CHECK(set.neighbour_pairs.size() == 40);
  CHECK(static_cast<long long>(set.points->size()) <= params.n);

  // the paper's own edge-count expression gives m=4 instead
  params.paper_edge_count = true;
  CHECK(grid_like_set(params).m == 4);
}

TEST_CASE("grid-like set small instance") {
  GridLikeParams params;
  params.d = 2;
  params.h = 1;
  params.m = 1;
  const GridLikeSet set = grid_like_set(params);
  REQUIRE(set.points->size() == 4);
  CHECK(set.grid_point_indices.size() == 4);
  CHECK(set.neighbour_pairs.size() == 4);
  std::set<std::vector<double>> coords;
  for (const Point& p : set.points->points()) coords.insert(p.coords);
  CHECK(coords == std::set<std::vector<double>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("grid-like runs are unit-spaced with m-1 interior points") {
  GridLikeParams params;
  params.d = 3;
  params.h = 2;
  params.m = 3;
  const GridLikeSet set = grid_like_set(params);
  CHECK(set.grid_point_indices.size() == 27);

  std::map<std::vector<double>, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < set.points->size(); ++i) {
    index_of[(*set.points)[i].coords] = i;
  }
  for (const Edge& pair : set.neighbour_pairs) {
    const Point& a = (*set.points)[pair.first];
    const Point& b = (*set.points)[pair.second];
    CHECK(distance(a, b) == Catch::Approx(static_cast<double>(set.m)));
    int axis = -1;
    for (int dim = 0; dim < 3; ++dim) {
      if (a[dim] != b[dim]) axis = dim;
    }
    REQUIRE(axis >= 0);
    const double lo = std::min(a[axis], b[axis]);
    for (long long step = 1; step < set.m; ++step) {
      std::vector<double> mid = a.coords;
      mid[axis] = lo + static_cast<double>(step);
      CHECK(index_of.count(mid) == 1);
    }
  }
}

TEST_CASE("grid-like feasibility errors") {
  GridLikeParams params;
  params.d = 2;
  params.n = 30;  // far below the edge count for h from k=4
  params.k = 4;
  CHECK_THROWS_AS(grid_like_set(params), std::domain_error);

  params.d = 1;
  CHECK_THROWS_AS(grid_like_set(params), std::invalid_argument);
}

TEST_CASE("grid graph") {
  const AbstractGraph square = grid_graph(2, 2);
  CHECK(square.vertex_count() == 4);
  CHECK(square.edge_count() == 4);
  for (std::uint32_t v = 0; v < 4; ++v) CHECK(square.degree(v) == 2);

  CHECK(grid_graph(2, 5).edge_count() == 40);
  const AbstractGraph cube = grid_graph(3, 2);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);

  for (int d : {2, 3}) {
    const AbstractGraph g = grid_graph(d, 4);
    std::size_t expected = 1;
    for (int i = 0; i + 1 < d; ++i) expected *= 4;
    CHECK(g.edge_count() == static_cast<std::size_t>(d) * expected * 3);
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
      CHECK(g.degree(v) >= static_cast<std::uint32_t>(d));
      CHECK(g.degree(v) <= static_cast<std::uint32_t>(2 * d));
    }
  }
}

TEST_CASE("convex hull") {
  const PointSet circle = circle_points(12);
  const auto hull = convex_hull(circle);
  REQUIRE(hull.size() == 12);
  std::set<std::uint32_t> members(hull.begin(), hull.end());
  CHECK(members.size() == 12);
  // consecutive hull entries are circle neighbours, one consistent direction
  const int step = (hull[1] + 12 - hull[0]) % 12 == 1 ? 1 : 11;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    CHECK((hull[i] + step) % 12 == hull[i + 1] % 12);
  }

  const PointSet square_center =
      PointSet::from_rows(2, {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}});
  const auto corners = convex_hull(square_center);
  CHECK(std::set<std::uint32_t>(corners.begin(), corners.end()) ==
        std::set<std::uint32_t>{0, 1, 2, 3});

  const PointSet random = random_points(2, 50, 5, 1.0);
  const auto computed = convex_hull(random);
  std::set<Edge> got;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    got.insert(make_edge(computed[i], computed[(i + 1) % computed.size()]));
  }
  CHECK(got == hull_edges_oracle(random));

  CHECK_THROWS_AS(convex_hull(PointSet::from_rows(2, {{0, 0}, {1, 1}, {2, 2}, {3, 3}})),
                  std::invalid_argument);
}

TEST_CASE("hull of circle points is counterclockwise") {
  const PointSet circle = circle_points(8);
  const auto hull = convex_hull(circle);
  double area2 = 0.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = circle[hull[i]];
    const Point& b = circle[hull[(i + 1) % hull.size()]];
    area2 += a[0] * b[1] - b[0] * a[1];
  }
  CHECK(area2 > 0.0);
}
