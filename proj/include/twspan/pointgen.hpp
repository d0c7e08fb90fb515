#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twspan/abstract_graph.hpp"
#include "twspan/geo_graph.hpp"
#include "twspan/geometry.hpp"
#include "twspan/plane_check.hpp"

namespace twspan {

// n distinct points uniform in [0, box]^d. mt19937_64 with the 53-bit
// double construction keeps the stream identical across platforms; exact
// duplicates are resampled.
inline PointSet random_points(std::size_t d, std::size_t n, std::uint64_t seed, double box) {
  if (d < 1) throw std::invalid_argument("random_points: dimension must be >= 1");
  if (n < 1) throw std::invalid_argument("random_points: need n >= 1");
  if (!(box > 0.0)) throw std::invalid_argument("random_points: box must be positive");
  std::mt19937_64 rng(seed);
  const auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::map<std::vector<double>, std::uint32_t> seen;
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    std::vector<double> coords(d);
    for (double& c : coords) c = box * unit();
    if (seen.emplace(coords, pts.size()).second) {
      pts.push_back(Point{std::move(coords)});
    }
  }
  return PointSet(d, std::move(pts));
}

/// n points equally spaced on the unit circle, p_i = (sin(2*pi*i/n), cos(2*pi*i/n)).
inline PointSet circle_points(std::size_t n) {
  if (n < 3) throw std::invalid_argument("circle_points: need n >= 3");
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back(make_point({std::sin(a), std::cos(a)}));
  }
  return PointSet(2, std::move(pts));
}

// Hamiltonian path p_0, p_{n-1}, p_1, p_{n-2}, ... alternating across the
// circle; the position-j vertex is p_{j/2} for even j and p_{n-(j+1)/2} for
// odd j.
inline std::vector<Edge> sawtooth_edges(std::size_t n) {
  if (n < 3) throw std::invalid_argument("sawtooth_edges: need n >= 3");
  const auto vertex_at = [n](std::size_t j) -> VertexId {
    return static_cast<VertexId>(j % 2 == 0 ? j / 2 : n - (j + 1) / 2);
  };
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    edges.push_back(make_edge(vertex_at(j), vertex_at(j + 1)));
  }
  return edges;
}

/// The sawtooth tree-spanner on circle_points(n).
inline GeoGraph sawtooth_spanner(std::size_t n) {
  return GeoGraph(share(circle_points(n)), sawtooth_edges(n));
}

// Parameters of the grid-like set. The grid has side h+1; h comes either
// directly or from the requested tree-width k. m (points per grid edge) is
// derived from the budget n by default, dividing by the exact grid edge
// count d*h*(h+1)^(d-1); `paper_edge_count` switches the divisor to
// d*(h+1)^d + d*(h+1)^(d-1).
struct GridLikeParams {
  int d = 2;
  long long n = 0;
  std::optional<int> h;
  std::optional<int> k;
  std::optional<long long> m;
  bool paper_edge_count = false;
};

struct GridLikeSet {
  PointSetPtr points;
  std::vector<std::uint32_t> grid_point_indices;
  std::vector<Edge> neighbour_pairs;
  int h = 0;
  long long m = 0;
};

/// Largest k for which the grid-like set is guaranteed feasible:
/// n^((d-1)/d) * (5d)^(1/d - 2).
inline double grid_like_k_upper_bound(int d, long long n) {
  return std::pow(static_cast<double>(n), (d - 1.0) / d) *
         std::pow(5.0 * d, 1.0 / d - 2.0);
}

/// Reference lower bound on the tree-width of the side^d grid:
/// 2/(9d) * side^(d-1) - 1. Vacuous for small sides; reported, not asserted.
inline double grid_tw_reference_lower_bound(int d, int side) {
  return 2.0 / (9.0 * d) * std::pow(static_cast<double>(side), d - 1) - 1.0;
}

inline int grid_side_parameter_from_k(int d, int k) {
  const double v = std::pow(9.0 * d / 2.0 * (k + 2.0), 1.0 / (d - 1.0)) - 1.0;
  return static_cast<int>(std::ceil(v - 1e-9));
}

inline GridLikeSet grid_like_set(const GridLikeParams& params) {
  const int d = params.d;
  if (d < 2) throw std::invalid_argument("grid_like_set: dimension must be >= 2");
  int h = 0;
  if (params.h) {
    h = *params.h;
  } else if (params.k) {
    if (*params.k < 1) throw std::invalid_argument("grid_like_set: k must be >= 1");
    h = grid_side_parameter_from_k(d, *params.k);
  } else {
    throw std::invalid_argument("grid_like_set: need h or k");
  }
  if (h < 1) throw std::invalid_argument("grid_like_set: h must be >= 1");

  auto int_pow = [](long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
  };
  const long long side = h + 1;
  const long long edge_count = params.paper_edge_count
                                   ? d * int_pow(side, d) + d * int_pow(side, d - 1)
                                   : d * h * int_pow(side, d - 1);
  long long m;
  if (params.m) {
    m = *params.m;
  } else {
    if (params.n <= 0) throw std::invalid_argument("grid_like_set: need n or m");
    m = params.n / edge_count;
  }
  if (m < 1) {
    throw std::domain_error(
        "grid_like_set: infeasible, derived m < 1; the construction needs "
        "k <= n^((d-1)/d)*(5d)^(1/d-2), here k <= " +
        std::to_string(grid_like_k_upper_bound(d, params.n)));
  }

  // P_i: collinear runs parallel to axis i through every (h+1)^(d-1)
  // lattice combination of the other axes; grid points are shared.
  std::map<std::vector<long long>, std::uint32_t> index_of;
  std::vector<Point> pts;
  std::vector<long long> combo(d - 1, 0);
  for (int axis = 0; axis < d; ++axis) {
    std::fill(combo.begin(), combo.end(), 0);
    for (;;) {
      for (long long x = 0; x <= h * m; ++x) {
        std::vector<long long> coords;
        coords.reserve(d);
        int c = 0;
        for (int dim = 0; dim < d; ++dim) {
          coords.push_back(dim == axis ? x : combo[c++] * m);
        }
        if (index_of.find(coords) == index_of.end()) {
          index_of.emplace(coords, static_cast<std::uint32_t>(pts.size()));
          std::vector<double> real(coords.begin(), coords.end());
          pts.push_back(Point{std::move(real)});
        }
      }
      int pos = d - 2;
      while (pos >= 0 && combo[pos] == h) combo[pos--] = 0;
      if (pos < 0) break;
      ++combo[pos];
    }
  }

  GridLikeSet out;
  out.h = h;
  out.m = m;
  out.points = share(PointSet(static_cast<std::size_t>(d), std::move(pts)));

  // Grid points in lexicographic lattice order; neighbours differ by m in
  // exactly one axis, i.e. Euclidean distance exactly m.
  std::vector<long long> lattice(d, 0);
  std::vector<std::vector<long long>> lattice_points;
  for (;;) {
    std::vector<long long> coords(d);
    for (int dim = 0; dim < d; ++dim) coords[dim] = lattice[dim] * m;
    lattice_points.push_back(lattice);
    out.grid_point_indices.push_back(index_of.at(coords));
    int pos = d - 1;
    while (pos >= 0 && lattice[pos] == h) lattice[pos--] = 0;
    if (pos < 0) break;
    ++lattice[pos];
  }
  std::map<std::vector<long long>, std::uint32_t> grid_index;
  for (std::size_t i = 0; i < lattice_points.size(); ++i) {
    grid_index.emplace(lattice_points[i], out.grid_point_indices[i]);
  }
  for (const auto& lat : lattice_points) {
    for (int dim = 0; dim < d; ++dim) {
      if (lat[dim] < h) {
        std::vector<long long> next = lat;
        ++next[dim];
        out.neighbour_pairs.push_back(make_edge(grid_index.at(lat), grid_index.at(next)));
      }
    }
  }
  std::sort(out.neighbour_pairs.begin(), out.neighbour_pairs.end());
  return out;
}

// Euclidean d-dimensional s^d grid graph; vertex (x_0,...,x_{d-1}) gets
// index ((x_0*s + x_1)*s + ...) and neighbours differ by one in a single
// coordinate.
inline AbstractGraph grid_graph(int d, int s) {
  if (d < 1) throw std::invalid_argument("grid_graph: dimension must be >= 1");
  if (s < 2) throw std::invalid_argument("grid_graph: side must be >= 2");
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= s;
  std::vector<Edge> edges;
  std::vector<int> coord(d, 0);
  for (long long idx = 0; idx < total; ++idx) {
    long long stride = 1;
    for (int dim = d - 1; dim >= 0; --dim) {
      if (coord[dim] + 1 < s) {
        edges.push_back({static_cast<VertexId>(idx), static_cast<VertexId>(idx + stride)});
      }
      stride *= s;
    }
    int pos = d - 1;
    while (pos >= 0 && coord[pos] == s - 1) coord[pos--] = 0;
    if (pos >= 0) ++coord[pos];
  }
  return AbstractGraph::from_edges(static_cast<std::uint32_t>(total), edges);
}

// Andrew monotone chain; returns hull vertices counterclockwise, collinear
// boundary points dropped. Throws on fewer than 3 points or an all-collinear
// set.
inline std::vector<std::uint32_t> convex_hull(const PointSet& ps) {
  if (ps.dim() != 2) throw std::invalid_argument("convex_hull: requires dimension 2");
  const std::size_t n = ps.size();
  if (n < 3) throw std::invalid_argument("convex_hull: need at least 3 points");
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::sort(order.begin(), order.end(), [&ps](std::uint32_t a, std::uint32_t b) {
    return ps[a].coords < ps[b].coords;
  });

  std::vector<std::uint32_t> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower hull
    while (k >= 2 && orient_sign(ps[hull[k - 2]], ps[hull[k - 1]], ps[order[i]]) <= 0) --k;
    hull[k++] = order[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper hull
    while (k >= lower && orient_sign(ps[hull[k - 2]], ps[hull[k - 1]], ps[order[i]]) <= 0) --k;
    hull[k++] = order[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw std::invalid_argument("convex_hull: all points collinear");
  return hull;
}

}  // namespace twspan
