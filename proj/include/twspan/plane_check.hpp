#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "twspan/geo_graph.hpp"

namespace twspan {

// Orientation predicates use a fixed absolute tolerance of 1e-12 on the
// cross product (documented in the README); coordinates at desk scale keep
// true degeneracies and rounding noise well separated from that threshold.
inline constexpr double kOrientEps = 1e-12;

inline double cross2(const Point& a, const Point& b, const Point& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

/// +1 if a,b,c make a left turn, -1 for a right turn, 0 if collinear.
inline int orient_sign(const Point& a, const Point& b, const Point& c) {
  const double cr = cross2(a, b, c);
  if (cr > kOrientEps) return 1;
  if (cr < -kOrientEps) return -1;
  return 0;
}

namespace detail {

// Assumes p collinear with a-b; checks closed bounding-box containment.
inline bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a[0], b[0]) - kOrientEps <= p[0] && p[0] <= std::max(a[0], b[0]) + kOrientEps &&
         std::min(a[1], b[1]) - kOrientEps <= p[1] && p[1] <= std::max(a[1], b[1]) + kOrientEps;
}

inline bool closed_segments_intersect(const Point& a, const Point& b, const Point& c,
                                      const Point& d) {
  const int d1 = orient_sign(c, d, a);
  const int d2 = orient_sign(c, d, b);
  const int d3 = orient_sign(a, b, c);
  const int d4 = orient_sign(a, b, d);
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(c, d, a)) return true;
  if (d2 == 0 && on_segment(c, d, b)) return true;
  if (d3 == 0 && on_segment(a, b, c)) return true;
  if (d4 == 0 && on_segment(a, b, d)) return true;
  return false;
}

}  // namespace detail

// True iff no two edges, as closed straight segments, intersect anywhere
// except at a shared endpoint index. Collinear overlap through a shared
// endpoint counts as a crossing.
inline bool is_plane_drawing(const GeoGraph& g) {
  if (g.points().dim() != 2) {
    throw std::invalid_argument("is_plane_drawing: requires dimension 2");
  }
  const PointSet& ps = g.points();
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a1, b1] = edges[i];
    const Point& a = ps[a1];
    const Point& b = ps[b1];
    const double xlo = std::min(a[0], b[0]), xhi = std::max(a[0], b[0]);
    const double ylo = std::min(a[1], b[1]), yhi = std::max(a[1], b[1]);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a2, b2] = edges[j];
      const Point& c = ps[a2];
      const Point& d = ps[b2];
      if (std::max(c[0], d[0]) < xlo - kOrientEps || std::min(c[0], d[0]) > xhi + kOrientEps ||
          std::max(c[1], d[1]) < ylo - kOrientEps || std::min(c[1], d[1]) > yhi + kOrientEps) {
        continue;
      }
      const bool share_a1 = (a1 == a2 || a1 == b2);
      const bool share_b1 = (b1 == a2 || b1 == b2);
      if (share_a1 || share_b1) {
        // Two distinct edges can only re-meet beyond the common vertex if
        // they are collinear rays to the same side.
        const VertexId shared = share_a1 ? a1 : b1;
        const VertexId x = (a1 == shared) ? b1 : a1;
        const VertexId y = (a2 == shared) ? b2 : a2;
        const Point& s = ps[shared];
        if (orient_sign(s, ps[x], ps[y]) == 0) {
          const double dot = (ps[x][0] - s[0]) * (ps[y][0] - s[0]) +
                             (ps[x][1] - s[1]) * (ps[y][1] - s[1]);
          if (dot > 0.0) return false;
        }
        continue;
      }
      if (detail::closed_segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

}  // namespace twspan
