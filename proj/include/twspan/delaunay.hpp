#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "twspan/geo_graph.hpp"
#include "twspan/plane_check.hpp"

namespace twspan {

namespace detail {

// Incremental (Bowyer-Watson) Delaunay with a single symbolic ghost vertex
// covering the outer face, so no finite super-triangle distorts the hull.
// Points are inserted in index order; that order doubles as the symbolic
// perturbation, and cocircular conflicts resolve to "keep the existing
// triangulation". Predicates run in long double with a relative threshold.
class DelaunayBuilder {
 public:
  static constexpr std::uint32_t kGhost = 0xFFFFFFFFu;
  static constexpr std::uint32_t kUnset = 0xFFFFFFFEu;

  explicit DelaunayBuilder(const PointSet& ps) : ps_(ps) {}

  std::vector<Edge> triangulate() {
    const std::size_t n = ps_.size();
    std::uint32_t third = 0;
    bool found = false;
    for (std::uint32_t j = 2; j < n && !found; ++j) {
      if (orientation(0, 1, j) != 0) {
        third = j;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("delaunay: all points collinear");

    seed_triangle(0, 1, third);
    for (std::uint32_t p = 2; p < n; ++p) {
      if (p != third) insert(p);
    }

    std::vector<Edge> edges;
    for (const Tri& t : tris_) {
      if (!t.alive || is_ghost(t)) continue;
      for (int i = 0; i < 3; ++i) {
        edges.push_back(make_edge(t.v[i], t.v[(i + 1) % 3]));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
  }

 private:
  struct Tri {
    std::uint32_t v[3];    // counterclockwise; ghost triangles end in kGhost
    std::uint32_t nbr[3];  // nbr[i] faces edge (v[i], v[i+1])
    bool alive = true;
  };

  static bool is_ghost(const Tri& t) { return t.v[2] == kGhost; }

  int orientation(std::uint32_t a, std::uint32_t b, std::uint32_t c) const {
    const Point &pa = ps_[a], &pb = ps_[b], &pc = ps_[c];
    const long double ax = pa[0], ay = pa[1];
    const long double det =
        (pb[0] - ax) * (pc[1] - ay) - (pb[1] - ay) * (pc[0] - ax);
    const long double mag = std::abs((pb[0] - ax) * (pc[1] - ay)) +
                            std::abs((pb[1] - ay) * (pc[0] - ax));
    if (det > mag * kRelEps) return 1;
    if (det < -mag * kRelEps) return -1;
    return 0;
  }

  // p strictly inside the circumcircle of ccw (a,b,c)?
  bool in_circumcircle(std::uint32_t a, std::uint32_t b, std::uint32_t c,
                       std::uint32_t p) const {
    const Point &pa = ps_[a], &pb = ps_[b], &pc = ps_[c], &pp = ps_[p];
    const long double ax = pa[0] - pp[0], ay = pa[1] - pp[1];
    const long double bx = pb[0] - pp[0], by = pb[1] - pp[1];
    const long double cx = pc[0] - pp[0], cy = pc[1] - pp[1];
    const long double a2 = ax * ax + ay * ay;
    const long double b2 = bx * bx + by * by;
    const long double c2 = cx * cx + cy * cy;
    const long double det = a2 * (bx * cy - by * cx) - b2 * (ax * cy - ay * cx) +
                            c2 * (ax * by - ay * bx);
    const long double mag = a2 * (std::abs(bx * cy) + std::abs(by * cx)) +
                            b2 * (std::abs(ax * cy) + std::abs(ay * cx)) +
                            c2 * (std::abs(ax * by) + std::abs(ay * bx));
    return det > mag * kRelEps;
  }

  // Conflict = p lies in the (possibly degenerate) circumdisk. For a ghost
  // triangle over hull edge (a,b) the disk limit is the open outer halfplane
  // plus the edge segment itself.
  bool conflicts(const Tri& t, std::uint32_t p) const {
    if (!is_ghost(t)) return in_circumcircle(t.v[0], t.v[1], t.v[2], p);
    const std::uint32_t a = t.v[0], b = t.v[1];
    const int o = orientation(a, b, p);
    if (o > 0) return true;
    if (o < 0) return false;
    const Point &pa = ps_[a], &pb = ps_[b], &pp = ps_[p];
    const double dot = (pp[0] - pa[0]) * (pb[0] - pa[0]) + (pp[1] - pa[1]) * (pb[1] - pa[1]);
    const double len2 = (pb[0] - pa[0]) * (pb[0] - pa[0]) + (pb[1] - pa[1]) * (pb[1] - pa[1]);
    return dot > 0.0 && dot < len2;
  }

  // Ghost triangles store the reversed hull edge, so every directed edge
  // (x,y) of a triangle pairs with (y,x) of exactly one neighbor.
  void seed_triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    if (orientation(a, b, c) < 0) std::swap(b, c);
    tris_.push_back({{a, b, c}, {3, 1, 2}});
    tris_.push_back({{c, b, kGhost}, {0, 3, 2}});   // outer side of (b,c)
    tris_.push_back({{a, c, kGhost}, {0, 1, 3}});   // outer side of (c,a)
    tris_.push_back({{b, a, kGhost}, {0, 2, 1}});   // outer side of (a,b)
  }

  void insert(std::uint32_t p) {
    std::uint32_t start = kUnset;
    for (std::uint32_t i = 0; i < tris_.size(); ++i) {
      if (tris_[i].alive && conflicts(tris_[i], p)) {
        start = i;
        break;
      }
    }
    if (start == kUnset) throw std::logic_error("delaunay: no conflict found");

    // grow the conflict cavity
    std::vector<std::uint32_t> cavity{start};
    std::vector<bool> in_cavity(tris_.size(), false);
    in_cavity[start] = true;
    for (std::size_t head = 0; head < cavity.size(); ++head) {
      const Tri t = tris_[cavity[head]];
      for (int i = 0; i < 3; ++i) {
        const std::uint32_t nb = t.nbr[i];
        if (!in_cavity[nb] && conflicts(tris_[nb], p)) {
          in_cavity[nb] = true;
          cavity.push_back(nb);
        }
      }
    }

    // boundary fan: one new triangle per cavity-boundary edge
    struct BoundaryEdge {
      std::uint32_t a, b, outside;
    };
    std::vector<BoundaryEdge> boundary;
    for (std::uint32_t ti : cavity) {
      const Tri& t = tris_[ti];
      for (int i = 0; i < 3; ++i) {
        if (!in_cavity[t.nbr[i]]) {
          boundary.push_back({t.v[i], t.v[(i + 1) % 3], t.nbr[i]});
        }
      }
      tris_[ti].alive = false;
    }

    std::vector<std::uint32_t> fresh;
    for (const BoundaryEdge& be : boundary) {
      const auto id = static_cast<std::uint32_t>(tris_.size());
      // star p to the boundary edge; the result is a ghost when the edge
      // itself carries the ghost vertex
      Tri t{{be.a, be.b, p}, {be.outside, kUnset, kUnset}};
      normalize_ghost(t);
      tris_.push_back(t);
      fresh.push_back(id);
      Tri& out = tris_[be.outside];
      for (int i = 0; i < 3; ++i) {
        if (out.v[i] == be.b && out.v[(i + 1) % 3] == be.a) out.nbr[i] = id;
      }
    }
    // stitch fan neighbors: edge (x,p) of one new triangle matches (p,x) of another
    for (std::uint32_t id : fresh) {
      Tri& t = tris_[id];
      for (int i = 0; i < 3; ++i) {
        if (t.nbr[i] != kUnset) continue;
        const std::uint32_t x = t.v[i], y = t.v[(i + 1) % 3];
        // the partner triangle has directed boundary edge starting with y
        for (std::uint32_t other : fresh) {
          if (other == id) continue;
          const Tri& o = tris_[other];
          for (int j = 0; j < 3; ++j) {
            if (o.v[j] == y && o.v[(j + 1) % 3] == x) t.nbr[i] = other;
          }
        }
      }
    }
  }

  // keep the ghost in slot 2 so is_ghost stays a single compare
  static void normalize_ghost(Tri& t) {
    while (t.v[2] != kGhost && (t.v[0] == kGhost || t.v[1] == kGhost)) {
      const std::uint32_t v0 = t.v[0], n0 = t.nbr[0];
      t.v[0] = t.v[1];
      t.v[1] = t.v[2];
      t.v[2] = v0;
      t.nbr[0] = t.nbr[1];
      t.nbr[1] = t.nbr[2];
      t.nbr[2] = n0;
    }
  }

  static constexpr long double kRelEps = 1e-14L;

  const PointSet& ps_;
  std::vector<Tri> tris_;
};

}  // namespace detail

// Delaunay triangulation of a planar point set: a plane drawing whose inner
// faces are triangles; contains the convex hull and the EMST. Degeneracies
// (cocircular quadruples) resolve deterministically by insertion order.
inline GeoGraph delaunay(const PointSetPtr& ps) {
  if (ps->dim() != 2) throw std::invalid_argument("delaunay: requires dimension 2");
  if (ps->size() < 3) throw std::invalid_argument("delaunay: need at least 3 points");
  detail::DelaunayBuilder builder(*ps);
  return GeoGraph(ps, builder.triangulate());
}

}  // namespace twspan
