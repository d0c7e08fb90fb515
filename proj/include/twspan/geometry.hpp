#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twspan {

struct Point {
  std::vector<double> coords;

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords == b.coords; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
};

inline Point make_point(std::initializer_list<double> cs) {
  return Point{std::vector<double>(cs)};
}

/// Euclidean distance. Throws on dimension mismatch.
inline double distance(const Point& p, const Point& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("distance: dimension mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    const double d = p.coords[i] - q.coords[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// Ordered list of d-dimensional points. Immutable after construction.
// Construction rejects non-finite coordinates, dimension mismatches and
// exact duplicates (graph dilation is undefined for coincident points).
class PointSet {
 public:
  PointSet(std::size_t dim, std::vector<Point> points)
      : dim_(dim), points_(std::move(points)) {
    if (dim_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
    for (const Point& p : points_) {
      if (p.dim() != dim_) {
        throw std::invalid_argument("PointSet: point dimension mismatch");
      }
      for (double c : p.coords) {
        if (!std::isfinite(c)) {
          throw std::invalid_argument("PointSet: non-finite coordinate");
        }
      }
    }
    check_distinct();
  }

  static PointSet from_rows(std::size_t dim, const std::vector<std::vector<double>>& rows) {
    std::vector<Point> pts;
    pts.reserve(rows.size());
    for (const auto& r : rows) pts.push_back(Point{r});
    return PointSet(dim, std::move(pts));
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.points_ == b.points_;
  }

 private:
  void check_distinct() const {
    std::vector<std::uint32_t> order(points_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return points_[a].coords < points_[b].coords;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (points_[order[i - 1]] == points_[order[i]]) {
        throw std::invalid_argument(
            "PointSet: duplicate points at indices " + std::to_string(order[i - 1]) +
            " and " + std::to_string(order[i]));
      }
    }
  }

  std::size_t dim_;
  std::vector<Point> points_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

inline PointSetPtr share(PointSet ps) {
  return std::make_shared<const PointSet>(std::move(ps));
}

}  // namespace twspan
