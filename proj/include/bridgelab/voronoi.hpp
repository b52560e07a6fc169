#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "bridgelab/path.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a);
double squared_distance(Point2 a, Point2 b);

/// Lexicographic order on (x, y); used to break distance ties.
inline bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

struct Rect {
  Point2 lo;
  Point2 hi;

  double width() const noexcept { return hi.x - lo.x; }
  double height() const noexcept { return hi.y - lo.y; }
  double area() const noexcept { return width() * height(); }
  bool contains(Point2 p) const noexcept {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
};

/// Finite window of a unit-intensity planar Poisson process with a uniform
/// bucket index (bucket side 1) for neighbour queries.
class PointCloud {
 public:
  PointCloud(Rect window, std::vector<Point2> points);

  const Rect& window() const noexcept { return window_; }
  std::span<const Point2> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  /// Index of the point closest to q; ties go to the lexicographically
  /// smallest point.
  std::size_t nearest_index(Point2 q) const;

  /// Indices of all points within Chebyshev bucket ring `ring` around q's
  /// bucket (ring 0 is q's own bucket).
  void ring_members(Point2 q, int ring, std::vector<std::size_t>& out) const;

  /// Number of bucket rings needed to cover the whole window from q.
  int max_ring(Point2 q) const noexcept;

 private:
  long bucket_x(double x) const noexcept;
  long bucket_y(double y) const noexcept;

  Rect window_;
  std::vector<Point2> points_;
  long nx_ = 0;
  long ny_ = 0;
  std::vector<std::size_t> bucket_start_;  // CSR over buckets
  std::vector<std::size_t> bucket_items_;
};

/// Convex Voronoi cell clipped to the window; vertices counterclockwise.
struct VoronoiCellPoly {
  Point2 site;
  std::vector<Point2> vertices;
};

/// Unit-intensity Poisson process on `window`. Abscissae are generated as a
/// one-dimensional Poisson process of rate `height`, ordinates uniformly.
PointCloud sample_poisson(RandomStream& stream, const Rect& window);

Point2 nearest_point(const PointCloud& cloud, Point2 x);

/// Cell of a cloud point z. Exact: every site that can cut the cell is used.
VoronoiCellPoly voronoi_cell(const PointCloud& cloud, Point2 z);

/// Cell of the site nearest to y (the cell containing y).
VoronoiCellPoly cell_of(const PointCloud& cloud, Point2 y);

/// 0 if y lies in the polygon, otherwise the distance to its boundary.
double dist_point_to_cell(const VoronoiCellPoly& cell, Point2 y);

/// Window used for the D process: bounding box of the segment [0, x]
/// inflated by `margin` on every side.
Rect segment_window(Point2 x, double margin = 8.0);

/// ||x||^{-1/2} dist(cell_of(t pi(x)), t x) on the grid.
PathSample D_process(const PointCloud& cloud, Point2 x, std::span<const double> grid,
                     double margin = 8.0);

/// Sites and cell polygons as JSON for external plotting.
void write_cells_json(std::ostream& out, const PointCloud& cloud,
                      std::span<const VoronoiCellPoly> cells);

}  // namespace bridgelab
