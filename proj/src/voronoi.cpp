#include "bridgelab/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "bridgelab/errors.hpp"

namespace bridgelab {

double norm(Point2 a) { return std::hypot(a.x, a.y); }

double squared_distance(Point2 a, Point2 b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

PointCloud::PointCloud(Rect window, std::vector<Point2> points)
    : window_(window), points_(std::move(points)) {
  if (!(window_.width() > 0.0 && window_.height() > 0.0))
    throw InvalidArgument("point cloud window must be nondegenerate");
  nx_ = std::max<long>(1, static_cast<long>(std::ceil(window_.width())));
  ny_ = std::max<long>(1, static_cast<long>(std::ceil(window_.height())));
  const auto buckets = static_cast<std::size_t>(nx_ * ny_);
  std::vector<std::size_t> counts(buckets + 1, 0);
  std::vector<std::size_t> owner(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const long bx = std::clamp(bucket_x(points_[i].x), 0L, nx_ - 1);
    const long by = std::clamp(bucket_y(points_[i].y), 0L, ny_ - 1);
    owner[i] = static_cast<std::size_t>(by * nx_ + bx);
    ++counts[owner[i] + 1];
  }
  for (std::size_t b = 0; b < buckets; ++b) counts[b + 1] += counts[b];
  bucket_start_ = counts;
  bucket_items_.resize(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) bucket_items_[counts[owner[i]]++] = i;
}

long PointCloud::bucket_x(double x) const noexcept {
  return static_cast<long>(std::floor(x - window_.lo.x));
}
long PointCloud::bucket_y(double y) const noexcept {
  return static_cast<long>(std::floor(y - window_.lo.y));
}

int PointCloud::max_ring(Point2 q) const noexcept {
  const long bx = bucket_x(q.x), by = bucket_y(q.y);
  const long rx = std::max(std::abs(bx), std::abs(nx_ - 1 - bx));
  const long ry = std::max(std::abs(by), std::abs(ny_ - 1 - by));
  return static_cast<int>(std::max(rx, ry));
}

void PointCloud::ring_members(Point2 q, int ring, std::vector<std::size_t>& out) const {
  out.clear();
  const long bx = bucket_x(q.x), by = bucket_y(q.y);
  auto visit = [&](long x, long y) {
    if (x < 0 || y < 0 || x >= nx_ || y >= ny_) return;
    const auto b = static_cast<std::size_t>(y * nx_ + x);
    for (std::size_t k = bucket_start_[b]; k < bucket_start_[b + 1]; ++k)
      out.push_back(bucket_items_[k]);
  };
  if (ring == 0) {
    visit(bx, by);
    return;
  }
  for (long x = bx - ring; x <= bx + ring; ++x) {
    visit(x, by - ring);
    visit(x, by + ring);
  }
  for (long y = by - ring + 1; y <= by + ring - 1; ++y) {
    visit(bx - ring, y);
    visit(bx + ring, y);
  }
}

std::size_t PointCloud::nearest_index(Point2 q) const {
  if (points_.empty()) throw InvalidArgument("nearest point of an empty cloud");
  std::size_t best = points_.size();
  double best_d2 = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> members;
  const int last = max_ring(q);
  for (int ring = 0; ring <= last; ++ring) {
    ring_members(q, ring, members);
    for (const auto i : members) {
      const double d2 = squared_distance(points_[i], q);
      if (d2 < best_d2 || (d2 == best_d2 && lex_less(points_[i], points_[best]))) {
        best_d2 = d2;
        best = i;
      }
    }
    // Points in ring r + 1 are at least r bucket sides away; ties need a strict margin.
    const double reach = static_cast<double>(ring);
    if (best < points_.size() && best_d2 < reach * reach) break;
  }
  return best;
}

PointCloud sample_poisson(RandomStream& stream, const Rect& window) {
  if (!(window.width() > 0.0 && window.height() > 0.0))
    throw InvalidArgument("Poisson window must be nondegenerate");
  std::vector<Point2> points;
  points.reserve(static_cast<std::size_t>(window.area() * 1.1) + 16);
  const double rate = window.height();
  double x = window.lo.x;
  for (;;) {
    x += -std::log(stream.uniform()) / rate;
    if (x > window.hi.x) break;
    points.push_back({x, window.lo.y + window.height() * stream.uniform()});
  }
  return PointCloud(window, std::move(points));
}

Point2 nearest_point(const PointCloud& cloud, Point2 x) {
  return cloud.points()[cloud.nearest_index(x)];
}

namespace {

/// Keep the part of a convex polygon with dot(v - origin, normal) <= offset.
void clip_half_plane(std::vector<Point2>& poly, Point2 origin, Point2 normal, double offset,
                     std::vector<Point2>& scratch) {
  scratch.clear();
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % m];
    const double fa = dot(a - origin, normal) - offset;
    const double fb = dot(b - origin, normal) - offset;
    if (fa <= 0.0) scratch.push_back(a);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      const double w = fa / (fa - fb);
      scratch.push_back(a + w * (b - a));
    }
  }
  poly.swap(scratch);
}

double farthest_vertex(const std::vector<Point2>& poly, Point2 z) {
  double r2 = 0.0;
  for (const auto& v : poly) r2 = std::max(r2, squared_distance(v, z));
  return std::sqrt(r2);
}

double segment_distance(Point2 a, Point2 b, Point2 y) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  double w = len2 > 0.0 ? dot(y - a, ab) / len2 : 0.0;
  w = std::clamp(w, 0.0, 1.0);
  return std::sqrt(squared_distance(a + w * ab, y));
}

}  // namespace

VoronoiCellPoly voronoi_cell(const PointCloud& cloud, Point2 z) {
  if (cloud.empty()) throw InvalidArgument("Voronoi cell of an empty cloud");
  const std::size_t self = cloud.nearest_index(z);
  if (!(cloud.points()[self] == z)) throw InvalidArgument("Voronoi cell requested for a non-site");

  const Rect& w = cloud.window();
  VoronoiCellPoly cell{z, {w.lo, {w.hi.x, w.lo.y}, w.hi, {w.lo.x, w.hi.y}}};
  std::vector<Point2> scratch;
  std::vector<std::size_t> members;
  const int last = cloud.max_ring(z);
  for (int ring = 0; ring <= last; ++ring) {
    cloud.ring_members(z, ring, members);
    for (const auto i : members) {
      if (i == self) continue;
      const Point2 d = cloud.points()[i] - z;
      clip_half_plane(cell.vertices, z, d, 0.5 * dot(d, d), scratch);
    }
    // Sites farther than twice the cell radius cannot cut the cell; unvisited
    // sites are at least `ring` away.
    if (static_cast<double>(ring) > 2.0 * farthest_vertex(cell.vertices, z)) break;
  }
  return cell;
}

VoronoiCellPoly cell_of(const PointCloud& cloud, Point2 y) {
  return voronoi_cell(cloud, nearest_point(cloud, y));
}

double dist_point_to_cell(const VoronoiCellPoly& cell, Point2 y) {
  const auto& v = cell.vertices;
  if (v.size() < 3) throw DegenerateError("cell polygon has fewer than three vertices");
  bool inside = true;
  for (std::size_t i = 0; i < v.size() && inside; ++i)
    inside = cross(v[(i + 1) % v.size()] - v[i], y - v[i]) >= 0.0;
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best, segment_distance(v[i], v[(i + 1) % v.size()], y));
  return best;
}

Rect segment_window(Point2 x, double margin) {
  return {{std::min(0.0, x.x) - margin, std::min(0.0, x.y) - margin},
          {std::max(0.0, x.x) + margin, std::max(0.0, x.y) + margin}};
}

PathSample D_process(const PointCloud& cloud, Point2 x, std::span<const double> grid,
                     double margin) {
  if (!valid_unit_grid(grid)) throw InvalidArgument("grid must be increasing and inside [0, 1]");
  const double length = norm(x);
  if (!(length > 0.0)) throw InvalidArgument("D process needs x != 0");
  const Rect need = segment_window(x, margin);
  const Rect& have = cloud.window();
  if (!(have.contains(need.lo) && have.contains(need.hi)))
    throw InvalidArgument("cloud window does not cover the segment [0, x] with the margin");

  const Point2 anchor = nearest_point(cloud, x);
  const double scale = 1.0 / std::sqrt(length);
  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size(), 0.0), std::nullopt};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    const Point2 moved = t * anchor;
    const Point2 target = t * x;
    const std::size_t site = cloud.nearest_index(moved);
    const Point2 z = cloud.points()[site];
    // y lies in sigma(z) iff z is at least as close to y as every other site.
    const double own = squared_distance(z, target);
    const double best = squared_distance(nearest_point(cloud, target), target);
    if (own <= best) continue;
    out.values[j] = scale * dist_point_to_cell(voronoi_cell(cloud, z), target);
  }
  return out;
}

void write_cells_json(std::ostream& out, const PointCloud& cloud,
                      std::span<const VoronoiCellPoly> cells) {
  nlohmann::json doc;
  const Rect& w = cloud.window();
  doc["window"] = {w.lo.x, w.lo.y, w.hi.x, w.hi.y};
  auto& sites = doc["sites"] = nlohmann::json::array();
  for (const auto& p : cloud.points()) sites.push_back({p.x, p.y});
  auto& polys = doc["cells"] = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& v : c.vertices) poly.push_back({v.x, v.y});
    polys.push_back({{"site", {c.site.x, c.site.y}}, {"vertices", poly}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace bridgelab
