#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "bridgelab/errors.hpp"
#include "bridgelab//path.hpp"
#include "bridgelab/voronoi.hpp"

using namespace bridgelab;

namespace {

Point2 linear_nearest(const PointCloud& cloud, Point2 q) {
  Point2 best = cloud.points()[0];
  for (const auto& p : cloud.points()) {
    const double d = squared_distance(p, q);
    const double b = squared_distance(best, q);
    if (d < b || (d == b && lex_less(p, best))) best = p;
  }
  return best;
}

// Distance from y to a polygon boundary by dense sampling of its edges,
// refined around the best sample.
double sampled_boundary_distance(const VoronoiCellPoly& cell, Point2 y) {
  const auto& v = cell.vertices;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 a = v[i];
    const Point2 b = v[(i + 1) % v.size()];
    double lo = 0.0;
    double hi = 1.0;
    for (int pass = 0; pass < 4; ++pass) {
      const int steps = 2000;
      double arg = lo;
      double local = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= steps; ++k) {
        const double w = lo + (hi - lo) * k / steps;
        const double d = norm(a + w * (b - a) - y);
        if (d < local) {
          local = d;
          arg = w;
        }
      }
      const double half = (hi - lo) / steps;
      lo = std::max(0.0, arg - half);
      hi = std::min(1.0, arg + half);
      best = std::min(best, local);
    }
  }
  return best;
}

Point2 random_point_in(const Rect& r, RandomStream& s) {
  return {r.lo.x + r.width() * s.uniform(), r.lo.y + r.height() * s.uniform()};
}

bool polygon_contains(const VoronoiCellPoly& cell, Point2 y) {
  return dist_point_to_cell(cell, y) == 0.0;
}

}  // namespace

TEST_CASE("poisson counts") {
  auto s = make_stream(41, 0);
  const Rect box{{0, 0}, {10, 10}};
  std::vector<double> counts;
  std::vector<double> left;
  std::vector<double> right;
  for (int r = 0; r < 2000; ++r) {
    const auto cloud = sample_poisson(s, box);
    counts.push_back(static_cast<double>(cloud.size()));
    double l = 0;
    double rt = 0;
    for (const auto& p : cloud.points()) {
      CHECK(box.contains(p));
      (p.x < 5.0 ? l : rt) += 1.0;
    }
    left.push_back(l);
    right.push_back(rt);
  }
  auto mean = [](const std::vector<double>& v) {
    double m = 0;
    for (const double x : v) m += x;
    return m / static_cast<double>(v.size());
  };
  const double m = mean(counts);
  double var = 0;
  for (const double c : counts) var += (c - m) * (c - m);
  var /= static_cast<double>(counts.size() - 1);
  CHECK(m == doctest::Approx(100.0).epsilon(0.025));
  CHECK(var == doctest::Approx(100.0).epsilon(0.1));

  const double ml = mean(left);
  const double mr = mean(right);
  double cov = 0;
  std::vector<double> prod;
  for (std::size_t i = 0; i < left.size(); ++i) prod.push_back((left[i] - ml) * (right[i] - mr));
  cov = mean(prod);
  double sp = 0;
  for (const double x : prod) sp += (x - cov) * (x - cov);
  const double se = std::sqrt(sp / static_cast<double>(prod.size() - 1) / static_cast<double>(prod.size()));
  CHECK(std::abs(cov) <= 3.0 * se);
}

TEST_CASE("nearest point basics") {
  const Rect box{{-5, -5}, {5, 5}};
  const PointCloud single(box, {{1.0, 2.0}});
  CHECK(nearest_point(single, {-4.0, -4.0}) == Point2{1.0, 2.0});
  auto s = make_stream(42, 0);
  const auto cloud = sample_poisson(s, box);
  for (const auto& p : cloud.points()) CHECK(nearest_point(cloud, p) == p);
}

TEST_CASE("nearest point agrees with a linear scan") {
  auto s = make_stream(43, 0);
  for (int c = 0; c < 10; ++c) {
    const Rect box{{-3.0, -7.0}, {25.0, 9.0}};
    const auto cloud = sample_poisson(s, box);
    for (int q = 0; q < 100; ++q) {
      const Point2 y = random_point_in(box, s);
      CHECK(nearest_point(cloud, y) == linear_nearest(cloud, y));
    }
  }
  // Sparse cloud: the ring search must look far.
  const PointCloud sparse({{0, 0}, {40, 40}}, {{1, 1}, {39, 39}, {20, 35}});
  for (int q = 0; q < 100; ++q) {
    const Point2 y = random_point_in(sparse.window(), s);
    CHECK(nearest_point(sparse, y) == linear_nearest(sparse, y));
  }
}

TEST_CASE("equidistant sites break ties lexicographically") {
  const PointCloud two({{-5, -5}, {5, 5}}, {{2.0, 0.0}, {0.0, 0.0}});
  CHECK(nearest_point(two, {1.0, 3.0}) == Point2{0.0, 0.0});
}

TEST_CASE("cell of two sites") {
  const PointCloud two({{-5, -5}, {5, 5}}, {{0.0, 0.0}, {2.0, 0.0}});
  const auto cell = voronoi_cell(two, {0.0, 0.0});
  double max_x = -10;
  double min_x = 10;
  for (const auto& v : cell.vertices) {
    max_x = std::max(max_x, v.x);
    min_x = std::min(min_x, v.x);
  }
  CHECK(max_x == doctest::Approx(1.0));
  CHECK(min_x == doctest::Approx(-5.0));
  CHECK(dist_point_to_cell(cell, {3.0, 0.0}) == doctest::Approx(2.0));
  CHECK(dist_point_to_cell(cell, {-1.0, 2.0}) == 0.0);

  const PointCloud one({{-5, -5}, {5, 5}}, {{0.0, 0.0}});
  const auto whole = voronoi_cell(one, {0.0, 0.0});
  CHECK(whole.vertices.size() == 4);
  CHECK_THROWS_AS(voronoi_cell(one, {1.0, 1.0}), InvalidArgument);
}

TEST_CASE("cell membership sampling") {
  auto s = make_stream(44, 0);
  for (int c = 0; c < 50; ++c) {
    const Rect box{{0, 0}, {12, 12}};
    const auto cloud = sample_poisson(s, box);
    if (cloud.empty()) continue;
    const Point2 z = cloud.points()[static_cast<std::size_t>(s.uniform() * cloud.size())];
    const auto cell = voronoi_cell(cloud, z);
    Rect bbox{cell.vertices[0], cell.vertices[0]};
    for (const auto& v : cell.vertices) {
      bbox.lo = {std::min(bbox.lo.x, v.x), std::min(bbox.lo.y, v.y)};
      bbox.hi = {std::max(bbox.hi.x, v.x), std::max(bbox.hi.y, v.y)};
    }
    int inside = 0;
    while (inside < 1000) {
      const Point2 y = random_point_in(bbox, s);
      if (!polygon_contains(cell, y)) continue;
      ++inside;
      const double own = squared_distance(y, z);
      const double best = squared_distance(y, linear_nearest(cloud, y));
      CHECK(own <= best * (1.0 + 1e-9) + 1e-12);
    }
  }
}

TEST_CASE("cell_of consistency") {
  auto s = make_stream(45, 0);
  const Rect box{{-10, -10}, {10, 10}};
  const auto cloud = sample_poisson(s, box);
  for (int q = 0; q < 100; ++q) {
    const Point2 y = random_point_in(box, s);
    const auto cell = cell_of(cloud, y);
    CHECK(cell.site == nearest_point(cloud, y));
    CHECK(dist_point_to_cell(cell, y) <= 1e-12);
  }
  const auto own = cell_of(cloud, cloud.points()[0]);
  CHECK(own.site == cloud.points()[0]);
}

TEST_CASE("boundary distance agrees with sampling") {
  auto s = make_stream(46, 0);
  int checked = 0;
  while (checked < 100) {
    const Rect box{{0, 0}, {15, 15}};
    const auto cloud = sample_poisson(s, box);
    const Point2 z = cloud.points()[static_cast<std::size_t>(s.uniform() * cloud.size())];
    const auto cell = voronoi_cell(cloud, z);
    const Point2 y = random_point_in(box, s);
    const double d = dist_point_to_cell(cell, y);
    if (d == 0.0) continue;
    CHECK(std::abs(d - sampled_boundary_distance(cell, y)) <= 1e-6);
    ++checked;
  }
}

TEST_CASE("primitives are translation equivariant") {
  auto s = make_stream(47, 0);
  const Rect box{{0, 0}, {16, 16}};
  const auto cloud = sample_poisson(s, box);
  const Point2 shift{0.5, -0.25};
  std::vector<Point2> moved;
  for (const auto& p : cloud.points()) moved.push_back(p + shift);
  const PointCloud shifted({box.lo + shift, box.hi + shift}, moved);
  for (int q = 0; q < 100; ++q) {
    const Point2 y = random_point_in({{3, 3}, {13, 13}}, s);
    CHECK(nearest_point(shifted, y + shift) == nearest_point(cloud, y) + shift);
    const auto a = cell_of(cloud, y);
    const auto b = cell_of(shifted, y + shift);
    CHECK(b.site == a.site + shift);
    const Point2 probe = random_point_in(box, s);
    CHECK(dist_point_to_cell(b, probe + shift) ==
          doctest::Approx(dist_point_to_cell(a, probe)).epsilon(1e-9));
  }
}

TEST_CASE("D process pinning and sign") {
  auto s = make_stream(48, 0);
  const auto grid = uniform_grid(21);
  for (int r = 0; r < 20; ++r) {
    const double angle = 2.0 * std::numbers::pi * s.uniform();
    const Point2 x{60.0 * std::cos(angle), 60.0 * std::sin(angle)};
    const auto cloud = sample_poisson(s, segment_window(x));
    const auto d = D_process(cloud, x, grid);
    CHECK(d.values.front() == 0.0);
    CHECK(d.values.back() == 0.0);
    const double bound = norm(nearest_point(cloud, x) - x) / std::sqrt(norm(x));
    for (std::size_t j = 0; j < grid.size(); ++j) {
      CHECK(d.values[j] >= 0.0);
      // dist(sigma(t pi(x)), t x) <= |t pi(x) - t x|.
      CHECK(d.values[j] <= grid[j] * bound * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("D process window check") {
  auto s = make_stream(49, 0);
  const auto cloud = sample_poisson(s, {{0, 0}, {10, 10}});
  CHECK_THROWS_AS(D_process(cloud, {50.0, 0.0}, uniform_grid(5)), InvalidArgument);
}

TEST_CASE("cells json") {
  const PointCloud two({{-5, -5}, {5, 5}}, {{0.0, 0.0}, {2.0, 0.0}});
  std::vector<VoronoiCellPoly> cells{voronoi_cell(two, {0.0, 0.0}), voronoi_cell(two, {2.0, 0.0})};
  std::ostringstream out;
  write_cells_json(out, two, cells);
  const auto doc = nlohmann::json::parse(out.str());
  CHECK(doc["sites"].size() == 2);
  CHECK(doc["cells"].size() == 2);
}
