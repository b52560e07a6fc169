#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "bridgelab/errors.hpp"
#include "bridgelab//digraph.hpp"
#include "bridgelab/path.hpp"

using namespace bridgelab;

namespace {

RandomDigraph complete_dag(std::size_t n) {
  RandomDigraph g{n, 0.5, std::vector<std::vector<std::uint32_t>>(n)};
  for (std::uint32_t j = 0; j < n; ++j)
    for (std::uint32_t i = 0; i < j; ++i) g.in_neighbors[j].push_back(i);
  return g;
}

// Enumerates every directed path ending at v and returns the longest length.
std::uint32_t longest_by_enumeration(const RandomDigraph& g, std::uint32_t v) {
  std::uint32_t best = 0;
  std::function<void(std::uint32_t, std::uint32_t)> walk = [&](std::uint32_t at, std::uint32_t len) {
    best = std::max(best, len);
    for (const auto from : g.in_neighbors[at]) walk(from, len + 1);
  };
  walk(v, 0);
  return best;
}

}  // namespace

TEST_CASE("tiny graphs") {
  auto s = make_stream(31, 0);
  CHECK(generate_digraph(s, 1, 0.5).edge_count() == 0);
  const RandomDigraph empty{5, 0.1, std::vector<std::vector<std::uint32_t>>(5)};
  const auto w = vertex_weights(empty);
  CHECK(w.max_weight == 0);
  CHECK(std::all_of(w.weights.begin(), w.weights.end(), [](auto x) { return x == 0; }));
  CHECK(level_count(w, 0, CountVariant::Cumulative) == 5);

  const auto full = vertex_weights(complete_dag(4));
  CHECK(full.weights == std::vector<std::uint32_t>{0, 1, 2, 3});
  CHECK(full.max_weight == 3);
  CHECK(level_count(full, 2, CountVariant::Tail) == 2);
  CHECK(level_count(full, 2, CountVariant::Cumulative) == 3);
}

TEST_CASE("edge probability precondition") {
  auto s = make_stream(31, 1);
  CHECK_THROWS_AS(generate_digraph(s, 10, 1.0), InvalidArgument);
  CHECK_THROWS_AS(generate_digraph(s, 10, 0.0), InvalidArgument);
  CHECK_THROWS_AS(generate_digraph(s, 0, 0.5), InvalidArgument);
}

TEST_CASE("mean edge count") {
  auto s = make_stream(32, 0);
  double mean = 0.0;
  for (int r = 0; r < 500; ++r) mean += static_cast<double>(generate_digraph(s, 100, 0.5).edge_count());
  CHECK(mean / 500.0 == doctest::Approx(2475.0).epsilon(0.02));
}

TEST_CASE("edges are valid and ascending") {
  auto s = make_stream(33, 0);
  const auto g = generate_digraph(s, 300, 0.05);
  for (std::uint32_t j = 0; j < g.n; ++j) {
    const auto& in = g.in_neighbors[j];
    CHECK(std::is_sorted(in.begin(), in.end()));
    CHECK(std::adjacent_find(in.begin(), in.end()) == in.end());
    for (const auto i : in) CHECK(i < j);
  }
}

TEST_CASE("dynamic programme agrees with path enumeration") {
  auto s = make_stream(34, 0);
  int instances = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rep % 8;
    const double p = 0.05 + 0.9 * s.uniform();
    const auto g = generate_digraph(s, n, p);
    const auto w = vertex_weights(g);
    for (std::uint32_t v = 0; v < n; ++v) CHECK(w.weights[v] == longest_by_enumeration(g, v));
    ++instances;
  }
  CHECK(instances == 200);
}

TEST_CASE("fused sampler matches generate then weigh") {
  for (std::uint64_t id = 0; id < 20; ++id) {
    auto a = make_stream(35, id);
    auto b = make_stream(35, id);
    const std::size_t n = 50 + 30 * id;
    const double p = 0.02 + 0.01 * static_cast<double>(id);
    const auto direct = vertex_weights(generate_digraph(a, n, p));
    const auto fused = sample_weight_profile(b, n, p);
    CHECK(direct.weights == fused.weights);
    CHECK(direct.level_sizes == fused.level_sizes);
  }
}

TEST_CASE("profile invariants") {
  auto s = make_stream(36, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 20 + static_cast<std::size_t>(s.uniform() * 400);
    const auto w = sample_weight_profile(s, n, 0.02 + 0.3 * s.uniform());
    CHECK(w.max_weight <= n - 1);
    for (std::size_t j = 0; j < n; ++j) CHECK(w.weights[j] <= j);
    CHECK(level_count(w, w.max_weight, CountVariant::Cumulative) == n);
    CHECK(level_count(w, 0, CountVariant::Tail) == n);
    for (std::size_t l = 0; l < w.max_weight; ++l) {
      CHECK(level_count(w, l, CountVariant::Cumulative) + level_count(w, l + 1, CountVariant::Tail) == n);
      CHECK(level_count(w, l, CountVariant::Cumulative) <= level_count(w, l + 1, CountVariant::Cumulative));
      CHECK(level_count(w, l, CountVariant::Tail) >= level_count(w, l + 1, CountVariant::Tail));
    }
  }
}

TEST_CASE("bridge process endpoints and mirror") {
  auto s = make_stream(37, 0);
  const auto grid = uniform_grid(21);
  double start = 0.0;
  const int reps = 200;
  const std::size_t n = 2000;
  const double p = 0.1;
  for (int rep = 0; rep < reps; ++rep) {
    const auto w = sample_weight_profile(s, n, p);
    const auto cum = digraph_bridge_process(w, grid, CountVariant::Cumulative);
    const auto tail = digraph_bridge_process(w, grid, CountVariant::Tail);
    CHECK(cum.values.back() == 0.0);
    CHECK(cum.values.front() == static_cast<double>(w.level_sizes[0]) / std::sqrt(static_cast<double>(n)));
    start += cum.values.front();
    // Since #{w >= l} = n - #{w <= l - 1}, the two readings at the same t
    // sum to the size of level [t L].
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const auto level = floor_index(grid[j] * w.max_weight);
      CHECK(cum.values[j] + tail.values[j] ==
            doctest::Approx(w.level_sizes[level] / std::sqrt(static_cast<double>(n))).epsilon(1e-9));
    }
  }
  CHECK(start / reps <= 1.0 / (p * std::sqrt(static_cast<double>(n))) * 1.05);
}

TEST_CASE("edge list output") {
  std::ostringstream out;
  write_edge_list(out, complete_dag(3));
  CHECK(out.str() == "1 2\n1 3\n2 3\n");
}
