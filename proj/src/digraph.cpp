#include "bridgelab/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "bridgelab/errors.hpp"

namespace bridgelab {

namespace {

void require_params(std::size_t n, double p) {
  if (n == 0) throw InvalidArgument("digraph needs n >= 1");
  if (n > (std::size_t{1} << 31)) throw InvalidArgument("digraph: n too large");
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("digraph needs 0 < p < 1");
}

/// Visits the in-neighbours of every vertex j = 1..n-1 in ascending order,
/// skipping non-edges with geometric gaps.
template <class OnVertexBegin, class OnEdge>
void for_each_edge(RandomStream& stream, std::size_t n, double p, OnVertexBegin&& begin,
                   OnEdge&& edge) {
  const double log_q = std::log1p(-p);
  for (std::size_t j = 1; j < n; ++j) {
    begin(j);
    const double limit = static_cast<double>(j);
    double i = -1.0;
    for (;;) {
      i += 1.0 + std::floor(std::log(stream.uniform()) / log_q);
      if (i >= limit) break;
      edge(static_cast<std::uint32_t>(i), j);
    }
  }
}

WeightProfile profile_from_weights(std::vector<std::uint32_t> weights) {
  WeightProfile profile;
  profile.max_weight = weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
  profile.level_sizes.assign(profile.max_weight + 1, 0);
  for (const auto w : weights) ++profile.level_sizes[w];
  profile.weights = std::move(weights);
  return profile;
}

}  // namespace

std::size_t RandomDigraph::edge_count() const noexcept {
  std::size_t total = 0;
  for (const auto& list : in_neighbors) total += list.size();
  return total;
}

RandomDigraph generate_digraph(RandomStream& stream, std::size_t n, double p) {
  require_params(n, p);
  RandomDigraph g{n, p, std::vector<std::vector<std::uint32_t>>(n)};
  const auto expected = static_cast<std::size_t>(p * static_cast<double>(n));
  for_each_edge(
      stream, n, p, [&](std::size_t j) { g.in_neighbors[j].reserve(std::min(j, expected + 8)); },
      [&](std::uint32_t i, std::size_t j) { g.in_neighbors[j].push_back(i); });
  return g;
}

WeightProfile vertex_weights(const RandomDigraph& g) {
  std::vector<std::uint32_t> w(g.n, 0);
  for (std::size_t j = 0; j < g.n; ++j) {
    for (const auto i : g.in_neighbors[j]) w[j] = std::max(w[j], w[i] + 1);
  }
  return profile_from_weights(std::move(w));
}

WeightProfile sample_weight_profile(RandomStream& stream, std::size_t n, double p) {
  require_params(n, p);
  std::vector<std::uint32_t> w(n, 0);
  std::uint32_t current = 0;
  std::size_t vertex = 0;
  for_each_edge(
      stream, n, p,
      [&](std::size_t j) {
        if (vertex > 0) w[vertex] = current;
        vertex = j;
        current = 0;
      },
      [&](std::uint32_t i, std::size_t) { current = std::max(current, w[i] + 1); });
  if (vertex > 0) w[vertex] = current;
  return profile_from_weights(std::move(w));
}

std::size_t level_count(const WeightProfile& profile, std::size_t level, CountVariant variant) {
  if (level > profile.max_weight) throw InvalidArgument("level outside [0, L]");
  std::size_t below = 0;  // #{w < level}
  for (std::size_t l = 0; l < level; ++l) below += profile.level_sizes[l];
  if (variant == CountVariant::Tail) return profile.size() - below;
  return below + profile.level_sizes[level];
}

PathSample digraph_bridge_process(const WeightProfile& profile, std::span<const double> grid,
                                  CountVariant variant) {
  if (!valid_unit_grid(grid)) throw InvalidArgument("grid must be increasing and inside [0, 1]");
  if (profile.max_weight == 0) throw DegenerateError("digraph has no edges (L = 0)");
  const double n = static_cast<double>(profile.size());
  const double root_n = std::sqrt(n);
  const double top = static_cast<double>(profile.max_weight);

  // cumulative[l] = #{w <= l}
  std::vector<std::size_t> cumulative(profile.level_sizes.size());
  std::size_t running = 0;
  for (std::size_t l = 0; l < cumulative.size(); ++l) cumulative[l] = running += profile.level_sizes[l];

  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size()), std::nullopt};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    const std::size_t level = floor_index(t * top);
    if (variant == CountVariant::Cumulative) {
      out.values[j] = (static_cast<double>(cumulative[level]) - t * n) / root_n;
    } else {
      const double tail = level == 0 ? n : n - static_cast<double>(cumulative[level - 1]);
      out.values[j] = (tail - (1.0 - t) * n) / root_n;
    }
  }
  return out;
}

void write_edge_list(std::ostream& out, const RandomDigraph& g) {
  for (std::size_t j = 0; j < g.n; ++j)
    for (const auto i : g.in_neighbors[j]) out << (i + 1) << ' ' << (j + 1) << '\n';
}

}  // namespace bridgelab
