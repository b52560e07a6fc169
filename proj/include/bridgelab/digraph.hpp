#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "bridgelab/path.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

/// Directed Erdos-Renyi graph on vertices 0..n-1: each pair (i, j), i < j,
/// is an edge independently with probability p. Vertex order is a
/// topological order.
struct RandomDigraph {
  std::size_t n = 0;
  double p = 0.0;
  std::vector<std::vector<std::uint32_t>> in_neighbors;  // ascending per vertex

  std::size_t edge_count() const noexcept;
};

/// Longest-path weight of every vertex (path length in edges), the maximum L,
/// and the number of vertices at each weight.
struct WeightProfile {
  std::vector<std::uint32_t> weights;
  std::uint32_t max_weight = 0;               // L
  std::vector<std::uint32_t> level_sizes;     // level_sizes[l] = #{j : w(j) = l}, size L + 1

  std::size_t size() const noexcept { return weights.size(); }
};

enum class CountVariant {
  Cumulative,  // #{j : w(j) <= l}, centred at t n
  Tail,        // #{j : w(j) >= l}, centred at (1 - t) n
};

RandomDigraph generate_digraph(RandomStream& stream, std::size_t n, double p);

WeightProfile vertex_weights(const RandomDigraph& g);

/// Generate and weigh in one pass without storing edges. Consumes the stream
/// exactly as `generate_digraph` does, so the result equals
/// `vertex_weights(generate_digraph(stream, n, p))`.
WeightProfile sample_weight_profile(RandomStream& stream, std::size_t n, double p);

/// Cumulative: #{j : w(j) <= l}. Tail: #{j : w(j) >= l}. Requires 0 <= l <= L.
std::size_t level_count(const WeightProfile& profile, std::size_t level, CountVariant variant);

/// Cumulative: (C([t L]) - t n) / sqrt(n). Tail: (T([t L]) - (1 - t) n) / sqrt(n).
PathSample digraph_bridge_process(const WeightProfile& profile, std::span<const double> grid,
                                  CountVariant variant = CountVariant::Cumulative);

/// One "i j" line per edge, 1-based vertex labels.
void write_edge_list(std::ostream& out, const RandomDigraph& g);

}  // namespace bridgelab
