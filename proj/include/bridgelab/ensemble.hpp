#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bridgelab/bridge_stats.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

/// Row-major replicate output, one row per replicate.
struct ReplicateMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  std::span<const double> row(std::size_t r) const noexcept { return {data.data() + r * cols, cols}; }

  /// Columns [first, first + count) as an ensemble on `grid`.
  PathEnsemble slice(std::size_t first, std::vector<double> grid,
                     std::optional<double> scale_hint = std::nullopt, bool folded = false) const;
};

/// Fills `row` for replicate `replicate` using only `stream`.
using ReplicateKernel =
    std::function<void(RandomStream& stream, std::size_t replicate, std::span<double> row)>;

struct ReplicatePlan {
  std::size_t replicates = 0;
  std::size_t width = 0;
  std::uint64_t seed = 0;
  std::uint64_t scenario_tag = 0;
};

/// Reference implementation: replicates in index order on the calling thread.
ReplicateMatrix run_replicates_serial(const ReplicatePlan& plan, const ReplicateKernel& kernel);

/// OpenMP implementation. Replicate r always uses stream
/// (seed, replicate_stream_id(scenario_tag, r)) and writes row r, so the
/// result is bit-identical to the serial reference for any worker count.
/// `workers` <= 0 uses the OpenMP default. If kernels throw, the exception of
/// the lowest failing replicate is rethrown.
ReplicateMatrix run_replicates_parallel(const ReplicatePlan& plan, const ReplicateKernel& kernel,
                                        int workers = 0);

}  // namespace bridgelab
