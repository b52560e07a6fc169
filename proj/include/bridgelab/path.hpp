#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace bridgelab {

/// A finite-grid evaluation of a D[0,1]-valued process.
struct PathSample {
  std::vector<double> grid;
  std::vector<double> values;
  std::optional<double> scale_hint;
};

/// K equispaced points from 0 to 1 inclusive. K >= 2.
std::vector<double> uniform_grid(std::size_t k);

/// True iff the grid is strictly increasing and contained in [0, 1].
bool valid_unit_grid(std::span<const double> grid) noexcept;

/// Largest integer not exceeding x, for x >= 0.
///
/// A product such as (t * A / u) * u can land one ulp below an exact integer;
/// values within a few ulps of an integer are snapped to it first.
inline std::size_t floor_index(double x) noexcept {
  if (!(x > 0.0)) return 0;
  const double r = std::nearbyint(x);
  if (std::abs(x - r) <= 8.0 * 0x1.0p-52 * r) return static_cast<std::size_t>(r);
  return static_cast<std::size_t>(std::floor(x));
}

}  // namespace bridgelab
