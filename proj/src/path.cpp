#include "bridgelab/path.hpp"

#include "bridgelab/distribution.hpp"

namespace bridgelab {

std::vector<double> uniform_grid(std::size_t k) {
  if (k < 2) throw InvalidArgument("grid needs at least 2 points");
  std::vector<double> grid(k);
  const double denom = static_cast<double>(k - 1);
  for (std::size_t i = 0; i < k; ++i) grid[i] = static_cast<double>(i) / denom;
  return grid;
}

bool valid_unit_grid(std::span<const double> grid) noexcept {
  if (grid.empty()) return false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] <= 1.0)) return false;
    if (i > 0 && !(grid[i] > grid[i - 1])) return false;
  }
  return true;
}

}  // namespace bridgelab
