#include "bridgelab/renewal.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace bridgelab {

namespace {

void require_grid(std::span<const double> grid) {
  if (!valid_unit_grid(grid)) throw InvalidArgument("grid must be increasing and inside [0, 1]");
}

double scale_bridge(const Moments& m) { return std::sqrt(m.variance / m.mean); }

}  // namespace

RenewalPath simulate_renewal(RandomStream& stream, const DistributionSpec& dist, double u,
                             const std::optional<DistributionSpec>& delay) {
  if (!(u > 0.0) || !std::isfinite(u)) throw InvalidArgument("renewal horizon must be positive");
  RenewalPath path;
  path.horizon = u;
  path.interarrival = dist.moments();
  path.epochs.reserve(static_cast<std::size_t>(u / path.interarrival.mean * 1.1) + 16);
  double r = delay ? delay->sample(stream) : dist.sample(stream);
  path.epochs.push_back(r);
  while (r <= u) {
    r += dist.sample(stream);
    path.epochs.push_back(r);
  }
  return path;
}

RenewalPath simulate_renewal_epochs(RandomStream& stream, const DistributionSpec& dist,
                                    std::size_t n, const std::optional<DistributionSpec>& delay) {
  if (n == 0) throw InvalidArgument("epoch count must be positive");
  RenewalPath path;
  path.interarrival = dist.moments();
  path.epochs.reserve(n + 1);
  double r = delay ? delay->sample(stream) : dist.sample(stream);
  path.epochs.push_back(r);
  for (std::size_t k = 1; k <= n; ++k) {
    r += dist.sample(stream);
    path.epochs.push_back(r);
  }
  path.horizon = path.epochs[n - 1];
  return path;
}

std::size_t count_at(const RenewalPath& path, double t) {
  if (!(t >= 0.0 && t <= path.horizon))
    throw InvalidArgument(fmt::format("count_at: t = {} outside [0, {}]", t, path.horizon));
  return static_cast<std::size_t>(
      std::upper_bound(path.epochs.begin(), path.epochs.end(), t) - path.epochs.begin());
}

double age(const RenewalPath& path, double u) { return u - path.epoch(count_at(path, u)); }

PathSample eta_u(const RenewalPath& path, double u, std::span<const double> grid) {
  require_grid(grid);
  const std::size_t a_u = count_at(path, u);
  if (a_u == 0) throw DegenerateError("eta_u: no renewal epoch before the horizon");
  const double root_u = std::sqrt(u);
  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size()),
                 scale_bridge(path.interarrival)};
  const double count = static_cast<double>(a_u);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    out.values[j] = (path.epoch(floor_index(t * count)) - t * u) / root_u;
  }
  return out;
}

PathSample y_u(const RenewalPath& path, double u, std::span<const double> times) {
  if (!(u > 0.0)) throw InvalidArgument("y_u: u must be positive");
  const double mu = path.interarrival.mean;
  const double root_u = std::sqrt(u);
  PathSample out{{times.begin(), times.end()}, std::vector<double>(times.size()),
                 std::sqrt(path.interarrival.variance)};
  for (std::size_t j = 0; j < times.size(); ++j) {
    const double t = times[j];
    if (!(t >= 0.0)) throw InvalidArgument("y_u: times must be nonnegative");
    out.values[j] = (path.epoch(floor_index(t * u)) - mu * t * u) / root_u;
  }
  return out;
}

double phi_u(const RenewalPath& path, double u, double t) {
  return t * static_cast<double>(count_at(path, u)) / u;
}

double decomposition_residual(const RenewalPath& path, double u, std::span<const double> grid) {
  const PathSample eta = eta_u(path, u, grid);
  std::vector<double> composed_times(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) composed_times[j] = phi_u(path, u, grid[j]);
  const double phi_one = phi_u(path, u, 1.0);
  const PathSample composed = y_u(path, u, composed_times);
  const double at_one = y_u(path, u, std::span<const double>(&phi_one, 1)).values[0];
  const double age_term = age(path, u) / std::sqrt(u);

  double residual = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    const double rhs = composed.values[j] - t * at_one - t * age_term;
    residual = std::max(residual, std::abs(eta.values[j] - rhs));
  }
  return residual;
}

PathSample xi_n(const RenewalPath& path, double n, std::span<const double> grid) {
  require_grid(grid);
  if (!(n > 0.0)) throw InvalidArgument("xi_n: n must be positive");
  if (n * grid.back() > path.horizon)
    throw HorizonExceeded("xi_n: path horizon shorter than n * max(grid)");
  const double mu = path.interarrival.mean;
  const double root_n = std::sqrt(n);
  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size()),
                 std::sqrt(path.interarrival.variance) / std::pow(mu, 1.5)};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    out.values[j] = (static_cast<double>(count_at(path, n * t)) - n * t / mu) / root_n;
  }
  return out;
}

PathSample eta_prime_n(const RenewalPath& path, std::size_t n, std::span<const double> grid) {
  require_grid(grid);
  if (n == 0) throw InvalidArgument("eta_prime_n: n must be positive");
  if (path.size() < n) throw HorizonExceeded("eta_prime_n: fewer than n epochs simulated");
  const double r_n = path.epoch(n);
  const double nn = static_cast<double>(n);
  const double root_n = std::sqrt(nn);
  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size()),
                 std::sqrt(path.interarrival.variance) / path.interarrival.mean};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    // A(t R_n) counts epochs <= t R_n; t = 1 lands exactly on R_n.
    const auto count = static_cast<std::size_t>(
        std::upper_bound(path.epochs.begin(), path.epochs.end(), t * r_n) - path.epochs.begin());
    out.values[j] = (static_cast<double>(count) - t * nn) / root_n;
  }
  return out;
}

}  // namespace bridgelab
