#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bridgelab/distribution.hpp"
#include "bridgelab/path.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

/// Renewal epochs 0 < R_1 < R_2 < ... < R_N with R_0 := 0.
///
/// Paths built by `simulate_renewal` end with exactly one epoch strictly
/// beyond `horizon`, so the count A_u and the age at the horizon are
/// always defined.
struct RenewalPath {
  std::vector<double> epochs;  // R_1 ... R_N
  double horizon = 0.0;
  Moments interarrival{0.0, 0.0};  // law of R_{k+1} - R_k, k >= 1

  /// R_k, with R_0 = 0.
  double epoch(std::size_t k) const {
    if (k == 0) return 0.0;
    if (k > epochs.size()) throw HorizonExceeded("renewal epoch index beyond simulated path");
    return epochs[k - 1];
  }
  std::size_t size() const noexcept { return epochs.size(); }
};

/// Simulate epochs until the first one strictly exceeds `u`. With a delay
/// law, R_1 is drawn from it and later gaps from `dist`.
RenewalPath simulate_renewal(RandomStream& stream, const DistributionSpec& dist, double u,
                             const std::optional<DistributionSpec>& delay = std::nullopt);

/// Simulate n + 1 epochs; the horizon is set to R_n.
RenewalPath simulate_renewal_epochs(RandomStream& stream, const DistributionSpec& dist,
                                    std::size_t n,
                                    const std::optional<DistributionSpec>& delay = std::nullopt);

/// A_t = #{n >= 1 : R_n <= t}, for 0 <= t <= horizon.
std::size_t count_at(const RenewalPath& path, double t);

/// u - R_{A_u}.
double age(const RenewalPath& path, double u);

/// (R_{[t A_u]} - t u) / sqrt(u). Scale hint mu^{-1/2} sigma.
PathSample eta_u(const RenewalPath& path, double u, std::span<const double> grid);

/// (R_{[t u]} - mu t u) / sqrt(u), for t >= 0 with [t u] within the path.
PathSample y_u(const RenewalPath& path, double u, std::span<const double> times);

/// t A_u / u.
double phi_u(const RenewalPath& path, double u, double t);

/// Largest absolute gap between eta_u and its three-term decomposition
///   (y_u o phi_u)(t) - t (y_u o phi_u)(1) - t (u - R_{A_u}) / sqrt(u).
/// Both sides are exact algebraically, so the residual is pure roundoff.
double decomposition_residual(const RenewalPath& path, double u, std::span<const double> grid);

/// (A_{n t} - n t / mu) / sqrt(n). Scale hint mu^{-3/2} sigma.
PathSample xi_n(const RenewalPath& path, double n, std::span<const double> grid);

/// (A(t R_n) - t n) / sqrt(n). Scale hint sigma / mu.
PathSample eta_prime_n(const RenewalPath& path, std::size_t n, std::span<const double> grid);

}  // namespace bridgelab
