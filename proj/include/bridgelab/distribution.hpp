#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bridgelab/errors.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

enum class DistKind { Exponential, Uniform, Deterministic, TwoPointLattice, Gamma, Pareto };

struct Moments {
  double mean;
  double variance;
};

/// A strictly positive law with finite mean and variance.
///
/// Parameterizations:
///   exponential(rate)               mean 1/rate
///   uniform(lo, hi)                 0 <= lo < hi
///   deterministic(c)                c > 0
///   two_point_lattice(a, b, q)      a w.p. q, b w.p. 1-q; 0 < a < b
///   gamma(shape, scale)             Marsaglia-Tsang sampler
///   pareto(shape, scale)            shape > 2 so the variance is finite
///
/// Construction validates the parameters; an existing DistributionSpec is
/// always admissible.
class DistributionSpec {
 public:
  static DistributionSpec exponential(double rate);
  static DistributionSpec uniform(double lo, double hi);
  static DistributionSpec deterministic(double value);
  static DistributionSpec two_point_lattice(double a, double b, double prob_a = 0.5);
  static DistributionSpec gamma(double shape, double scale);
  static DistributionSpec pareto(double shape, double scale);

  /// Build from a kind name ("exponential", "two-point-lattice", ...) and a
  /// parameter list, as used by the config file.
  static DistributionSpec from_name(std::string_view kind, const std::vector<double>& params);

  DistKind kind() const noexcept { return kind_; }
  const std::vector<double>& params() const noexcept { return params_; }
  std::string name() const;

  Moments moments() const noexcept;

  /// One strictly positive draw.
  double sample(RandomStream& stream) const;

  /// Largest value in the support, or +inf.
  double support_max() const noexcept;

 private:
  DistributionSpec(DistKind kind, std::vector<double> params)
      : kind_(kind), params_(std::move(params)) {}

  DistKind kind_;
  std::vector<double> params_;
};

inline Moments dist_moments(const DistributionSpec& dist) noexcept { return dist.moments(); }

inline double sample_positive(RandomStream& stream, const DistributionSpec& dist) {
  return dist.sample(stream);
}

/// Standard gamma(shape, 1) draw, shape > 0.
double sample_standard_gamma(RandomStream& stream, double shape);

/// Poisson(mean) draw by sequential inversion; intended for small means.
int sample_poisson_small(RandomStream& stream, double mean);

}  // namespace bridgelab
