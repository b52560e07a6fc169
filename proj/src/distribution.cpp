#include "bridgelab/distribution.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace bridgelab {

namespace {

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

void require(bool ok, std::string_view what) {
  if (!ok) throw InvalidArgument(std::string(what));
}

}  // namespace

DistributionSpec DistributionSpec::exponential(double rate) {
  require(finite_positive(rate), "exponential: rate must be positive");
  return {DistKind::Exponential, {rate}};
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
  require(std::isfinite(lo) && std::isfinite(hi) && lo >= 0.0 && hi > lo,
          "uniform: need 0 <= lo < hi");
  return {DistKind::Uniform, {lo, hi}};
}

DistributionSpec DistributionSpec::deterministic(double value) {
  require(finite_positive(value), "deterministic: value must be positive");
  return {DistKind::Deterministic, {value}};
}

DistributionSpec DistributionSpec::two_point_lattice(double a, double b, double prob_a) {
  require(finite_positive(a) && std::isfinite(b) && b > a, "two-point-lattice: need 0 < a < b");
  require(prob_a > 0.0 && prob_a < 1.0, "two-point-lattice: probability must lie in (0, 1)");
  return {DistKind::TwoPointLattice, {a, b, prob_a}};
}

DistributionSpec DistributionSpec::gamma(double shape, double scale) {
  require(finite_positive(shape) && finite_positive(scale), "gamma: shape and scale must be positive");
  return {DistKind::Gamma, {shape, scale}};
}

DistributionSpec DistributionSpec::pareto(double shape, double scale) {
  require(std::isfinite(shape) && shape > 2.0, "pareto: shape must exceed 2 (finite variance)");
  require(finite_positive(scale), "pareto: scale must be positive");
  return {DistKind::Pareto, {shape, scale}};
}

DistributionSpec DistributionSpec::from_name(std::string_view kind,
                                             const std::vector<double>& p) {
  auto arity = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      throw InvalidArgument(fmt::format("{}: expected {} to {} parameters, got {}", kind, lo, hi,
                                        p.size()));
  };
  if (kind == "exponential") {
    arity(1, 1);
    return exponential(p[0]);
  }
  if (kind == "uniform") {
    arity(2, 2);
    return uniform(p[0], p[1]);
  }
  if (kind == "deterministic") {
    arity(1, 1);
    return deterministic(p[0]);
  }
  if (kind == "two-point-lattice") {
    arity(2, 3);
    return two_point_lattice(p[0], p[1], p.size() == 3 ? p[2] : 0.5);
  }
  if (kind == "gamma") {
    arity(2, 2);
    return gamma(p[0], p[1]);
  }
  if (kind == "pareto") {
    arity(2, 2);
    return pareto(p[0], p[1]);
  }
  throw InvalidArgument(fmt::format("unknown distribution kind '{}'", kind));
}

std::string DistributionSpec::name() const {
  switch (kind_) {
    case DistKind::Exponential: return "exponential";
    case DistKind::Uniform: return "uniform";
    case DistKind::Deterministic: return "deterministic";
    case DistKind::TwoPointLattice: return "two-point-lattice";
    case DistKind::Gamma: return "gamma";
    case DistKind::Pareto: return "pareto";
  }
  return "unknown";
}

Moments DistributionSpec::moments() const noexcept {
  const auto& p = params_;
  switch (kind_) {
    case DistKind::Exponential: return {1.0 / p[0], 1.0 / (p[0] * p[0])};
    case DistKind::Uniform: {
      const double w = p[1] - p[0];
      return {0.5 * (p[0] + p[1]), w * w / 12.0};
    }
    case DistKind::Deterministic: return {p[0], 0.0};
    case DistKind::TwoPointLattice: {
      const double d = p[1] - p[0];
      return {p[2] * p[0] + (1.0 - p[2]) * p[1], p[2] * (1.0 - p[2]) * d * d};
    }
    case DistKind::Gamma: return {p[0] * p[1], p[0] * p[1] * p[1]};
    case DistKind::Pareto: {
      const double a = p[0], xm = p[1];
      return {a * xm / (a - 1.0), xm * xm * a / ((a - 1.0) * (a - 1.0) * (a - 2.0))};
    }
  }
  return {0.0, 0.0};
}

double DistributionSpec::support_max() const noexcept {
  switch (kind_) {
    case DistKind::Uniform: return params_[1];
    case DistKind::Deterministic: return params_[0];
    case DistKind::TwoPointLattice: return params_[1];
    default: return std::numeric_limits<double>::infinity();
  }
}

double DistributionSpec::sample(RandomStream& stream) const {
  const auto& p = params_;
  switch (kind_) {
    case DistKind::Exponential: return -std::log(stream.uniform()) / p[0];
    case DistKind::Uniform: {
      const double x = p[0] + (p[1] - p[0]) * stream.uniform();
      // lo = 0 with a tiny uniform could round to zero only if hi underflows.
      return x > 0.0 ? x : std::numeric_limits<double>::min();
    }
    case DistKind::Deterministic: return p[0];
    case DistKind::TwoPointLattice: return stream.uniform() < p[2] ? p[0] : p[1];
    case DistKind::Gamma: {
      const double x = p[1] * sample_standard_gamma(stream, p[0]);
      return x > 0.0 ? x : std::numeric_limits<double>::min();
    }
    case DistKind::Pareto: return p[1] * std::pow(stream.uniform(), -1.0 / p[0]);
  }
  return 0.0;
}

double sample_standard_gamma(RandomStream& stream, double shape) {
  if (shape < 1.0) {
    // Boost to shape + 1 and scale back by U^(1/shape).
    const double g = sample_standard_gamma(stream, shape + 1.0);
    return g * std::pow(stream.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = stream.gaussian();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = stream.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

int sample_poisson_small(RandomStream& stream, double mean) {
  if (!(mean >= 0.0) || mean > 30.0) throw InvalidArgument("poisson: mean must lie in [0, 30]");
  if (mean == 0.0) return 0;
  double prob = std::exp(-mean);
  double cdf = prob;
  const double u = stream.uniform();
  int k = 0;
  while (u > cdf && k < 1000) {
    ++k;
    prob *= mean / k;
    cdf += prob;
  }
  return k;
}

}  // namespace bridgelab
