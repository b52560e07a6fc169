#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bridgelab/distribution.hpp"
#include "bridgelab/path.hpp"
#include "bridgelab/rng.hpp"

namespace bridgelab {

/// Nondecreasing right-continuous S with S(0) = 0, stored as knots.
///
/// Step form: S(t) = values[k] for knots[k] <= t < knots[k+1] (jumps at knots).
/// Linear form: S interpolates linearly between knots.
/// Knots are strictly increasing with knots[0] = 0 and values[0] = 0.
class CumulativeProcess {
 public:
  enum class Form { Step, Linear };

  CumulativeProcess(Form form, std::vector<double> knots, std::vector<double> values);

  /// Linear form on the uniform mesh k * dt, k = 0..values.size()-1.
  static CumulativeProcess on_mesh(double dt, std::vector<double> values);

  Form form() const noexcept { return form_; }
  double horizon() const noexcept { return knots_.back(); }
  double total() const noexcept { return values_.back(); }
  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> values() const noexcept { return values_; }

  /// S(t) for 0 <= t <= horizon.
  double operator()(double t) const;

  /// inf{t >= 0 : S(t) > level}. Requires level < S(horizon).
  double inverse(double level) const;

  /// inf{t >= 0 : S(t) >= level}. Requires level <= S(horizon).
  double first_reach(double level) const;

  /// Largest knot spacing.
  double max_cell() const noexcept;

 private:
  Form form_;
  std::vector<double> knots_;
  std::vector<double> values_;
};

/// How the mass of one regeneration cycle is laid down.
enum class MassRule {
  AtomAtCycleEnd,  // one atom at the epoch closing the cycle
  SpreadUniform,   // constant density over the cycle
};

/// Generator of i.i.d. (duration, mass) cycle pairs.
/// With `mass` unset, the cycle mass equals the cycle duration.
struct CycleGenerator {
  DistributionSpec duration;
  MassRule rule = MassRule::AtomAtCycleEnd;
  std::optional<DistributionSpec> mass;
};

/// Build S from i.i.d. cycles until the last cycle end reaches past `horizon`.
CumulativeProcess build_regenerative(RandomStream& stream, const CycleGenerator& gen,
                                     double horizon);

/// S^{-1}(u) = inf{t >= 0 : S(t) > u}. Throws HorizonExceeded if u >= S(horizon).
double generalized_inverse(const CumulativeProcess& s, double u);

/// (S(t S^{-1}(u)) - t u) / sqrt(u). No scale hint.
PathSample eta_u_regen(const CumulativeProcess& s, double u, std::span<const double> grid);

/// Driver of the reflected process: a zero-mean Levy process.
struct DriverSpec {
  enum class Kind { Brownian, CompoundPoisson };
  Kind kind = Kind::Brownian;
  double brownian_sigma = 1.0;
  double jump_rate = 0.0;                      // compound Poisson only
  std::optional<DistributionSpec> jump_size;   // compound Poisson only, compensated

  static DriverSpec brownian(double sigma = 1.0) { return {Kind::Brownian, sigma, 0.0, {}}; }
  static DriverSpec compound_poisson(double rate, DistributionSpec jumps, double sigma) {
    return {Kind::CompoundPoisson, sigma, rate, std::move(jumps)};
  }

  /// Variance rate of the driver per unit time.
  double variance_rate() const noexcept;
};

/// X_t = (W_t - t) - min_{s <= t}(W_s - s) on the mesh k * dt.
struct ReflectedPath {
  double dt = 0.0;
  std::vector<double> values;
};

/// Reflect the drifted driver built from the given per-step increments of W.
ReflectedPath reflect_increments(std::span<const double> increments, double dt);

/// Euler scheme: sample driver increments over [0, horizon] and reflect.
ReflectedPath simulate_reflected(RandomStream& stream, const DriverSpec& driver, double horizon,
                                 double dt);

/// Trapezoid partial sums of X on its mesh.
CumulativeProcess area_process(const ReflectedPath& x);

/// Split-point conventions. `Ratio` splits S(u) as t : (1 - t) from the left,
/// H_u(t) = inf{v : S(v) >= t S(u)}. `Displayed` uses the weights the other
/// way round, H_u(t) = inf{v : S(v) >= (1 - t) S(u)}.
enum class SplitOrientation { Ratio, Displayed };

/// H_u(t) in [0, u]. Throws DegenerateError if S(u) = 0.
double split_point(const CumulativeProcess& s, double u, double t,
                   SplitOrientation orientation = SplitOrientation::Ratio);

/// (H_u(t) - t u) / sqrt(u) for `Ratio`; (H_u(t) - (1 - t) u) / sqrt(u) for `Displayed`.
PathSample eta_u_area(const CumulativeProcess& s, double u, std::span<const double> grid,
                      SplitOrientation orientation = SplitOrientation::Ratio);

}  // namespace bridgelab
