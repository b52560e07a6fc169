#include "bridgelab/regen.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace bridgelab {

CumulativeProcess::CumulativeProcess(Form form, std::vector<double> knots,
                                     std::vector<double> values)
    : form_(form), knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.empty() || knots_.size() != values_.size())
    throw InvalidArgument("cumulative process: knots and values must be nonempty and aligned");
  if (knots_[0] != 0.0 || values_[0] != 0.0)
    throw InvalidArgument("cumulative process: must start at S(0) = 0");
  for (std::size_t k = 1; k < knots_.size(); ++k) {
    if (!(knots_[k] > knots_[k - 1]))
      throw InvalidArgument("cumulative process: knots must be strictly increasing");
    if (!(values_[k] >= values_[k - 1]))
      throw InvalidArgument("cumulative process: values must be nondecreasing");
  }
}

CumulativeProcess CumulativeProcess::on_mesh(double dt, std::vector<double> values) {
  if (!(dt > 0.0)) throw InvalidArgument("mesh width must be positive");
  std::vector<double> knots(values.size());
  for (std::size_t k = 0; k < knots.size(); ++k) knots[k] = static_cast<double>(k) * dt;
  return {Form::Linear, std::move(knots), std::move(values)};
}

double CumulativeProcess::operator()(double t) const {
  if (!(t >= 0.0 && t <= horizon()))
    throw HorizonExceeded(fmt::format("S evaluated at {} outside [0, {}]", t, horizon()));
  const std::size_t k =
      static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), t) - knots_.begin()) - 1;
  if (form_ == Form::Step || k + 1 == knots_.size()) return values_[k];
  const double w = (t - knots_[k]) / (knots_[k + 1] - knots_[k]);
  return values_[k] + w * (values_[k + 1] - values_[k]);
}

double CumulativeProcess::inverse(double level) const {
  if (level < 0.0) return 0.0;
  if (!(level < total()))
    throw HorizonExceeded(fmt::format("S^-1({}) needs S(horizon) = {} to exceed it", level, total()));
  const std::size_t k = static_cast<std::size_t>(
      std::upper_bound(values_.begin(), values_.end(), level) - values_.begin());
  if (form_ == Form::Step) return knots_[k];
  // values_[k - 1] <= level < values_[k]; k >= 1 because values_[0] = 0 <= level.
  const double w = (level - values_[k - 1]) / (values_[k] - values_[k - 1]);
  return std::clamp(knots_[k - 1] + w * (knots_[k] - knots_[k - 1]), knots_[k - 1], knots_[k]);
}

double CumulativeProcess::first_reach(double level) const {
  if (level <= 0.0) return 0.0;
  if (level > total())
    throw HorizonExceeded(fmt::format("S never reaches {} (S(horizon) = {})", level, total()));
  const std::size_t k = static_cast<std::size_t>(
      std::lower_bound(values_.begin(), values_.end(), level) - values_.begin());
  if (form_ == Form::Step) return knots_[k];
  const double w = (level - values_[k - 1]) / (values_[k] - values_[k - 1]);
  return std::clamp(knots_[k - 1] + w * (knots_[k] - knots_[k - 1]), knots_[k - 1], knots_[k]);
}

double CumulativeProcess::max_cell() const noexcept {
  double widest = 0.0;
  for (std::size_t k = 1; k < knots_.size(); ++k) widest = std::max(widest, knots_[k] - knots_[k - 1]);
  return widest;
}

CumulativeProcess build_regenerative(RandomStream& stream, const CycleGenerator& gen,
                                     double horizon) {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw InvalidArgument("regenerative horizon must be positive");
  const auto mean_cycle = gen.duration.moments().mean;
  std::vector<double> knots{0.0};
  std::vector<double> values{0.0};
  knots.reserve(static_cast<std::size_t>(horizon / mean_cycle * 1.1) + 16);
  values.reserve(knots.capacity());
  double t = 0.0;
  double mass = 0.0;
  while (t <= horizon) {
    const double d = gen.duration.sample(stream);
    const double m = gen.mass ? gen.mass->sample(stream) : d;
    if (!(d > 0.0) || !(m > 0.0)) throw InvalidArgument("cycle generator produced a nonpositive cycle");
    t += d;
    mass += m;
    knots.push_back(t);
    values.push_back(mass);
  }
  const auto form = gen.rule == MassRule::AtomAtCycleEnd ? CumulativeProcess::Form::Step
                                                         : CumulativeProcess::Form::Linear;
  return {form, std::move(knots), std::move(values)};
}

double generalized_inverse(const CumulativeProcess& s, double u) {
  if (!(u >= 0.0)) throw InvalidArgument("generalized inverse needs u >= 0");
  return s.inverse(u);
}

PathSample eta_u_regen(const CumulativeProcess& s, double u, std::span<const double> grid) {
  if (!valid_unit_grid(grid)) throw InvalidArgument("grid must be increasing and inside [0, 1]");
  if (!(u > 0.0)) throw InvalidArgument("eta_u_regen: u must be positive");
  const double s_inv = generalized_inverse(s, u);
  const double root_u = std::sqrt(u);
  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size()), std::nullopt};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    out.values[j] = (s(t * s_inv) - t * u) / root_u;
  }
  return out;
}

double DriverSpec::variance_rate() const noexcept {
  double rate = brownian_sigma * brownian_sigma;
  if (kind == Kind::CompoundPoisson && jump_size) {
    const auto m = jump_size->moments();
    rate += jump_rate * (m.variance + m.mean * m.mean);
  }
  return rate;
}

ReflectedPath reflect_increments(std::span<const double> increments, double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("reflection mesh width must be positive");
  ReflectedPath x{dt, std::vector<double>(increments.size() + 1, 0.0)};
  double level = 0.0;
  double running_min = 0.0;
  for (std::size_t k = 0; k < increments.size(); ++k) {
    level += increments[k] - dt;
    running_min = std::min(running_min, level);
    x.values[k + 1] = level - running_min;
  }
  return x;
}

ReflectedPath simulate_reflected(RandomStream& stream, const DriverSpec& driver, double horizon,
                                 double dt) {
  if (!(dt > 0.0)) throw InvalidArgument("reflection mesh width must be positive");
  if (!(horizon > 0.0)) throw InvalidArgument("reflection horizon must be positive");
  const bool jumps = driver.kind == DriverSpec::Kind::CompoundPoisson;
  if (jumps && (!driver.jump_size || !(driver.jump_rate > 0.0)))
    throw InvalidArgument("compound Poisson driver needs a positive rate and a jump law");
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
  const double diffusion = driver.brownian_sigma * std::sqrt(dt);
  const double jump_mean_per_step = jumps ? driver.jump_rate * dt : 0.0;
  const double compensator = jumps ? jump_mean_per_step * driver.jump_size->moments().mean : 0.0;

  ReflectedPath x{dt, std::vector<double>(steps + 1, 0.0)};
  double level = 0.0;
  double running_min = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    double increment = diffusion > 0.0 ? diffusion * stream.gaussian() : 0.0;
    if (jumps) {
      const int count = sample_poisson_small(stream, jump_mean_per_step);
      for (int i = 0; i < count; ++i) increment += driver.jump_size->sample(stream);
      increment -= compensator;
    }
    level += increment - dt;
    running_min = std::min(running_min, level);
    x.values[k + 1] = level - running_min;
  }
  return x;
}

CumulativeProcess area_process(const ReflectedPath& x) {
  std::vector<double> area(x.values.size(), 0.0);
  const double half_dt = 0.5 * x.dt;
  for (std::size_t k = 1; k < area.size(); ++k)
    area[k] = area[k - 1] + half_dt * (x.values[k - 1] + x.values[k]);
  return CumulativeProcess::on_mesh(x.dt, std::move(area));
}

double split_point(const CumulativeProcess& s, double u, double t, SplitOrientation orientation) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("split point needs t in [0, 1]");
  const double total = s(u);
  if (!(total > 0.0)) throw DegenerateError("split point: S(u) = 0");
  const double share = orientation == SplitOrientation::Ratio ? t : 1.0 - t;
  return std::min(s.first_reach(share * total), u);
}

PathSample eta_u_area(const CumulativeProcess& s, double u, std::span<const double> grid,
                      SplitOrientation orientation) {
  if (!valid_unit_grid(grid)) throw InvalidArgument("grid must be increasing and inside [0, 1]");
  if (!(u > 0.0)) throw InvalidArgument("eta_u_area: u must be positive");
  const double root_u = std::sqrt(u);
  PathSample out{{grid.begin(), grid.end()}, std::vector<double>(grid.size()), std::nullopt};
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    const double centre = orientation == SplitOrientation::Ratio ? t : 1.0 - t;
    out.values[j] = (split_point(s, u, t, orientation) - centre * u) / root_u;
  }
  return out;
}

}  // namespace bridgelab
