#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "bridgelab/errors.hpp"
#include "bridgelab//path.hpp"
#include "bridgelab/regen.hpp"
#include "bridgelab/renewal.hpp"

using namespace bridgelab;

namespace {

CumulativeProcess floor_process(double horizon) {
  std::vector<double> knots{0.0};
  std::vector<double> values{0.0};
  for (double k = 1.0; k <= horizon; k += 1.0) {
    knots.push_back(k);
    values.push_back(k);
  }
  return {CumulativeProcess::Form::Step, knots, values};
}

CumulativeProcess identity_process(double horizon) {
  return {CumulativeProcess::Form::Linear, {0.0, horizon}, {0.0, horizon}};
}

CumulativeProcess random_step(RandomStream& s) {
  std::vector<double> knots{0.0};
  std::vector<double> values{0.0};
  const int jumps = 5 + static_cast<int>(s.uniform() * 60);
  for (int i = 0; i < jumps; ++i) {
    knots.push_back(knots.back() + 0.01 + s.uniform());
    // Zero-size jumps are allowed in a step process.
    values.push_back(values.back() + (s.uniform() < 0.2 ? 0.0 : s.uniform() * 3.0));
  }
  return {CumulativeProcess::Form::Step, knots, values};
}

}  // namespace

TEST_CASE("cumulative process evaluation") {
  const auto f = floor_process(10);
  CHECK(f(0.0) == 0.0);
  CHECK(f(0.999) == 0.0);
  CHECK(f(1.0) == 1.0);
  CHECK(f(3.5) == 3.0);
  const auto lin = CumulativeProcess::on_mesh(0.5, {0.0, 1.0, 1.0, 4.0});
  CHECK(lin(0.25) == doctest::Approx(0.5));
  CHECK(lin(0.75) == doctest::Approx(1.0));
  CHECK(lin(1.25) == doctest::Approx(2.5));
  CHECK(lin.horizon() == 1.5);
  CHECK(lin.max_cell() == 0.5);
}

TEST_CASE("invalid cumulative processes are rejected") {
  using Form = CumulativeProcess::Form;
  CHECK_THROWS_AS(CumulativeProcess(Form::Step, {0.0, 1.0}, {0.0, -1.0}), InvalidArgument);
  CHECK_THROWS_AS(CumulativeProcess(Form::Step, {0.0, 0.0}, {0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(CumulativeProcess(Form::Linear, {0.5, 1.0}, {0.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(CumulativeProcess(Form::Linear, {0.0, 1.0}, {0.5, 1.0}), InvalidArgument);
}

TEST_CASE("generalized inverse examples") {
  CHECK(generalized_inverse(identity_process(10), 3.0) == doctest::Approx(3.0));
  CHECK(generalized_inverse(floor_process(10), 0.5) == 1.0);
  CHECK(generalized_inverse(floor_process(10), 1.0) == 2.0);
  CHECK_THROWS_AS(generalized_inverse(floor_process(10), 10.0), HorizonExceeded);
}

TEST_CASE("inverse sandwich on random step processes") {
  auto s = make_stream(21, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const auto proc = random_step(s);
    for (int q = 0; q < 20; ++q) {
      const double u = s.uniform() * proc.total() * 0.999;
      if (!(u < proc.total())) continue;
      const double inv = generalized_inverse(proc, u);
      CHECK(proc(inv) > u);
      const double eps = 1e-9 * std::max(1.0, inv);
      if (inv > eps) CHECK(proc(inv - eps) <= u);
      const double reach = proc.first_reach(u);
      CHECK(proc(reach) >= u);
      CHECK(reach <= inv);
    }
  }
}

TEST_CASE("regenerative construction examples") {
  auto s = make_stream(22, 0);
  {
    const CycleGenerator unit{DistributionSpec::deterministic(1.0), MassRule::AtomAtCycleEnd,
                              DistributionSpec::deterministic(1.0)};
    const auto proc = build_regenerative(s, unit, 20.0);
    for (double t = 0.0; t <= 20.0; t += 0.25) CHECK(proc(t) == std::floor(t));
  }
  {
    const CycleGenerator spread{DistributionSpec::exponential(1.0), MassRule::SpreadUniform};
    const auto proc = build_regenerative(s, spread, 50.0);
    for (double t = 0.0; t <= 50.0; t += 0.37) CHECK(proc(t) == doctest::Approx(t).epsilon(1e-12));
  }
  {
    const CycleGenerator gen{DistributionSpec::exponential(1.0), MassRule::AtomAtCycleEnd,
                             DistributionSpec::exponential(0.5)};
    const auto proc = build_regenerative(s, gen, 1e4);
    CHECK(proc.horizon() >= 1e4);
    CHECK(proc(1e4) / 1e4 == doctest::Approx(2.0).epsilon(0.05));
  }
}

TEST_CASE("linear cumulative processes are annihilated") {
  const auto grid = uniform_grid(21);
  const CumulativeProcess lin(CumulativeProcess::Form::Linear, {0.0, 500.0}, {0.0, 1000.0});
  for (const double v : eta_u_regen(lin, 400.0, grid).values) CHECK(v == 0.0);
  for (const double v : eta_u_area(lin, 100.0, grid).values) CHECK(v == 0.0);
  const auto mesh = area_process(ReflectedPath{0.01, std::vector<double>(100001, 2.0)});
  for (const double v : eta_u_area(mesh, 1000.0, grid).values) CHECK(std::abs(v) <= 1e-10);
  for (const double v : eta_u_area(mesh, 1000.0, grid, SplitOrientation::Displayed).values)
    CHECK(std::abs(v) <= 1e-10);
}

TEST_CASE("regen endpoint values") {
  auto s = make_stream(23, 0);
  const CycleGenerator gen{DistributionSpec::exponential(1.0), MassRule::AtomAtCycleEnd,
                           DistributionSpec::exponential(1.0)};
  for (int rep = 0; rep < 50; ++rep) {
    const auto proc = build_regenerative(s, gen, 600.0);
    const double u = 400.0;
    if (!(proc.total() > u)) continue;
    const auto eta = eta_u_regen(proc, u, uniform_grid(11));
    CHECK(eta.values.front() == 0.0);
    CHECK(eta.values.back() >= 0.0);
    double largest = 0.0;
    const auto v = proc.values();
    for (std::size_t i = 1; i < v.size(); ++i) largest = std::max(largest, v[i] - v[i - 1]);
    CHECK(eta.values.back() <= largest / std::sqrt(u) + 1e-12);
  }
}

TEST_CASE("renewal counting process matches eta prime") {
  auto s = make_stream(24, 0);
  const auto grid = uniform_grid(21);
  const std::size_t n = 300;
  for (int rep = 0; rep < 30; ++rep) {
    const auto path = simulate_renewal_epochs(s, DistributionSpec::exponential(1.0), n);
    // S = A, the counting process, as a step process; S^{-1}(n - 1/2) = R_n.
    std::vector<double> knots{0.0};
    std::vector<double> values{0.0};
    for (std::size_t k = 1; k <= n + 1; ++k) {
      knots.push_back(path.epoch(k));
      values.push_back(static_cast<double>(k));
    }
    const CumulativeProcess counting(CumulativeProcess::Form::Step, knots, values);
    const double inv = generalized_inverse(counting, static_cast<double>(n) - 0.5);
    CHECK(inv == path.epoch(n));
    const auto prime = eta_prime_n(path, n, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) {
      const double direct =
          (counting(grid[j] * inv) - grid[j] * static_cast<double>(n)) / std::sqrt(static_cast<double>(n));
      CHECK(prime.values[j] == doctest::Approx(direct).epsilon(1e-12));
    }
  }
}

TEST_CASE("reflection examples") {
  const std::vector<double> zero_driver(100, 0.0);
  const std::vector<double> zero_drift(100, 0.01);  // W_t = t exactly cancels the drift
  for (const double v : reflect_increments(zero_drift, 0.01).values) CHECK(std::abs(v) < 1e-12);
  const auto x = reflect_increments(std::vector<double>{2.0, 0.0}, 1.0);
  REQUIRE(x.values.size() == 3);
  CHECK(x.values[0] == 0.0);
  CHECK(x.values[1] == 1.0);
  CHECK(x.values[2] == 0.0);
  for (const double v : reflect_increments(zero_driver, 0.1).values) CHECK(v == 0.0);
}

TEST_CASE("reflected paths are nonnegative and start at zero") {
  auto s = make_stream(25, 0);
  for (const auto& driver : {DriverSpec::brownian(1.0),
                             DriverSpec::compound_poisson(2.0, DistributionSpec::exponential(1.0), 0.5)}) {
    const auto x = simulate_reflected(s, driver, 100.0, 0.01);
    CHECK(x.values.front() == 0.0);
    CHECK(x.values.size() == 10001);
    CHECK(*std::min_element(x.values.begin(), x.values.end()) >= 0.0);
  }
}

TEST_CASE("stationary mean of reflected Brownian motion") {
  auto s = make_stream(26, 0);
  double total = 0.0;
  for (int r = 0; r < 500; ++r) {
    const auto x = simulate_reflected(s, DriverSpec::brownian(1.0), 1e3, 0.01);
    double mean = 0.0;
    for (const double v : x.values) mean += v;
    total += mean / static_cast<double>(x.values.size());
  }
  CHECK(total / 500.0 == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("driver variance rate") {
  CHECK(DriverSpec::brownian(2.0).variance_rate() == doctest::Approx(4.0));
  CHECK(DriverSpec::compound_poisson(1.0, DistributionSpec::exponential(1.0), 1.0).variance_rate() ==
        doctest::Approx(3.0));
}

TEST_CASE("area process examples") {
  const auto ones = area_process(ReflectedPath{0.1, std::vector<double>(101, 1.0)});
  for (double t = 0.0; t <= 10.0; t += 0.3) CHECK(ones(t) == doctest::Approx(t));
  const auto zeros = area_process(ReflectedPath{0.1, std::vector<double>(101, 0.0)});
  CHECK(zeros.total() == 0.0);
  std::vector<double> ramp(1001);
  for (std::size_t k = 0; k < ramp.size(); ++k) ramp[k] = 0.01 * static_cast<double>(k);
  const auto tri = area_process(ReflectedPath{0.01, ramp});
  for (double t = 0.0; t <= 10.0; t += 0.5) CHECK(std::abs(tri(t) - t * t / 2) < 1e-4);
}

TEST_CASE("split point examples") {
  const auto id = identity_process(20.0);
  CHECK(split_point(id, 10.0, 0.3) == doctest::Approx(3.0));
  CHECK(split_point(id, 10.0, 0.0) == 0.0);
  CHECK(split_point(id, 10.0, 1.0) == doctest::Approx(10.0));
  CHECK(split_point(id, 10.0, 0.3, SplitOrientation::Displayed) == doctest::Approx(7.0));
  const auto zeros = area_process(ReflectedPath{0.1, std::vector<double>(101, 0.0)});
  CHECK_THROWS_AS(split_point(zeros, 5.0, 0.5), DegenerateError);
  // A flat stretch before u: H(1) is the first time S reaches S(u).
  const CumulativeProcess flat(CumulativeProcess::Form::Linear, {0.0, 4.0, 10.0}, {0.0, 4.0, 4.0});
  CHECK(split_point(flat, 8.0, 1.0) == doctest::Approx(4.0));
}

TEST_CASE("orientation identity on random area paths") {
  auto s = make_stream(27, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const auto x = simulate_reflected(s, DriverSpec::brownian(1.0), 60.0, 0.01);
    const auto area = area_process(x);
    const double u = 50.0;
    if (!(area(u) > 0.0)) continue;
    for (const double t : {0.1, 0.3, 0.5, 0.8}) {
      const double level = t * area(u);
      if (!(level < area.total())) continue;
      const double inv = generalized_inverse(area, level);
      CHECK(std::abs(inv - split_point(area, u, t, SplitOrientation::Ratio)) <= x.dt);
      CHECK(std::abs(inv - split_point(area, u, 1.0 - t, SplitOrientation::Displayed)) <= x.dt);
    }
  }
}

TEST_CASE("area endpoints stay within one mesh cell") {
  auto s = make_stream(28, 0);
  const auto grid = uniform_grid(21);
  for (int rep = 0; rep < 20; ++rep) {
    const auto x = simulate_reflected(s, DriverSpec::brownian(1.0), 200.0, 0.01);
    const auto area = area_process(x);
    const double u = 200.0;
    const auto eta = eta_u_area(area, u, grid);
    CHECK(eta.values.front() == 0.0);
    // H_u(1) falls back from u only over a trailing zero stretch of X.
    std::size_t k = x.values.size() - 1;
    while (k > 0 && x.values[k] == 0.0 && x.values[k - 1] == 0.0) --k;
    const double gap = u - static_cast<double>(k) * x.dt;
    CHECK(std::abs(eta.values.back()) <= (x.dt + gap) / std::sqrt(u) + 1e-12);
  }
}
