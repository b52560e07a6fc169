#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridgelab/rng.hpp"

namespace bridgelab {

/// M replicate paths of one scalar process on a shared grid, row-major.
class PathEnsemble {
 public:
  PathEnsemble(std::vector<double> grid, std::size_t replicates, std::vector<double> values,
               std::optional<double> scale_hint = std::nullopt, bool folded = false);

  std::span<const double> grid() const noexcept { return grid_; }
  std::size_t replicates() const noexcept { return replicates_; }
  std::size_t points() const noexcept { return grid_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> row(std::size_t r) const noexcept {
    return {values_.data() + r * grid_.size(), grid_.size()};
  }
  double at(std::size_t r, std::size_t j) const noexcept { return values_[r * grid_.size() + j]; }
  std::vector<double> column(std::size_t j) const;

  /// Index of the grid point equal to t (within 1e-12), if any.
  std::optional<std::size_t> find_point(double t) const noexcept;

  const std::optional<double>& scale_hint() const noexcept { return scale_hint_; }
  bool folded() const noexcept { return folded_; }

  /// Same ensemble with every value multiplied by `factor`.
  PathEnsemble scaled(double factor) const;

 private:
  std::vector<double> grid_;
  std::size_t replicates_;
  std::vector<double> values_;
  std::optional<double> scale_hint_;
  bool folded_;
};

/// One path of W0_t = W_t - t W_1 on the grid, built from independent
/// Gaussian increments of W over the grid gaps.
std::vector<double> sample_bridge(RandomStream& stream, std::span<const double> grid);

/// min(s, t) - s t.
double bridge_cov(double s, double t);

/// Bridge correlation (min(s,t) - st) / sqrt(s(1-s) t(1-t)) for s, t in (0, 1).
double bridge_corr(double s, double t);

/// P(sup |W0| <= x).
double kolmogorov_cdf(double x);

double normal_cdf(double x);

/// P(|Z s| <= x) for Z standard normal.
double folded_normal_cdf(double x, double scale);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

/// One-sample Kolmogorov-Smirnov test with the asymptotic p-value.
KsResult ks_test(std::span<const double> sample, const std::function<double(double)>& cdf);

struct ScaleEstimate {
  double value = 0.0;
  bool degenerate = false;
};

/// c from the t = 1/2 column: sample sd / (1/2), or RMS / (1/2) when folded.
ScaleEstimate estimate_scale(const PathEnsemble& ens);

/// Continuity correction for the maximum of a unit-volatility path watched
/// on a grid of spacing h: E sup ~ E max + beta sqrt(h), beta = -zeta(1/2)/sqrt(2 pi).
inline constexpr double kDiscreteMaxBeta = 0.5825971579390106;

enum class ScaleMode { Theoretical, Estimated };

enum class Verdict { Pass, Fail, Info, Skipped };

struct TestEntry {
  std::string name;
  double statistic = 0.0;
  std::optional<double> p_value;
  double threshold = 0.0;
  Verdict verdict = Verdict::Info;
  bool mandatory = false;
  std::string note;
};

enum class Overall { Pass, Fail, Degenerate };

struct BridgeTestReport {
  std::vector<TestEntry> tests;
  Overall overall = Overall::Fail;
  std::string reason;
  std::size_t replicates = 0;
  std::vector<double> grid;
  double scale = 0.0;
  ScaleMode scale_mode = ScaleMode::Theoretical;
  double alpha = 0.01;
  std::uint64_t seed = 0;

  const TestEntry* find(std::string_view name) const noexcept;
  bool passed(std::string_view name) const noexcept;
};

struct BridgeTestOptions {
  double alpha = 0.01;
  ScaleMode scale_mode = ScaleMode::Theoretical;
  /// Simulation size (u, n, ||x||) used by the default pinning tolerance.
  double size_parameter = 0.0;
  std::optional<double> pin_tolerance;
  std::optional<double> corr_tolerance;
  /// Finite-size centring bias tolerated by mean_zero (default 5 / sqrt(size)).
  std::optional<double> bias_allowance;
  std::uint64_t seed = 0;
};

/// Default pinning tolerance 3 c max_gap + 5 / sqrt(size).
double default_pin_tolerance(double scale, std::span<const double> grid, double size_parameter);

/// 5 / sqrt(size), or 0 when the size is unknown.
double default_bias_allowance(double size_parameter);

/// Default correlation tolerance 4 / sqrt(M).
double default_corr_tolerance(std::size_t replicates);

/// Largest |empirical correlation - bridge correlation| over grid pairs with
/// both points in [0.1, 0.9]. Invariant under positive rescaling.
double correlation_deviation(const PathEnsemble& ens);

/// Run the certification battery against c W0 (or |c W0| when folded).
///
///   endpoint_pinning   mean |X(0)|, mean |X(1)| <= pin tolerance
///   mean_zero          interior |mean| <= bias allowance + 4 sd / sqrt(M) (not folded)
///   marginal_ks_t*     KS at t = 1/4, 1/2, 3/4 vs N(0, c^2 t(1-t)) or folded
///   correlation        correlation_deviation <= corr tolerance     (not folded)
///   sup_norm           KS of max|X|/c (+ continuity correction) vs Kolmogorov (not folded)
///
/// KS tests run at alpha / m each, m the number of KS tests in the battery.
/// With an estimated scale the KS and mean_zero tests on unfolded ensembles
/// are reported but not mandatory; correlation and pinning are binding.
BridgeTestReport test_bridge(const PathEnsemble& ens, const BridgeTestOptions& options);

std::string to_string(Verdict v);
std::string to_string(Overall o);
std::string to_string(ScaleMode m);

/// JSON document (deterministic key order and number formatting).
std::string report_json(const BridgeTestReport& report);

/// Fixed-width table for terminals.
void print_report(std::ostream& out, const BridgeTestReport& report);

}  // namespace bridgelab
