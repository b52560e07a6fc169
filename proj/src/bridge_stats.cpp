#include "bridgelab/bridge_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "bridgelab/errors.hpp"
#include "bridgelab/path.hpp"

namespace bridgelab {

PathEnsemble::PathEnsemble(std::vector<double> grid, std::size_t replicates,
                           std::vector<double> values, std::optional<double> scale_hint,
                           bool folded)
    : grid_(std::move(grid)),
      replicates_(replicates),
      values_(std::move(values)),
      scale_hint_(scale_hint),
      folded_(folded) {
  if (!valid_unit_grid(grid_)) throw InvalidArgument("ensemble grid must be increasing in [0, 1]");
  if (replicates_ < 2) throw InvalidArgument("ensemble needs at least two replicates");
  if (values_.size() != replicates_ * grid_.size())
    throw InvalidArgument("ensemble values do not match replicates x grid");
}

std::vector<double> PathEnsemble::column(std::size_t j) const {
  std::vector<double> col(replicates_);
  for (std::size_t r = 0; r < replicates_; ++r) col[r] = at(r, j);
  return col;
}

std::optional<std::size_t> PathEnsemble::find_point(double t) const noexcept {
  for (std::size_t j = 0; j < grid_.size(); ++j)
    if (std::abs(grid_[j] - t) <= 1e-12) return j;
  return std::nullopt;
}

PathEnsemble PathEnsemble::scaled(double factor) const {
  std::vector<double> v(values_);
  for (auto& x : v) x *= factor;
  std::optional<double> hint;
  if (scale_hint_) hint = *scale_hint_ * std::abs(factor);
  return {grid_, replicates_, std::move(v), hint, folded_};
}

std::vector<double> sample_bridge(RandomStream& stream, std::span<const double> grid) {
  if (!valid_unit_grid(grid)) throw InvalidArgument("grid must be increasing and inside [0, 1]");
  std::vector<double> w(grid.size());
  double level = 0.0;
  double last_t = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double gap = grid[j] - last_t;
    if (gap > 0.0) level += std::sqrt(gap) * stream.gaussian();
    w[j] = level;
    last_t = grid[j];
  }
  double w_one = level;
  if (last_t < 1.0) w_one += std::sqrt(1.0 - last_t) * stream.gaussian();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    if (grid[j] == 1.0)
      w[j] = 0.0;
    else
      w[j] -= grid[j] * w_one;
  }
  return w;
}

double bridge_cov(double s, double t) { return std::min(s, t) - s * t; }

double bridge_corr(double s, double t) {
  return bridge_cov(s, t) / std::sqrt(s * (1.0 - s) * t * (1.0 - t));
}

double kolmogorov_cdf(double x) {
  if (!(x > 0.0)) return 0.0;
  constexpr double kTol = 1e-12;
  if (x < 1.0) {
    // Jacobi-transformed series, fast for small x.
    const double c = std::numbers::pi * std::numbers::pi / (8.0 * x * x);
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      const double odd = 2.0 * k - 1.0;
      const double term = std::exp(-odd * odd * c);
      sum += term;
      if (term < kTol) break;
    }
    return std::sqrt(2.0 * std::numbers::pi) / x * sum;
  }
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double term = std::exp(-2.0 * k * k * x * x);
    sum += (k % 2 == 1) ? term : -term;
    if (term < kTol) break;
  }
  return 1.0 - 2.0 * sum;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double folded_normal_cdf(double x, double scale) {
  if (!(scale > 0.0)) throw InvalidArgument("folded normal scale must be positive");
  if (x <= 0.0) return 0.0;
  return std::erf(x / (scale * std::numbers::sqrt2));
}

KsResult ks_test(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw InvalidArgument("KS test of an empty sample");
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double k = static_cast<double>(i);
    d = std::max({d, (k + 1.0) / n - f, f - k / n});
  }
  return {d, std::clamp(1.0 - kolmogorov_cdf(std::sqrt(n) * d), 0.0, 1.0)};
}

ScaleEstimate estimate_scale(const PathEnsemble& ens) {
  const auto half = ens.find_point(0.5);
  if (!half) throw InvalidArgument("scale estimation needs t = 1/2 on the grid");
  if (ens.replicates() < 100) throw InvalidArgument("scale estimation needs M >= 100");
  const auto col = ens.column(*half);
  const double m = static_cast<double>(col.size());
  double spread;
  if (ens.folded()) {
    double sq = 0.0;
    for (const double v : col) sq += v * v;
    spread = std::sqrt(sq / m);
  } else {
    double mean = 0.0;
    for (const double v : col) mean += v;
    mean /= m;
    double sq = 0.0;
    for (const double v : col) sq += (v - mean) * (v - mean);
    spread = std::sqrt(sq / (m - 1.0));
  }
  return {spread / 0.5, spread == 0.0};
}

const TestEntry* BridgeTestReport::find(std::string_view name) const noexcept {
  for (const auto& t : tests)
    if (t.name == name) return &t;
  return nullptr;
}

bool BridgeTestReport::passed(std::string_view name) const noexcept {
  const auto* t = find(name);
  return t != nullptr && t->verdict == Verdict::Pass;
}

double default_pin_tolerance(double scale, std::span<const double> grid, double size_parameter) {
  double gap = 0.0;
  for (std::size_t j = 1; j < grid.size(); ++j) gap = std::max(gap, grid[j] - grid[j - 1]);
  double tol = 3.0 * scale * gap;
  return tol + default_bias_allowance(size_parameter);
}

double default_bias_allowance(double size_parameter) {
  return size_parameter > 0.0 ? 5.0 / std::sqrt(size_parameter) : 0.0;
}

double default_corr_tolerance(std::size_t replicates) {
  return 4.0 / std::sqrt(static_cast<double>(replicates));
}

double correlation_deviation(const PathEnsemble& ens) {
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < ens.points(); ++j) {
    const double t = ens.grid()[j];
    if (t >= 0.1 - 1e-12 && t <= 0.9 + 1e-12) cols.push_back(j);
  }
  const std::size_t k = cols.size();
  const std::size_t m = ens.replicates();
  if (k < 2) return 0.0;

  // Centre and normalise each column, then correlations are dot products.
  std::vector<double> z(k * m);
  for (std::size_t c = 0; c < k; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < m; ++r) mean += ens.at(r, cols[c]);
    mean /= static_cast<double>(m);
    double sq = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const double v = ens.at(r, cols[c]) - mean;
      z[c * m + r] = v;
      sq += v * v;
    }
    const double inv = sq > 0.0 ? 1.0 / std::sqrt(sq) : 0.0;
    for (std::size_t r = 0; r < m; ++r) z[c * m + r] *= inv;
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < k; ++a) {
    const double* za = &z[a * m];
    for (std::size_t b = a + 1; b < k; ++b) {
      const double* zb = &z[b * m];
      double r = 0.0;
      for (std::size_t i = 0; i < m; ++i) r += za[i] * zb[i];
      const double target = bridge_corr(ens.grid()[cols[a]], ens.grid()[cols[b]]);
      worst = std::max(worst, std::abs(r - target));
    }
  }
  return worst;
}

namespace {

double mean_abs(const std::vector<double>& v) {
  double s = 0.0;
  for (const double x : v) s += std::abs(x);
  return s / static_cast<double>(v.size());
}

std::size_t nearest_point(std::span<const double> grid, double t) {
  std::size_t best = 0;
  for (std::size_t j = 1; j < grid.size(); ++j)
    if (std::abs(grid[j] - t) < std::abs(grid[best] - t)) best = j;
  return best;
}

}  // namespace

BridgeTestReport test_bridge(const PathEnsemble& ens, const BridgeTestOptions& options) {
  BridgeTestReport report;
  report.replicates = ens.replicates();
  report.grid.assign(ens.grid().begin(), ens.grid().end());
  report.scale_mode = options.scale_mode;
  report.alpha = options.alpha;
  report.seed = options.seed;

  const std::size_t m = ens.replicates();
  const auto grid = ens.grid();
  const bool estimated = options.scale_mode == ScaleMode::Estimated;

  double c;
  if (estimated) {
    c = estimate_scale(ens).value;
  } else {
    if (!ens.scale_hint())
      throw InvalidArgument("theoretical scale mode needs an ensemble scale hint");
    c = *ens.scale_hint();
  }
  report.scale = c;

  bool all_zero = true;
  for (const double v : ens.values()) all_zero = all_zero && v == 0.0;
  if (!(c > 0.0) || all_zero) {
    report.overall = Overall::Fail;
    report.reason = all_zero ? "degenerate ensemble: every value is zero"
                             : "degenerate ensemble: scale is zero";
    report.tests.push_back({"degenerate", c, std::nullopt, 0.0, Verdict::Fail, true, report.reason});
    return report;
  }

  // (1) endpoint pinning
  {
    const double tol = options.pin_tolerance.value_or(
        default_pin_tolerance(c, grid, options.size_parameter));
    const double at_zero = mean_abs(ens.column(0));
    const double at_one = mean_abs(ens.column(ens.points() - 1));
    const double stat = std::max(at_zero, at_one);
    report.tests.push_back({"endpoint_pinning", stat, std::nullopt, tol,
                            stat <= tol ? Verdict::Pass : Verdict::Fail, true,
                            fmt::format("mean|X(t0)| = {:.6g}, mean|X(tK)| = {:.6g}", at_zero, at_one)});
  }

  // (2) mean zero per interior column, up to the finite-size bias allowance
  if (!ens.folded()) {
    const double allowance = options.bias_allowance.value_or(default_bias_allowance(options.size_parameter));
    double worst = -std::numeric_limits<double>::infinity();
    bool broken = false;
    for (std::size_t j = 0; j < ens.points(); ++j) {
      if (!(grid[j] > 0.0 && grid[j] < 1.0)) continue;
      const auto col = ens.column(j);
      double mean = 0.0;
      for (const double v : col) mean += v;
      mean /= static_cast<double>(m);
      double sq = 0.0;
      for (const double v : col) sq += (v - mean) * (v - mean);
      const double se = std::sqrt(sq / static_cast<double>(m - 1)) / std::sqrt(static_cast<double>(m));
      if (se > 0.0)
        worst = std::max(worst, (std::abs(mean) - allowance) / se);
      else if (std::abs(mean) > allowance)
        broken = true;
    }
    if (!std::isfinite(worst)) worst = 0.0;
    const bool ok = !broken && worst <= 4.0;
    report.tests.push_back({"mean_zero", worst, std::nullopt, 4.0,
                            estimated ? Verdict::Info : (ok ? Verdict::Pass : Verdict::Fail), !estimated,
                            fmt::format("max over interior columns of (|mean| - {:.4g}) / standard error",
                                        allowance)});
  }

  const bool distributional = m >= 500;
  const bool ks_binding = !estimated || ens.folded();
  const std::size_t ks_count = ens.folded() ? 3 : 4;
  const double ks_level = options.alpha / static_cast<double>(ks_count);

  // (3) marginal KS
  for (const double t : {0.25, 0.5, 0.75}) {
    const std::string name = fmt::format("marginal_ks_t{}", t);
    if (!distributional) {
      report.tests.push_back({name, 0.0, std::nullopt, ks_level, Verdict::Skipped, false, "M < 500"});
      continue;
    }
    const std::size_t j = nearest_point(grid, t);
    const double tj = grid[j];
    const double sd = c * std::sqrt(tj * (1.0 - tj));
    const auto col = ens.column(j);
    KsResult ks;
    if (ens.folded())
      ks = ks_test(col, [sd](double x) { return folded_normal_cdf(x, sd); });
    else
      ks = ks_test(col, [sd](double x) { return normal_cdf(x / sd); });
    const bool ok = ks.p_value >= ks_level;
    report.tests.push_back({name, ks.statistic, ks.p_value, ks_level,
                            ks_binding ? (ok ? Verdict::Pass : Verdict::Fail) : Verdict::Info,
                            ks_binding, fmt::format("t = {}, sd = {:.6g}", tj, sd)});
  }

  if (!ens.folded()) {
    // (4) correlation shape
    const double tol = options.corr_tolerance.value_or(default_corr_tolerance(m));
    const double dev = correlation_deviation(ens);
    report.tests.push_back({"correlation", dev, std::nullopt, tol,
                            dev <= tol ? Verdict::Pass : Verdict::Fail, true,
                            "max |corr - bridge corr| over t in [0.1, 0.9]"});

    // (5) sup norm
    if (!distributional) {
      report.tests.push_back({"sup_norm", 0.0, std::nullopt, ks_level, Verdict::Skipped, false, "M < 500"});
    } else {
      double gap = 0.0;
      for (std::size_t j = 1; j < grid.size(); ++j) gap = std::max(gap, grid[j] - grid[j - 1]);
      const double shift = kDiscreteMaxBeta * std::sqrt(gap);
      std::vector<double> sup(m);
      for (std::size_t r = 0; r < m; ++r) {
        double s = 0.0;
        for (const double v : ens.row(r)) s = std::max(s, std::abs(v));
        sup[r] = s / c + shift;
      }
      const auto ks = ks_test(sup, kolmogorov_cdf);
      const bool ok = ks.p_value >= ks_level;
      report.tests.push_back({"sup_norm", ks.statistic, ks.p_value, ks_level,
                              ks_binding ? (ok ? Verdict::Pass : Verdict::Fail) : Verdict::Info,
                              ks_binding, fmt::format("grid shift {:.6g}", shift)});
    }
  }

  bool ok = true;
  for (const auto& t : report.tests)
    if (t.mandatory && t.verdict != Verdict::Pass) ok = false;
  report.overall = ok ? Overall::Pass : Overall::Fail;
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Info: return "info";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::string to_string(Overall o) {
  switch (o) {
    case Overall::Pass: return "pass";
    case Overall::Fail: return "fail";
    case Overall::Degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(ScaleMode m) {
  return m == ScaleMode::Theoretical ? "theoretical" : "estimated";
}

std::string report_json(const BridgeTestReport& report) {
  nlohmann::ordered_json doc;
  doc["overall"] = to_string(report.overall);
  if (!report.reason.empty()) doc["reason"] = report.reason;
  auto& tests = doc["tests"] = nlohmann::ordered_json::array();
  for (const auto& t : report.tests) {
    nlohmann::ordered_json e;
    e["name"] = t.name;
    e["statistic"] = t.statistic;
    e["p_value"] = t.p_value ? nlohmann::ordered_json(*t.p_value) : nlohmann::ordered_json(nullptr);
    e["threshold"] = t.threshold;
    e["verdict"] = to_string(t.verdict);
    e["mandatory"] = t.mandatory;
    if (!t.note.empty()) e["note"] = t.note;
    tests.push_back(std::move(e));
  }
  auto& meta = doc["metadata"];
  meta["replicates"] = report.replicates;
  meta["grid"] = report.grid;
  meta["scale"] = report.scale;
  meta["scale_mode"] = to_string(report.scale_mode);
  meta["alpha"] = report.alpha;
  meta["seed"] = report.seed;
  return doc.dump(2) + "\n";
}

void print_report(std::ostream& out, const BridgeTestReport& report) {
  out << fmt::format("{:<30} {:>14} {:>12} {:>12}  {}\n", "test", "statistic", "p-value",
                     "threshold", "verdict");
  for (const auto& t : report.tests) {
    const std::string p = t.p_value ? fmt::format("{:.4g}", *t.p_value) : std::string("-");
    out << fmt::format("{:<30} {:>14.6g} {:>12} {:>12.4g}  {}\n", t.name, t.statistic, p,
                       t.threshold, to_string(t.verdict));
  }
  out << fmt::format("overall: {}  (M = {}, K = {}, scale = {:.6g} [{}])\n", to_string(report.overall),
                     report.replicates, report.grid.size(), report.scale, to_string(report.scale_mode));
  if (!report.reason.empty()) out << "reason: " << report.reason << '\n';
}

}  // namespace bridgelab
