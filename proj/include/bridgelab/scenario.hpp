#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bridgelab/bridge_stats.hpp"
#include "bridgelab/digraph.hpp"
#include "bridgelab/distribution.hpp"
#include "bridgelab/regen.hpp"

namespace bridgelab {

enum class ScenarioKind {
  RenewalEta,
  RenewalEtaPrime,
  RenewalXi,
  RegenInverse,
  AreaSplit,
  LevyArea,
  Digraph,
  Voronoi,
};

struct ScenarioInfo {
  ScenarioKind kind;
  std::string_view name;
  std::string_view anchor;
  std::string_view functional;
  std::string_view size_key;  // which parameter `scan` varies
};

std::span<const ScenarioInfo> scenario_catalog();
const ScenarioInfo& scenario_info(ScenarioKind kind);
ScenarioKind scenario_from_name(std::string_view name);

/// Everything needed to reproduce one ensemble run.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::RenewalEta;

  DistributionSpec dist = DistributionSpec::exponential(1.0);
  std::optional<DistributionSpec> delay;
  DistributionSpec mass = DistributionSpec::exponential(1.0);  // regen-inverse cycle mass
  MassRule mass_rule = MassRule::AtomAtCycleEnd;

  double u = 1e4;      // renewal-eta, regen-inverse, area-split, levy-area
  std::size_t n = 10000;  // renewal-eta-prime, renewal-xi, digraph
  double p = 0.1;      // digraph
  double norm_x = 400.0;  // voronoi
  double dt = 0.01;    // area-split, levy-area

  double jump_rate = 1.0;  // levy-area
  DistributionSpec jump = DistributionSpec::exponential(1.0);
  double brownian_sigma = 1.0;

  std::size_t grid_points = 21;
  std::size_t replicates = 2000;
  std::uint64_t seed = 7;
  double alpha = 0.01;
  std::optional<ScaleMode> scale_mode;  // unset: theoretical when a constant is known

  CountVariant digraph_variant = CountVariant::Cumulative;
  SplitOrientation orientation = SplitOrientation::Ratio;
  std::optional<double> pin_tolerance;
  std::optional<double> corr_tolerance;

  /// Per-scenario defaults (sizes, M) for `kind`.
  static ScenarioConfig defaults(ScenarioKind kind);

  /// Flat JSON document; "scenario" is required, unknown keys are rejected.
  static ScenarioConfig from_json(const nlohmann::json& doc);

  nlohmann::ordered_json to_json() const;

  /// The size parameter that drives the limit (u, n or ||x||).
  double size() const;
  void set_size(double value);

  /// Throws InvalidArgument if a parameter is outside its admissible range.
  void validate() const;
};

struct RunOptions {
  int workers = 0;      // <= 0: OpenMP default
  bool serial = false;  // use the serial reference runner
};

struct ScenarioResult {
  ScenarioConfig config;
  PathEnsemble ensemble;
  BridgeTestReport report;
  bool degenerate_by_design = false;
  std::vector<double> ages;  // renewal-eta: u - R_{A_u} per replicate
  std::optional<PathEnsemble> alternate;  // digraph: the other count variant

  /// Exit status 0 iff this holds.
  bool ok() const noexcept { return degenerate_by_design || report.overall == Overall::Pass; }
  std::string summary() const;
  nlohmann::ordered_json metadata() const;
};

/// Simulate M replicates of the configured functional and certify them.
ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

/// Write ensemble.csv, report.json, meta.json and summary.txt under
/// root/<scenario>/<seed>/ and return that directory.
std::filesystem::path write_outputs(const ScenarioResult& result, const std::filesystem::path& root);

struct ScanRow {
  double size = 0.0;
  double pin_start = 0.0;  // mean |X(0)|
  double pin_end = 0.0;    // mean |X(1)|
  double var_half = 0.0;   // sample variance at t = 1/2
  double corr_dev = 0.0;
  Overall overall = Overall::Fail;
};

/// Rerun `config` at each size. Needs at least two sizes.
std::vector<ScanRow> convergence_scan(const ScenarioConfig& config, std::span<const double> sizes,
                                      const RunOptions& options = {});

std::string scan_csv(std::span<const ScanRow> rows);

/// Human-readable catalogue, or a JSON array when `json` is set.
std::string list_scenarios(bool json);

}  // namespace bridgelab
