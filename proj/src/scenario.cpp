#include "bridgelab/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "bridgelab/ensemble.hpp"
#include "bridgelab/errors.hpp"
#include "bridgelab/io.hpp"
#include "bridgelab/path.hpp"
#include "bridgelab/renewal.hpp"
#include "bridgelab/voronoi.hpp"

namespace bridgelab {

namespace {

constexpr std::array<ScenarioInfo, 8> kCatalog{{
    {ScenarioKind::RenewalEta, "renewal-eta", "Theorem 1",
     "(R_[t A_u] - t u) / sqrt(u) => mu^-1/2 sigma W0", "u"},
    {ScenarioKind::RenewalEtaPrime, "renewal-eta-prime", "Theorem 2 (interchanged renewal)",
     "(A(t R_n) - t n) / sqrt(n) => (sigma / mu) W0", "n"},
    {ScenarioKind::RenewalXi, "renewal-xi", "Theorem 1 (Brownian-motion FCLT, negative control)",
     "(A_nt - n t / mu) / sqrt(n) => mu^-3/2 sigma W", "n"},
    {ScenarioKind::RegenInverse, "regen-inverse", "Theorem 2",
     "(S(t S^-1(u)) - t u) / sqrt(u) => c W0", "u"},
    {ScenarioKind::AreaSplit, "area-split", "Example 1",
     "(H_u(t) - t u) / sqrt(u), Brownian area split point", "u"},
    {ScenarioKind::LevyArea, "levy-area", "Example 2",
     "(H_u(t) - t u) / sqrt(u), compensated compound Poisson + Brownian driver", "u"},
    {ScenarioKind::Digraph, "digraph", "Example 3",
     "(S_n([t L_n]) - t n) / sqrt(n), longest-path level counts", "n"},
    {ScenarioKind::Voronoi, "voronoi", "Example 4",
     "||x||^-1/2 dist(sigma(t pi(x)), t x) => |W0|", "norm_x"},
}};

bool uses_u(ScenarioKind k) {
  return k == ScenarioKind::RenewalEta || k == ScenarioKind::RegenInverse ||
         k == ScenarioKind::AreaSplit || k == ScenarioKind::LevyArea;
}

bool uses_n(ScenarioKind k) {
  return k == ScenarioKind::RenewalEtaPrime || k == ScenarioKind::RenewalXi ||
         k == ScenarioKind::Digraph;
}

bool is_renewal(ScenarioKind k) {
  return k == ScenarioKind::RenewalEta || k == ScenarioKind::RenewalEtaPrime ||
         k == ScenarioKind::RenewalXi;
}

DistributionSpec dist_from_json(const nlohmann::json& doc, const std::string& key) {
  const auto kind = doc.at(key).get<std::string>();
  std::vector<double> params;
  if (doc.contains(key + "_params")) params = doc.at(key + "_params").get<std::vector<double>>();
  return DistributionSpec::from_name(kind, params);
}

void put_dist(nlohmann::ordered_json& doc, const std::string& key, const DistributionSpec& d) {
  doc[key] = d.name();
  doc[key + "_params"] = d.params();
}

std::optional<double> renewal_scale(const ScenarioConfig& c) {
  const auto m = c.dist.moments();
  switch (c.kind) {
    case ScenarioKind::RenewalEta: return std::sqrt(m.variance / m.mean);
    case ScenarioKind::RenewalEtaPrime: return std::sqrt(m.variance) / m.mean;
    case ScenarioKind::RenewalXi: return std::sqrt(m.variance) / std::pow(m.mean, 1.5);
    default: return std::nullopt;
  }
}

double mean_abs_column(const PathEnsemble& e, std::size_t j) {
  double s = 0.0;
  for (std::size_t r = 0; r < e.replicates(); ++r) s += std::abs(e.at(r, j));
  return s / static_cast<double>(e.replicates());
}

double column_variance(const PathEnsemble& e, std::size_t j) {
  const auto col = e.column(j);
  double mean = 0.0;
  for (const double v : col) mean += v;
  mean /= static_cast<double>(col.size());
  double sq = 0.0;
  for (const double v : col) sq += (v - mean) * (v - mean);
  return sq / static_cast<double>(col.size() - 1);
}

}  // namespace

std::span<const ScenarioInfo> scenario_catalog() { return kCatalog; }

const ScenarioInfo& scenario_info(ScenarioKind kind) {
  for (const auto& info : kCatalog)
    if (info.kind == kind) return info;
  throw InvalidArgument("unknown scenario kind");
}

ScenarioKind scenario_from_name(std::string_view name) {
  for (const auto& info : kCatalog)
    if (info.name == name) return info.kind;
  throw InvalidArgument(fmt::format("unknown scenario '{}'", name));
}

ScenarioConfig ScenarioConfig::defaults(ScenarioKind kind) {
  ScenarioConfig c;
  c.kind = kind;
  switch (kind) {
    case ScenarioKind::AreaSplit:
    case ScenarioKind::LevyArea:
      c.u = 1e3;
      c.replicates = 1000;
      break;
    case ScenarioKind::Digraph:
      c.n = 5000;
      c.replicates = 500;
      break;
    case ScenarioKind::Voronoi: c.replicates = 500; break;
    default: break;
  }
  return c;
}

ScenarioConfig ScenarioConfig::from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidArgument("config must be a JSON object");
  static const std::set<std::string> known = {
      "scenario", "dist",  "dist_params", "delay", "delay_params", "mass", "mass_params",
      "mass_rule", "u",    "n",           "p",     "norm_x",       "dt",   "jump_rate",
      "jump",     "jump_params", "brownian_sigma", "K", "M", "seed", "alpha", "scale_mode",
      "digraph_variant", "orientation", "pin_tolerance", "corr_tolerance"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) throw InvalidArgument(fmt::format("unknown config key '{}'", key));
  if (!doc.contains("scenario")) throw InvalidArgument("config needs a 'scenario' key");

  try {
    ScenarioConfig c = defaults(scenario_from_name(doc.at("scenario").get<std::string>()));
    if (doc.contains("dist")) c.dist = dist_from_json(doc, "dist");
    if (doc.contains("delay")) c.delay = dist_from_json(doc, "delay");
    if (doc.contains("mass")) c.mass = dist_from_json(doc, "mass");
    if (doc.contains("jump")) c.jump = dist_from_json(doc, "jump");
    for (const char* k : {"dist_params", "delay_params", "mass_params", "jump_params"}) {
      const std::string base(k, std::string_view(k).size() - 7);
      if (doc.contains(k) && !doc.contains(base))
        throw InvalidArgument(fmt::format("'{}' given without '{}'", k, base));
    }
    if (doc.contains("mass_rule")) {
      const auto rule = doc.at("mass_rule").get<std::string>();
      if (rule == "atom") c.mass_rule = MassRule::AtomAtCycleEnd;
      else if (rule == "spread") c.mass_rule = MassRule::SpreadUniform;
      else throw InvalidArgument("mass_rule must be 'atom' or 'spread'");
    }
    if (doc.contains("u")) c.u = doc.at("u").get<double>();
    if (doc.contains("n")) c.n = doc.at("n").get<std::size_t>();
    if (doc.contains("p")) c.p = doc.at("p").get<double>();
    if (doc.contains("norm_x")) c.norm_x = doc.at("norm_x").get<double>();
    if (doc.contains("dt")) c.dt = doc.at("dt").get<double>();
    if (doc.contains("jump_rate")) c.jump_rate = doc.at("jump_rate").get<double>();
    if (doc.contains("brownian_sigma")) c.brownian_sigma = doc.at("brownian_sigma").get<double>();
    if (doc.contains("K")) c.grid_points = doc.at("K").get<std::size_t>();
    if (doc.contains("M")) c.replicates = doc.at("M").get<std::size_t>();
    if (doc.contains("seed")) c.seed = doc.at("seed").get<std::uint64_t>();
    if (doc.contains("alpha")) c.alpha = doc.at("alpha").get<double>();
    if (doc.contains("scale_mode")) {
      const auto mode = doc.at("scale_mode").get<std::string>();
      if (mode == "theoretical") c.scale_mode = ScaleMode::Theoretical;
      else if (mode == "estimated") c.scale_mode = ScaleMode::Estimated;
      else throw InvalidArgument("scale_mode must be 'theoretical' or 'estimated'");
    }
    if (doc.contains("digraph_variant")) {
      const auto v = doc.at("digraph_variant").get<std::string>();
      if (v == "cumulative") c.digraph_variant = CountVariant::Cumulative;
      else if (v == "tail") c.digraph_variant = CountVariant::Tail;
      else throw InvalidArgument("digraph_variant must be 'cumulative' or 'tail'");
    }
    if (doc.contains("orientation")) {
      const auto v = doc.at("orientation").get<std::string>();
      if (v == "ratio") c.orientation = SplitOrientation::Ratio;
      else if (v == "displayed") c.orientation = SplitOrientation::Displayed;
      else throw InvalidArgument("orientation must be 'ratio' or 'displayed'");
    }
    if (doc.contains("pin_tolerance")) c.pin_tolerance = doc.at("pin_tolerance").get<double>();
    if (doc.contains("corr_tolerance")) c.corr_tolerance = doc.at("corr_tolerance").get<double>();
    c.validate();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(fmt::format("config type error: {}", e.what()));
  }
}

nlohmann::ordered_json ScenarioConfig::to_json() const {
  nlohmann::ordered_json doc;
  doc["scenario"] = scenario_info(kind).name;
  put_dist(doc, "dist", dist);
  if (delay) put_dist(doc, "delay", *delay);
  if (kind == ScenarioKind::RegenInverse) {
    put_dist(doc, "mass", mass);
    doc["mass_rule"] = mass_rule == MassRule::AtomAtCycleEnd ? "atom" : "spread";
  }
  if (uses_u(kind)) doc["u"] = u;
  if (uses_n(kind)) doc["n"] = n;
  if (kind == ScenarioKind::Digraph) {
    doc["p"] = p;
    doc["digraph_variant"] = digraph_variant == CountVariant::Cumulative ? "cumulative" : "tail";
  }
  if (kind == ScenarioKind::Voronoi) doc["norm_x"] = norm_x;
  if (kind == ScenarioKind::AreaSplit || kind == ScenarioKind::LevyArea) {
    doc["dt"] = dt;
    doc["orientation"] = orientation == SplitOrientation::Ratio ? "ratio" : "displayed";
    doc["brownian_sigma"] = brownian_sigma;
  }
  if (kind == ScenarioKind::LevyArea) {
    doc["jump_rate"] = jump_rate;
    put_dist(doc, "jump", jump);
  }
  doc["K"] = grid_points;
  doc["M"] = replicates;
  doc["seed"] = seed;
  doc["alpha"] = alpha;
  if (scale_mode) doc["scale_mode"] = to_string(*scale_mode);
  if (pin_tolerance) doc["pin_tolerance"] = *pin_tolerance;
  if (corr_tolerance) doc["corr_tolerance"] = *corr_tolerance;
  return doc;
}

double ScenarioConfig::size() const {
  if (uses_u(kind)) return u;
  if (uses_n(kind)) return static_cast<double>(n);
  return norm_x;
}

void ScenarioConfig::set_size(double value) {
  if (uses_u(kind)) u = value;
  else if (uses_n(kind)) n = static_cast<std::size_t>(std::llround(value));
  else norm_x = value;
}

void ScenarioConfig::validate() const {
  auto require = [](bool ok, std::string_view what) {
    if (!ok) throw InvalidArgument(std::string(what));
  };
  require(grid_points >= 3 && grid_points % 2 == 1 && grid_points <= 100001,
          "K must be odd and at least 3 (the grid must contain t = 1/2)");
  require(replicates >= 2, "M must be at least 2");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
  require(std::isfinite(u) && u > 0.0, "u must be positive");
  require(n >= 1, "n must be at least 1");
  require(p > 0.0 && p < 1.0, "p must lie in (0, 1)");
  require(std::isfinite(norm_x) && norm_x > 0.0, "norm_x must be positive");
  require(std::isfinite(dt) && dt > 0.0 && dt <= u, "dt must lie in (0, u]");
  require(std::isfinite(jump_rate) && jump_rate > 0.0 && jump_rate * dt <= 30.0,
          "jump_rate must be positive with jump_rate * dt <= 30");
  require(std::isfinite(brownian_sigma) && brownian_sigma >= 0.0, "brownian_sigma must be >= 0");
  require(kind != ScenarioKind::AreaSplit || brownian_sigma > 0.0,
          "area-split needs a Brownian driver (brownian_sigma > 0)");
  require(!pin_tolerance || *pin_tolerance > 0.0, "pin_tolerance must be positive");
  require(!corr_tolerance || *corr_tolerance > 0.0, "corr_tolerance must be positive");
  const bool estimated =
      scale_mode ? *scale_mode == ScaleMode::Estimated : !is_renewal(kind);
  require(!estimated || replicates >= 100, "scale estimation needs M >= 100");
  require(!(scale_mode == ScaleMode::Theoretical && !is_renewal(kind)),
          "theoretical scale is only known for the renewal scenarios");
}

std::string ScenarioResult::summary() const {
  const auto& info = scenario_info(config.kind);
  std::ostringstream out;
  out << fmt::format("scenario: {} [{}]\n", info.name, info.anchor);
  out << fmt::format("functional: {}\n", info.functional);
  out << fmt::format("size ({}): {}\n", info.size_key, format_double(config.size()));
  out << fmt::format("replicates: {}  grid points: {}  seed: {}\n", ensemble.replicates(),
                     ensemble.points(), config.seed);
  if (ensemble.scale_hint()) out << fmt::format("theoretical scale: {:.6g}\n", *ensemble.scale_hint());
  if (const auto half = ensemble.find_point(0.5))
    out << fmt::format("Var at t = 1/2: {:.6g}\n", column_variance(ensemble, *half));
  out << '\n';
  print_report(out, report);
  if (degenerate_by_design) out << "verdict: degenerate by design (zero scale constant)\n";
  return out.str();
}

nlohmann::ordered_json ScenarioResult::metadata() const {
  nlohmann::ordered_json meta;
  meta["config"] = config.to_json();
  meta["anchor"] = scenario_info(config.kind).anchor;
  meta["replicates"] = ensemble.replicates();
  meta["grid_points"] = ensemble.points();
  meta["seed"] = config.seed;
  meta["size"] = config.size();
  meta["scale_hint"] =
      ensemble.scale_hint() ? nlohmann::ordered_json(*ensemble.scale_hint()) : nlohmann::ordered_json(nullptr);
  meta["folded"] = ensemble.folded();
  return meta;
}

ScenarioResult run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  config.validate();
  const std::size_t k = config.grid_points;
  const std::vector<double> grid = uniform_grid(k);
  const auto kind_index = static_cast<std::uint64_t>(config.kind);

  ReplicatePlan plan{config.replicates, k, config.seed, mix64(0xB1D6E000ULL + kind_index)};
  ReplicateKernel kernel;
  std::optional<double> hint = renewal_scale(config);
  bool folded = false;

  switch (config.kind) {
    case ScenarioKind::RenewalEta:
      plan.width = k + 1;
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const auto path = simulate_renewal(s, config.dist, config.u, config.delay);
        const auto eta = eta_u(path, config.u, grid);
        std::copy(eta.values.begin(), eta.values.end(), row.begin());
        row[k] = age(path, config.u);
      };
      break;
    case ScenarioKind::RenewalEtaPrime:
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const auto path = simulate_renewal_epochs(s, config.dist, config.n, config.delay);
        const auto eta = eta_prime_n(path, config.n, grid);
        std::copy(eta.values.begin(), eta.values.end(), row.begin());
      };
      break;
    case ScenarioKind::RenewalXi:
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const double horizon = static_cast<double>(config.n);
        const auto path = simulate_renewal(s, config.dist, horizon, config.delay);
        const auto xi = xi_n(path, horizon, grid);
        std::copy(xi.values.begin(), xi.values.end(), row.begin());
      };
      break;
    case ScenarioKind::RegenInverse:
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const CycleGenerator gen{config.dist, config.mass_rule, config.mass};
        const auto dm = config.dist.moments();
        const auto mm = config.mass.moments();
        double horizon = config.u * dm.mean / mm.mean + 10.0 * std::sqrt(config.u) + 10.0;
        auto process = build_regenerative(s, gen, horizon);
        while (!(process.total() > config.u)) {
          horizon *= 2.0;
          process = build_regenerative(s, gen, horizon);
        }
        const auto eta = eta_u_regen(process, config.u, grid);
        std::copy(eta.values.begin(), eta.values.end(), row.begin());
      };
      break;
    case ScenarioKind::AreaSplit:
    case ScenarioKind::LevyArea:
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const DriverSpec driver =
            config.kind == ScenarioKind::AreaSplit
                ? DriverSpec::brownian(config.brownian_sigma)
                : DriverSpec::compound_poisson(config.jump_rate, config.jump, config.brownian_sigma);
        const auto x = simulate_reflected(s, driver, config.u, config.dt);
        const auto eta = eta_u_area(area_process(x), config.u, grid, config.orientation);
        std::copy(eta.values.begin(), eta.values.end(), row.begin());
      };
      break;
    case ScenarioKind::Digraph:
      plan.width = 2 * k;
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const auto profile = sample_weight_profile(s, config.n, config.p);
        const auto first = digraph_bridge_process(profile, grid, config.digraph_variant);
        const auto other = digraph_bridge_process(
            profile, grid,
            config.digraph_variant == CountVariant::Cumulative ? CountVariant::Tail
                                                               : CountVariant::Cumulative);
        std::copy(first.values.begin(), first.values.end(), row.begin());
        std::copy(other.values.begin(), other.values.end(), row.begin() + static_cast<long>(k));
      };
      break;
    case ScenarioKind::Voronoi:
      folded = true;
      kernel = [&](RandomStream& s, std::size_t, std::span<double> row) {
        const Point2 x{config.norm_x, 0.0};
        const auto cloud = sample_poisson(s, segment_window(x));
        const auto d = D_process(cloud, x, grid);
        std::copy(d.values.begin(), d.values.end(), row.begin());
      };
      break;
  }

  const ReplicateMatrix matrix = options.serial ? run_replicates_serial(plan, kernel)
                                                : run_replicates_parallel(plan, kernel, options.workers);

  ScenarioResult result{config, matrix.slice(0, grid, hint, folded), {}, false, {}, std::nullopt};
  if (config.kind == ScenarioKind::RenewalEta) {
    result.ages.resize(matrix.rows);
    for (std::size_t r = 0; r < matrix.rows; ++r) result.ages[r] = matrix.row(r)[k];
  }
  if (config.kind == ScenarioKind::Digraph) result.alternate = matrix.slice(k, grid);

  const ScaleMode mode = config.scale_mode.value_or(hint ? ScaleMode::Theoretical : ScaleMode::Estimated);
  BridgeTestOptions opts;
  opts.alpha = config.alpha;
  opts.scale_mode = mode;
  opts.size_parameter = config.size();
  opts.seed = config.seed;
  opts.pin_tolerance = config.pin_tolerance;
  opts.corr_tolerance = config.corr_tolerance;

  const PathEnsemble& ens = result.ensemble;
  double max_gap = 0.0;
  for (std::size_t j = 1; j < grid.size(); ++j) max_gap = std::max(max_gap, grid[j] - grid[j - 1]);

  // Zero scale constant (sigma = 0): the functional collapses; check its bound
  // instead of certifying a bridge.
  if (mode == ScaleMode::Theoretical && hint && *hint == 0.0) {
    double sup = 0.0;
    for (const double v : ens.values()) sup = std::max(sup, std::abs(v));
    const double spacing = config.dist.moments().mean;
    double bound;
    if (config.kind == ScenarioKind::RenewalEta) {
      const double worst_age = *std::max_element(result.ages.begin(), result.ages.end());
      bound = (spacing + worst_age) / std::sqrt(config.u) * (1.0 + 1e-12);
    } else {
      bound = 1.0 / std::sqrt(static_cast<double>(config.n)) * (1.0 + 1e-12);
    }
    auto& rep = result.report;
    rep.replicates = ens.replicates();
    rep.grid = grid;
    rep.scale = 0.0;
    rep.scale_mode = mode;
    rep.alpha = config.alpha;
    rep.seed = config.seed;
    rep.overall = Overall::Degenerate;
    rep.reason = "scale constant is zero; certification skipped";
    rep.tests.push_back({"degenerate_sup_bound", sup, std::nullopt, bound,
                         sup <= bound ? Verdict::Pass : Verdict::Fail, true,
                         "sup |X| over the ensemble against the deterministic bound"});
    result.degenerate_by_design = sup <= bound;
    return result;
  }

  if (config.kind == ScenarioKind::RenewalEta) {
    // E|X(1)| = E(age) / sqrt(u) and E(age) <= (sigma^2 + mu^2) / mu for large u.
    const auto m = config.dist.moments();
    opts.bias_allowance = std::max(5.0, (m.variance + m.mean * m.mean) / m.mean) / std::sqrt(config.u);
  } else if (config.kind == ScenarioKind::Digraph) {
    // E C(0) = sum_j (1 - p)^(j - 1) <= 1 / p.
    opts.bias_allowance = (5.0 + 1.0 / config.p) / std::sqrt(static_cast<double>(config.n));
  }
  if (!opts.pin_tolerance && opts.bias_allowance) {
    const double c = mode == ScaleMode::Theoretical ? *hint : estimate_scale(ens).value;
    opts.pin_tolerance = 3.0 * c * max_gap + *opts.bias_allowance;
  }

  result.report = test_bridge(ens, opts);

  if (config.kind == ScenarioKind::Voronoi) {
    // Raw scale (constant 1) reported for information only.
    for (const double t : {0.25, 0.5, 0.75}) {
      std::size_t j = 0;
      for (std::size_t i = 1; i < grid.size(); ++i)
        if (std::abs(grid[i] - t) < std::abs(grid[j] - t)) j = i;
      const double sd = std::sqrt(grid[j] * (1.0 - grid[j]));
      const auto ks = ks_test(ens.column(j), [sd](double x) { return folded_normal_cdf(x, sd); });
      result.report.tests.push_back({fmt::format("raw_scale_ks_t{}", t), ks.statistic, ks.p_value,
                                     config.alpha / 3.0, Verdict::Info, false, "scale constant 1"});
    }
  }
  if (result.alternate) {
    const double tol = opts.corr_tolerance.value_or(default_corr_tolerance(ens.replicates()));
    const double dev = correlation_deviation(*result.alternate);
    result.report.tests.push_back({"alternate_variant_correlation", dev, std::nullopt, tol,
                                   Verdict::Info, false,
                                   config.digraph_variant == CountVariant::Cumulative
                                       ? "tail variant (1 - t) n centring"
                                       : "cumulative variant t n centring"});
  }
  return result;
}

std::filesystem::path write_outputs(const ScenarioResult& result, const std::filesystem::path& root) {
  const auto dir = root / std::string(scenario_info(result.config.kind).name) /
                   std::to_string(result.config.seed);
  std::filesystem::create_directories(dir);
  {
    std::ofstream csv(dir / "ensemble.csv", std::ios::binary);
    write_ensemble_csv(csv, result.ensemble);
  }
  {
    std::ofstream json(dir / "report.json", std::ios::binary);
    json << report_json(result.report);
  }
  {
    std::ofstream meta(dir / "meta.json", std::ios::binary);
    meta << result.metadata().dump(2) << '\n';
  }
  {
    std::ofstream summary(dir / "summary.txt", std::ios::binary);
    summary << result.summary();
  }
  return dir;
}

std::vector<ScanRow> convergence_scan(const ScenarioConfig& config, std::span<const double> sizes,
                                      const RunOptions& options) {
  if (sizes.size() < 2) throw InvalidArgument("a convergence scan needs at least two sizes");
  std::vector<ScanRow> rows;
  for (const double size : sizes) {
    ScenarioConfig c = config;
    c.set_size(size);
    const auto result = run_scenario(c, options);
    const auto& e = result.ensemble;
    ScanRow row;
    row.size = size;
    row.pin_start = mean_abs_column(e, 0);
    row.pin_end = mean_abs_column(e, e.points() - 1);
    row.var_half = column_variance(e, *e.find_point(0.5));
    row.corr_dev = correlation_deviation(e);
    row.overall = result.report.overall;
    rows.push_back(row);
  }
  return rows;
}

std::string scan_csv(std::span<const ScanRow> rows) {
  std::string out = "size,pin_start,pin_end,var_half,corr_dev,overall\r\n";
  for (const auto& r : rows)
    out += fmt::format("{},{},{},{},{},{}\r\n", format_double(r.size), format_double(r.pin_start),
                       format_double(r.pin_end), format_double(r.var_half),
                       format_double(r.corr_dev), to_string(r.overall));
  return out;
}

std::string list_scenarios(bool json) {
  if (json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& info : kCatalog)
      doc.push_back({{"name", info.name},
                     {"anchor", info.anchor},
                     {"functional", info.functional},
                     {"size_key", info.size_key}});
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (const auto& info : kCatalog)
    out += fmt::format("{:<18} {:<52} {}\n", info.name, info.anchor, info.functional);
  return out;
}

}  // namespace bridgelab
