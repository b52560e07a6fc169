#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bridgelab/errors.hpp"
#include "bridgelab/scenario.hpp"

namespace {

constexpr const char* kOutEnv = "BRIDGE_LAB_OUT";

constexpr const char* kConfigHelp = R"(Config file: a flat JSON object.
  scenario         renewal-eta | renewal-eta-prime | renewal-xi | regen-inverse |
                   area-split | levy-area | digraph | voronoi   (required)
  dist             interarrival / cycle-length law            default exponential [1]
  dist_params      parameters of dist
                     exponential [rate], uniform [lo, hi], deterministic [c],
                     two-point-lattice [a, b, q], gamma [shape, scale],
                     pareto [shape > 2, scale]
  delay            law of the first interarrival (optional)
  mass             regen-inverse cycle mass law              default exponential [1]
  mass_rule        atom | spread                             default atom
  u                size for renewal-eta, regen-inverse       default 10000
                   and area-split, levy-area                 default 1000
  n                size for renewal-eta-prime, renewal-xi    default 10000
                   and digraph                               default 5000
  p                digraph edge probability                  default 0.1
  norm_x           voronoi |x|                               default 400
  dt               reflected-path time step                  default 0.01
  jump_rate        levy-area jump rate                       default 1
  jump             levy-area jump law                        default exponential [1]
  brownian_sigma   Brownian component of the driver          default 1
  K                grid points, odd                          default 21
  M                replicates        default 2000 (1000 area, 500 digraph/voronoi)
  seed             master seed                               default 7
  alpha            test level                                default 0.01
  scale_mode       theoretical | estimated   default theoretical for renewal kinds
  digraph_variant  cumulative | tail                         default cumulative
  orientation      ratio | displayed                         default ratio
  pin_tolerance    endpoint pinning tolerance override
  corr_tolerance   correlation tolerance override            default 4/sqrt(M)
Output directory defaults to $BRIDGE_LAB_OUT, else ./out.)";

bridgelab::ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw bridgelab::InvalidArgument("cannot open config file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw bridgelab::InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  return bridgelab::ScenarioConfig::from_json(doc);
}

std::vector<double> parse_sizes(const std::string& text) {
  std::vector<double> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !(v > 0.0))
      throw bridgelab::InvalidArgument("bad size '" + item + "' in --sizes");
    sizes.push_back(v);
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo certification of Brownian-bridge limits"};
  app.footer(kConfigHelp);
  app.require_subcommand(1);

  std::string config_path;
  int workers = 0;
  std::string out_dir;
  std::string sizes_text;
  bool json = false;

  auto* run = app.add_subcommand("run", "simulate one scenario and certify it");
  run->add_option("--config", config_path, "JSON config file")->required();
  run->add_option("--workers", workers, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  run->add_option("--out", out_dir, "output root (default $BRIDGE_LAB_OUT or ./out)");

  auto* scan = app.add_subcommand("scan", "rerun a scenario over several sizes");
  scan->add_option("--config", config_path, "JSON config file")->required();
  scan->add_option("--sizes", sizes_text, "comma-separated sizes")->required();
  scan->add_option("--workers", workers, "worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  scan->add_option("--out", out_dir, "also write scan.csv under this root");

  auto* list = app.add_subcommand("list", "list scenario kinds");
  list->add_flag("--json", json, "emit a JSON array");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      std::cout << bridgelab::list_scenarios(json);
      return 0;
    }
    const auto config = load_config(config_path);
    const bridgelab::RunOptions options{workers, false};

    if (*run) {
      if (out_dir.empty()) {
        const char* env = std::getenv(kOutEnv);
        out_dir = env && *env ? env : "out";
      }
      const auto result = bridgelab::run_scenario(config, options);
      const auto dir = bridgelab::write_outputs(result, out_dir);
      std::cout << result.summary();
      std::cout << "outputs: " << dir.string() << '\n';
      return result.ok() ? 0 : 1;
    }

    const auto sizes = parse_sizes(sizes_text);
    const auto rows = bridgelab::convergence_scan(config, sizes, options);
    const auto csv = bridgelab::scan_csv(rows);
    std::cout << csv;
    if (!out_dir.empty()) {
      const auto dir = std::filesystem::path(out_dir) /
                       std::string(bridgelab::scenario_info(config.kind).name) /
                       std::to_string(config.seed);
      std::filesystem::create_directories(dir);
      std::ofstream(dir / "scan.csv", std::ios::binary) << csv;
    }
    return 0;
  } catch (const bridgelab::InvalidArgument& e) {
    std::cerr << "bridge-lab: invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "bridge-lab: " << e.what() << '\n';
    return 3;
  }
}
