// Experiment runner: product-formula convergence sweeps for the radial
// Coulomb problem, operator-identity checks on random Hermitian pairs, and
// the constant/bound calculators, driven by flat key=value config files.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trotterlab/cutoff.hpp"
#include "trotterlab/experiments.hpp"
#include "trotterlab/oracle.hpp"

using json = nlohmann::json;
using namespace trotterlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

config::ExperimentConfig load_config(const std::string& path) {
  return config::parse_config_file(path);
}

int cmd_rates(const std::string& config_path, const std::string& out_override, int jobs) {
  auto cfg = load_config(config_path);
  if (!out_override.empty()) cfg.out = out_override;
  auto result = experiments::run_rate_sweep(cfg, jobs);
  experiments::write_sweep_outputs(result, cfg, cfg.out);
  const auto& finest = result.reports.back();
  std::cout << experiments::report_json(result, cfg) << std::endl;
  return finest.pass ? kExitPass : kExitFail;
}

int cmd_oracle(int dim, std::uint64_t seed, double t, int nodes, const std::string& check) {
  auto pair = oracle::make_generator_pair(dim, seed);
  double residual = 0.0, tolerance = 0.0;
  if (check == "strang") {
    residual = (oracle::strang_error_integral(pair, t, nodes) -
                oracle::strang_error_direct(pair, t))
                   .norm();
    tolerance = 1e-8;
  } else if (check == "lie") {
    residual =
        (oracle::lie_error_integral(pair, t, nodes) - oracle::lie_error_direct(pair, t)).norm();
    tolerance = 1e-9;
  } else if (check == "comm") {
    residual = oracle::commutator_expansion_check(pair, t, nodes);
    tolerance = 1e-10;
  } else if (check == "relation") {
    residual = oracle::e1_e2_relation_check(pair, t, 3);
    tolerance = 1e-10;
  } else {
    std::cerr << "unknown check: " << check << std::endl;
    return kExitConfig;
  }
  json j{{"check", check},
         {"dim", dim},
         {"seed", seed},
         {"t", t},
         {"nodes", nodes},
         {"residual", residual},
         {"tolerance", tolerance},
         {"pass", residual <= tolerance}};
  std::cout << j.dump(2) << std::endl;
  return residual <= tolerance ? kExitPass : kExitFail;
}

int cmd_constants(const std::vector<int>& n_list, double c0, double abs_const) {
  json rows = json::array();
  for (int n : n_list) {
    rows.push_back({{"N", n},
                    {"c_n", bounds::c_n(n, c0)},
                    {"c_tilde_n", bounds::c_tilde_n(n, c0, abs_const)}});
  }
  json table = json::array();
  for (const auto& entry : bounds::rate_table(4))
    table.push_back({{"scheme", trotter::scheme_name(entry.scheme)},
                     {"ell_condition", entry.ell_condition},
                     {"rate", {{"num", entry.rate.num}, {"den", entry.rate.den}}}});
  json j{{"c0", c0}, {"abs_const", abs_const}, {"constants", rows}, {"rate_table", table}};
  std::cout << j.dump(2) << std::endl;
  return kExitPass;
}

int cmd_hardy(const std::string& config_path) {
  auto cfg = load_config(config_path);
  json rows = json::array();
  for (int n : cfg.grid_n) {
    auto grid = spectral::build_grid(cfg.r_max, n);
    rows.push_back({{"n", n},
                    {"r_max", cfg.r_max},
                    {"estimate", norms::hardy_norm_estimate(*grid, cfg.ell_condition)}});
  }
  json j{{"ell_max", cfg.ell_condition}, {"continuum_value", 2.0}, {"estimates", rows}};
  std::cout << j.dump(2) << std::endl;
  return kExitPass;
}

int cmd_cutoff_constants() {
  auto profile = cutoff::make_cutoff_profile();
  const double cf1 = cutoff::compute_cf1(profile);
  const double cf2 = cutoff::compute_cf2(profile);
  json j{{"c0", profile.c0_norm},
         {"beta", profile.beta},
         {"cf1", cf1},
         {"cf1_bound", cutoff::cf1_loose_bound()},
         {"cf2", cf2},
         {"cf2_bound", cutoff::cf2_loose_bound(profile)},
         {"pass", cf1 <= cutoff::cf1_loose_bound() && cf2 <= cutoff::cf2_loose_bound(profile)}};
  std::cout << j.dump(2) << std::endl;
  return kExitPass;
}

int cmd_monitor(const std::string& config_path, const std::string& out_override) {
  auto cfg = load_config(config_path);
  if (!out_override.empty()) cfg.out = out_override;
  dvec times = cfg.times, free_times = cfg.free_times;
  if (times.empty())
    for (int i = 0; i <= 20; ++i) times.push_back(0.5 * i);  // 21 times in [0, 10]
  if (free_times.empty())
    for (int i = 0; i <= 4; ++i) free_times.push_back(0.5 * i);  // 5 in [0, 2]
  json grids = json::array();
  for (int n : cfg.grid_n) {
    auto grid = spectral::build_grid(cfg.r_max, n);
    auto state = experiments::make_state(cfg, grid);
    if (state.sectors.size() != 1)
      throw std::invalid_argument("monitor: expected a single-sector state");
    const auto& sec = state.sectors.begin()->second;
    auto rep = norms::key_observation_monitor_fast(sec, cfg.ell_condition, cfg.c, cfg.sign, times,
                                                   free_times);
    std::ofstream os(cfg.out + "_trace_n" + std::to_string(n) + ".csv");
    csvio::write_monitor_trace(os, rep);
    grids.push_back({{"n", n},
                     {"sup_ratio", rep.sup_ratio},
                     {"initial_weighted_h2", rep.initial_weighted_h2},
                     {"paper_constant", rep.paper_constant}});
  }
  json j{{"state", cfg.state}, {"ell_weight", cfg.ell_condition}, {"grids", grids}};
  std::cout << j.dump(2) << std::endl;
  return kExitPass;
}

int cmd_check_state(const std::string& config_path) {
  auto cfg = load_config(config_path);
  auto grid = spectral::build_grid(cfg.r_max, cfg.grid_n.front());
  auto state = experiments::make_state(cfg, grid);
  states::StateRebuilder rebuild;
  if (cfg.state.rfind("hydrogen:", 0) == 0)
    rebuild = [&cfg](std::shared_ptr<const states::RadialGrid> g) {
      return experiments::make_state(cfg, g);
    };
  auto rep = states::check_assumption(state, cfg.ell_condition, 4.0, rebuild);
  json j{{"state", cfg.state},
         {"ell", cfg.ell_condition},
         {"supported", rep.supported},
         {"weighted_h2", std::isinf(rep.weighted_h2) ? json("infinite") : json(rep.weighted_h2)},
         {"probe_ratio_2x", rep.probe_ratio_2x},
         {"probe_ratio_4x", rep.probe_ratio_4x},
         {"verdict", rep.verdict}};
  std::cout << j.dump(2) << std::endl;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trotterlab: product-formula error laboratory for radial Coulomb dynamics"};
  app.require_subcommand(1);

  std::string config_path, out_prefix;
  int jobs = 1;

  auto* rates = app.add_subcommand("rates", "run a (grid x L) error sweep and fit rates");
  rates->add_option("--config", config_path, "config file")->required();
  rates->add_option("--out", out_prefix, "output path prefix (overrides config)");
  rates->add_option("--jobs", jobs, "worker pool size for sweep cells");

  int dim = 6, nodes = 24;
  std::uint64_t seed = 1;
  double t = 0.3;
  std::string check = "strang";
  auto* orc = app.add_subcommand("oracle", "finite-dimensional operator-identity checks");
  orc->add_option("--dim", dim, "matrix dimension");
  orc->add_option("--seed", seed, "generator seed");
  orc->add_option("--t", t, "time argument");
  orc->add_option("--nodes", nodes, "quadrature nodes per axis");
  orc->add_option("--check", check, "strang|lie|comm|relation");

  std::vector<int> n_list{1, 2, 4, 8, 16, 32, 64};
  double c0 = 1.0, abs_const = 1.0;
  auto* cst = app.add_subcommand("constants", "prefactor calculators C_N, C~_N, rate table");
  cst->add_option("--N", n_list, "particle numbers");
  cst->add_option("--c0", c0, "coupling bound");
  cst->add_option("--abs-const", abs_const, "universal constant (non-physical, default 1)");

  auto* hardy = app.add_subcommand("hardy", "discrete Hardy operator-norm estimate");
  hardy->add_option("--config", config_path, "config file")->required();

  app.add_subcommand("cutoff-constants", "smooth-cutoff normalization and derivative bounds");

  auto* mon = app.add_subcommand("monitor", "weighted-H2 propagation monitor");
  mon->add_option("--config", config_path, "config file")->required();
  mon->add_option("--out", out_prefix, "output path prefix (overrides config)");

  auto* chk = app.add_subcommand("check-state", "angular support + weighted-H2 finiteness check");
  chk->add_option("--config", config_path, "config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (rates->parsed()) return cmd_rates(config_path, out_prefix, jobs);
    if (orc->parsed()) return cmd_oracle(dim, seed, t, nodes, check);
    if (cst->parsed()) return cmd_constants(n_list, c0, abs_const);
    if (hardy->parsed()) return cmd_hardy(config_path);
    if (app.get_subcommand("cutoff-constants")->parsed()) return cmd_cutoff_constants();
    if (mon->parsed()) return cmd_monitor(config_path, out_prefix);
    if (chk->parsed()) return cmd_check_state(config_path);
  } catch (const config::config_error& e) {
    std::cerr << "config error: " << e.what() << std::endl;
    return kExitConfig;
  } catch (const numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << std::endl;
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return kExitNumeric;
  }
  return kExitConfig;
}
