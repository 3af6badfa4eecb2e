#include "trotterlab/experiments.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace trotterlab::experiments {

using json = nlohmann::json;

states::MultiSectorState make_state(const config::ExperimentConfig& cfg,
                                    std::shared_ptr<const states::RadialGrid> grid) {
  if (cfg.state.rfind("hydrogen:", 0) == 0) {
    int n = 0, l = 0, m = 0;
    if (sscanf(cfg.state.c_str(), "hydrogen:%d:%d:%d", &n, &l, &m) != 3)
      throw config::config_error("state: expected hydrogen:n:l:m, got '" + cfg.state + "'");
    states::MultiSectorState st;
    st.insert(states::hydrogen_state(n, l, m, grid));
    return st;
  }
  auto raw = csvio::read_state_file(cfg.state);
  if (raw.grid()->same_mesh(*grid)) return raw;
  return states::resample(raw, grid);
}

SweepResult run_rate_sweep(const config::ExperimentConfig& cfg, int jobs) {
  const auto scheme = trotter::scheme_from_name(cfg.scheme);
  struct Cell {
    int grid_idx;
    int L_idx;
  };
  std::vector<Cell> cells;
  for (size_t g = 0; g < cfg.grid_n.size(); ++g)
    for (size_t l = 0; l < cfg.L.size(); ++l)
      cells.push_back({static_cast<int>(g), static_cast<int>(l)});

  std::vector<double> errors(cells.size(), 0.0);
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
      if (failed.load()) return;
      try {
        const auto& cell = cells[i];
        auto grid = spectral::build_grid(cfg.r_max, cfg.grid_n[cell.grid_idx]);
        auto state = make_state(cfg, grid);
        trotter::SectorContext ctx{grid, 0, cfg.c, cfg.sign};
        auto run = trotter::trotter_error(scheme, ctx, state, cfg.T, cfg.L[cell.L_idx]);
        errors[i] = run.error_l2;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failure = e.what();
        failed.store(true);
        return;
      }
    }
  };

  const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw numeric_error("rate sweep failed: " + failure);

  SweepResult result;
  std::vector<int> sortedL = cfg.L;
  std::sort(sortedL.begin(), sortedL.end());  // ascending L = descending t
  for (size_t g = 0; g < cfg.grid_n.size(); ++g) {
    ratefit::ConvergenceSeries series;
    series.meta.scheme = cfg.scheme;
    series.meta.state_label = cfg.state;
    series.meta.ell_condition = cfg.ell_condition;
    series.meta.grid_n = cfg.grid_n[g];
    series.meta.r_max = cfg.r_max;
    series.meta.T = cfg.T;
    for (int L : sortedL) {
      auto it = std::find(cfg.L.begin(), cfg.L.end(), L);
      const size_t cell_idx = g * cfg.L.size() + (it - cfg.L.begin());
      ratefit::ConvergenceSeries::Point p;
      p.L = L;
      p.t = cfg.T / L;
      p.error = errors[cell_idx];
      series.points.push_back(p);
      result.runs.push_back({cfg.scheme, cfg.ell_condition, cfg.grid_n[g], cfg.r_max, cfg.T, L,
                             p.t, p.error});
    }
    auto predicted = bounds::gamma_rate(trotter::scheme_from_name(cfg.scheme), cfg.ell_condition);
    result.reports.push_back(
        ratefit::assess(series, predicted, cfg.tol, cfg.window, cfg.jump_threshold));
    result.series.push_back(std::move(series));
  }
  return result;
}

namespace {

json report_to_json(const ratefit::RateReport& rep, int grid_n) {
  json windows = json::array();
  for (const auto& w : rep.windows)
    windows.push_back(
        {{"t_lo", w.t_lo}, {"t_hi", w.t_hi}, {"slope", w.slope}, {"r_squared", w.r_squared}});
  json j{{"grid_n", grid_n},
         {"global_slope", rep.global_slope},
         {"window_slopes", windows},
         {"pre_crossover_slope", rep.pre_crossover_slope},
         {"predicted_rate", {{"num", rep.predicted.num}, {"den", rep.predicted.den}}},
         {"verdict", {{"pass", rep.pass}, {"tolerance", rep.tolerance}}}};
  if (rep.crossover_t)
    j["crossover_t"] = *rep.crossover_t;
  else
    j["crossover_t"] = nullptr;
  return j;
}

}  // namespace

std::string report_json(const SweepResult& result, const config::ExperimentConfig& cfg) {
  json j;
  j["scheme"] = cfg.scheme;
  j["state"] = cfg.state;
  j["ell_condition"] = cfg.ell_condition;
  j["T"] = cfg.T;
  j["r_max"] = cfg.r_max;
  j["seed"] = cfg.seed;
  json grids = json::array();
  for (size_t g = 0; g < result.reports.size(); ++g)
    grids.push_back(report_to_json(result.reports[g], result.series[g].meta.grid_n));
  j["grids"] = grids;
  j["pass"] = !result.reports.empty() && result.reports.back().pass;
  return j.dump(2);
}

void write_sweep_outputs(const SweepResult& result, const config::ExperimentConfig& cfg,
                         const std::string& prefix) {
  {
    std::ofstream os(prefix + "_runs.csv");
    if (!os) throw std::runtime_error("cannot open for writing: " + prefix + "_runs.csv");
    csvio::write_runs(os, result.runs);
  }
  for (const auto& series : result.series)
    csvio::write_series_file(prefix + "_series_n" + std::to_string(series.meta.grid_n) + ".csv",
                             series);
  {
    std::ofstream os(prefix + "_report.json");
    if (!os) throw std::runtime_error("cannot open for writing: " + prefix + "_report.json");
    os << report_json(result, cfg) << '\n';
  }
  {
    std::ofstream os(prefix + "_plot.py");
    if (!os) throw std::runtime_error("cannot open for writing: " + prefix + "_plot.py");
    const double gamma =
        bounds::gamma_rate(trotter::scheme_from_name(cfg.scheme), cfg.ell_condition).value();
    os << "#!/usr/bin/env python3\n"
          "# Log-log error vs step size with the predicted-slope guide line.\n"
          "import csv, collections\n"
          "import matplotlib\n"
          "matplotlib.use('Agg')\n"
          "import matplotlib.pyplot as plt\n\n"
          "rows = list(csv.DictReader(open('"
       << prefix
       << "_runs.csv')))\n"
          "by_n = collections.defaultdict(list)\n"
          "for r in rows:\n"
          "    by_n[int(r['n_grid'])].append((float(r['t_step']), float(r['error_l2'])))\n"
          "fig, ax = plt.subplots(figsize=(6, 4.5))\n"
          "for n, pts in sorted(by_n.items()):\n"
          "    pts.sort()\n"
          "    ax.loglog([t for t, _ in pts], [e for _, e in pts], 'o-', label=f'n={n}')\n"
          "ts = sorted({t for pts in by_n.values() for t, _ in pts})\n"
          "if ts:\n"
          "    anchor = max(e for pts in by_n.values() for _, e in pts)\n"
          "    guide = [anchor * (t / ts[-1]) ** "
       << gamma
       << " for t in ts]\n"
          "    ax.loglog(ts, guide, 'k--', label='slope "
       << gamma
       << "')\n"
          "ax.set_xlabel('t step')\n"
          "ax.set_ylabel('L2 error')\n"
          "ax.legend()\n"
          "fig.tight_layout()\n"
          "fig.savefig('"
       << prefix << "_plot.png', dpi=150)\n";
  }
}

}  // namespace trotterlab::experiments
