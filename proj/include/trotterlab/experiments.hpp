#pragma once

#include "trotterlab/config.hpp"
#include "trotterlab/csvio.hpp"

namespace trotterlab::experiments {

// Builds the configured initial state on the given grid. "hydrogen:n:l:m"
// states regenerate exactly at any resolution; CSV states are resampled.
states::MultiSectorState make_state(const config::ExperimentConfig& cfg,
                                    std::shared_ptr<const states::RadialGrid> grid);

struct SweepResult {
  std::vector<csvio::RunRow> runs;
  std::vector<ratefit::ConvergenceSeries> series;  // one per grid_n, ascending
  std::vector<ratefit::RateReport> reports;        // assess() per grid
};

// Full (grid x L) error sweep. Cells are independent; `jobs` > 1 dispatches
// them to a bounded worker pool. Output order is fixed regardless of jobs.
SweepResult run_rate_sweep(const config::ExperimentConfig& cfg, int jobs = 1);

// Writes <prefix>_runs.csv, <prefix>_series_n*.csv, <prefix>_report.json and
// <prefix>_plot.py.
void write_sweep_outputs(const SweepResult& result, const config::ExperimentConfig& cfg,
                         const std::string& prefix);

std::string report_json(const SweepResult& result, const config::ExperimentConfig& cfg);

}  // namespace trotterlab::experiments
