#pragma once

#include <iosfwd>
#include <string>

#include "trotterlab/norms.hpp"
#include "trotterlab/ratefit.hpp"
#include "trotterlab/trotter.hpp"

namespace trotterlab::csvio {

// State exchange format: header "ell,m,r,re_u,im_u", one row per node per
// sector. Import validates the uniform cell-centered mesh.
void write_state(std::ostream& os, const states::MultiSectorState& state);
void write_state_file(const std::string& path, const states::MultiSectorState& state);
states::MultiSectorState read_state(std::istream& is);
states::MultiSectorState read_state_file(const std::string& path);

// Raw run rows: "scheme,ell,n_grid,r_max,T,L,t_step,error_l2".
struct RunRow {
  std::string scheme;
  int ell = 0;
  int n_grid = 0;
  double r_max = 0.0;
  double T = 0.0;
  int L = 0;
  double t_step = 0.0;
  double error_l2 = 0.0;
};
void write_runs(std::ostream& os, const std::vector<RunRow>& rows);

// Rate series: "scheme,ell,n,r_max,T,L,t,error".
void write_series(std::ostream& os, const ratefit::ConvergenceSeries& series);
ratefit::ConvergenceSeries read_series(std::istream& is);
void write_series_file(const std::string& path, const ratefit::ConvergenceSeries& series);
ratefit::ConvergenceSeries read_series_file(const std::string& path);

// Monitor trace: "t,s,weighted_h2,ratio".
void write_monitor_trace(std::ostream& os, const norms::MonitorReport& report);

}  // namespace trotterlab::csvio
