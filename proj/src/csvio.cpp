#include "trotterlab/csvio.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace trotterlab::csvio {

namespace {

// Shortest round-trippable decimal form keeps the outputs byte-stable.
std::string fmt(double v) {
  char buf[32];
  snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

[[noreturn]] void fail(const std::string& what, int line_no) {
  throw std::invalid_argument("csv line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

void write_state(std::ostream& os, const states::MultiSectorState& state) {
  os << "ell,m,r,re_u,im_u\n";
  for (const auto& [key, sec] : state.sectors)
    for (int j = 0; j < sec.grid->n; ++j)
      os << sec.ell << ',' << sec.m << ',' << fmt(sec.grid->r[j]) << ',' << fmt(sec.u[j].real())
         << ',' << fmt(sec.u[j].imag()) << '\n';
}

void write_state_file(const std::string& path, const states::MultiSectorState& state) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_state(os, state);
}

states::MultiSectorState read_state(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("csv: empty state file");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "ell,m,r,re_u,im_u")
    throw std::invalid_argument("csv: state header must be 'ell,m,r,re_u,im_u'");
  std::map<std::pair<int, int>, std::pair<dvec, cvec>> raw;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 5) fail("expected 5 columns", line_no);
    try {
      const int ell = std::stoi(cells[0]);
      const int m = std::stoi(cells[1]);
      auto& [rs, us] = raw[{ell, m}];
      rs.push_back(std::stod(cells[2]));
      us.emplace_back(std::stod(cells[3]), std::stod(cells[4]));
    } catch (const std::exception&) {
      fail("unparsable numeric field", line_no);
    }
  }
  if (raw.empty()) throw std::invalid_argument("csv: state file has no rows");
  states::MultiSectorState out;
  std::shared_ptr<const states::RadialGrid> grid;
  for (auto& [key, data] : raw) {
    auto& [rs, us] = data;
    const int n = static_cast<int>(rs.size());
    if (n < 8) throw std::invalid_argument("csv: sector has fewer than 8 nodes");
    const double h = rs[1] - rs[0];
    for (int j = 0; j < n; ++j)
      if (std::abs(rs[j] - (j + 0.5) * h) > 1e-9 * std::max(1.0, rs[j]))
        throw std::invalid_argument("csv: nodes are not a uniform cell-centered mesh");
    if (!grid) grid = spectral::build_grid(h * n, n);
    states::SectorState sec;
    sec.ell = key.first;
    sec.m = key.second;
    sec.grid = grid;
    sec.u = std::move(us);
    out.insert(std::move(sec));
  }
  return out;
}

states::MultiSectorState read_state_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_state(is);
}

void write_runs(std::ostream& os, const std::vector<RunRow>& rows) {
  os << "scheme,ell,n_grid,r_max,T,L,t_step,error_l2\n";
  for (const auto& r : rows)
    os << r.scheme << ',' << r.ell << ',' << r.n_grid << ',' << fmt(r.r_max) << ',' << fmt(r.T)
       << ',' << r.L << ',' << fmt(r.t_step) << ',' << fmt(r.error_l2) << '\n';
}

void write_series(std::ostream& os, const ratefit::ConvergenceSeries& series) {
  os << "scheme,ell,n,r_max,T,L,t,error\n";
  for (const auto& p : series.points)
    os << series.meta.scheme << ',' << series.meta.ell_condition << ',' << series.meta.grid_n
       << ',' << fmt(series.meta.r_max) << ',' << fmt(series.meta.T) << ',' << p.L << ','
       << fmt(p.t) << ',' << fmt(p.error) << '\n';
}

ratefit::ConvergenceSeries read_series(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("csv: empty series file");
  if (line.size() && line.back() == '\r') line.pop_back();
  if (line != "scheme,ell,n,r_max,T,L,t,error")
    throw std::invalid_argument("csv: series header must be 'scheme,ell,n,r_max,T,L,t,error'");
  ratefit::ConvergenceSeries series;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.size() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 8) fail("expected 8 columns", line_no);
    try {
      series.meta.scheme = cells[0];
      series.meta.ell_condition = std::stoi(cells[1]);
      series.meta.grid_n = std::stoi(cells[2]);
      series.meta.r_max = std::stod(cells[3]);
      series.meta.T = std::stod(cells[4]);
      ratefit::ConvergenceSeries::Point p;
      p.L = std::stoi(cells[5]);
      p.t = std::stod(cells[6]);
      p.error = std::stod(cells[7]);
      series.points.push_back(p);
    } catch (const std::exception&) {
      fail("unparsable numeric field", line_no);
    }
  }
  series.validate();
  return series;
}

void write_series_file(const std::string& path, const ratefit::ConvergenceSeries& series) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_series(os, series);
}

ratefit::ConvergenceSeries read_series_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path);
  return read_series(is);
}

void write_monitor_trace(std::ostream& os, const norms::MonitorReport& report) {
  os << "t,s,weighted_h2,ratio\n";
  for (const auto& row : report.trace)
    os << fmt(row.t) << ',' << fmt(row.s) << ',' << fmt(row.weighted_h2) << ',' << fmt(row.ratio)
       << '\n';
}

}  // namespace trotterlab::csvio
