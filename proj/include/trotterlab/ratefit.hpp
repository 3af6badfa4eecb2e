#pragma once

#include <optional>
#include <string>

#include "trotterlab/bounds.hpp"

namespace trotterlab::ratefit {

struct SeriesMeta {
  std::string scheme;
  std::string state_label;
  int ell_condition = 0;
  int grid_n = 0;
  double r_max = 0.0;
  double T = 0.0;
};

// (step size, error) samples with t strictly decreasing and errors positive.
struct ConvergenceSeries {
  struct Point {
    double t = 0.0;
    double error = 0.0;
    int L = 0;
  };
  std::vector<Point> points;
  SeriesMeta meta;

  void validate() const;
};

struct SlopeFit {
  double slope = 0.0;
  double r_squared = 0.0;
};

// Least-squares slope of log(error) vs log(t) over [first, first+count).
SlopeFit fit_slope(const ConvergenceSeries& series, int first, int count);

struct WindowSlope {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double slope = 0.0;
  double r_squared = 0.0;
};

std::vector<WindowSlope> window_slopes(const ConvergenceSeries& series, int window = 4);

// First t at which consecutive `window`-point slopes jump by more than
// `jump_threshold`; reported as the junction point entering the later
// window. Calibrated so a two-regime 1/4 -> 2 series is always caught while
// 2% multiplicative noise on a single power law stays silent.
std::optional<double> detect_crossover(const ConvergenceSeries& series, int window = 4,
                                       double jump_threshold = 0.35);

struct RateReport {
  double global_slope = 0.0;
  std::vector<WindowSlope> windows;
  std::optional<double> crossover_t;
  double pre_crossover_slope = 0.0;
  bounds::Rational predicted;
  double tolerance = 0.0;
  bool pass = false;
};

// Pass iff the slope of the coarsest pre-crossover window (the first full
// window above the detected crossover, or the first window when none) lies
// within `tol` of the predicted rate.
RateReport assess(const ConvergenceSeries& series, bounds::Rational predicted, double tol,
                  int window = 4, double jump_threshold = 0.35);

}  // namespace trotterlab::ratefit
