#include "trotterlab/ratefit.hpp"

#include <cmath>

namespace trotterlab::ratefit {

void ConvergenceSeries::validate() const {
  for (size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].error > 0.0))
      throw std::invalid_argument("ConvergenceSeries: errors must be positive");
    if (i > 0 && !(points[i].t < points[i - 1].t))
      throw std::invalid_argument("ConvergenceSeries: t must be strictly decreasing");
  }
}

SlopeFit fit_slope(const ConvergenceSeries& series, int first, int count) {
  if (count < 2 || first < 0 || first + count > static_cast<int>(series.points.size()))
    throw std::invalid_argument("fit_slope: bad window");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (int i = first; i < first + count; ++i) {
    const double x = std::log(series.points[i].t);
    const double y = std::log(series.points[i].error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double n = count;
  const double den = n * sxx - sx * sx;
  if (std::abs(den) < 1e-300) throw std::invalid_argument("fit_slope: degenerate window");
  SlopeFit fit;
  fit.slope = (n * sxy - sx * sy) / den;
  const double ss_tot = syy - sy * sy / n;
  const double ss_res = ss_tot - fit.slope * (sxy - sx * sy / n);
  fit.r_squared = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::vector<WindowSlope> window_slopes(const ConvergenceSeries& series, int window) {
  if (window < 2) throw std::invalid_argument("window_slopes: window too small");
  std::vector<WindowSlope> out;
  const int n = static_cast<int>(series.points.size());
  for (int i = 0; i + window <= n; ++i) {
    const SlopeFit fit = fit_slope(series, i, window);
    out.push_back({series.points[i + window - 1].t, series.points[i].t, fit.slope,
                   fit.r_squared});
  }
  return out;
}

std::optional<double> detect_crossover(const ConvergenceSeries& series, int window,
                                       double jump_threshold) {
  if (static_cast<int>(series.points.size()) < 8) return std::nullopt;
  const auto slopes = window_slopes(series, window);
  for (size_t i = 0; i + 1 < slopes.size(); ++i) {
    if (std::abs(slopes[i + 1].slope - slopes[i].slope) > jump_threshold) {
      // The regime change sits at the freshest sample shared by both windows.
      return series.points[i + window - 1].t;
    }
  }
  return std::nullopt;
}

RateReport assess(const ConvergenceSeries& series, bounds::Rational predicted, double tol,
                  int window, double jump_threshold) {
  series.validate();
  RateReport rep;
  rep.predicted = predicted;
  rep.tolerance = tol;
  rep.windows = window_slopes(series, window);
  const int n = static_cast<int>(series.points.size());
  rep.global_slope = fit_slope(series, 0, n).slope;
  rep.crossover_t =
      (n >= 8) ? detect_crossover(series, window, jump_threshold) : std::nullopt;
  int first_window = 0;  // coarsest window, fully above the crossover if one exists
  if (rep.crossover_t) {
    // All points of the window must have t > crossover.
    first_window = 0;
    while (first_window + window <= n &&
           !(series.points[first_window + window - 1].t > *rep.crossover_t))
      ++first_window;
    if (first_window + window > n) first_window = 0;  // degenerate; fall back to coarsest
  }
  rep.pre_crossover_slope = fit_slope(series, first_window, window).slope;
  rep.pass = std::abs(rep.pre_crossover_slope - predicted.value()) <= tol;
  return rep;
}

}  // namespace trotterlab::ratefit
