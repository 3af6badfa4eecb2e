#include "trotterlab/cutoff.hpp"

#include <cmath>

#include "trotterlab/quadrature.hpp"

namespace trotterlab::cutoff {

namespace {

// exp(-1/((x-1/2)(1-x))) on the transition band, zero outside.
double bump(double x) {
  const double w = (x - 0.5) * (1.0 - x);
  if (w <= 0.0) return 0.0;
  return std::exp(-1.0 / w);
}

constexpr double kTailTol = 1e-16;  // comfortably below the mandated 1e-12

// Cumulative panel table for the tail integral. Pointwise adaptive runs
// carry independent round-off that breaks monotonicity near the band edges
// where the integrand underflows; a fixed composite rule is monotone by
// construction and exact to round-off.
struct TailTable {
  static constexpr int kPanels = 2048;
  dvec edges;       // kPanels + 1 points spanning [1/2, 1]
  dvec tail_from;   // tail_from[k] = integral over [edges[k], 1]
  quadrature::GaussRule rule;

  TailTable() : rule(quadrature::gauss_legendre(12)) {
    edges.resize(kPanels + 1);
    for (int k = 0; k <= kPanels; ++k) edges[k] = 0.5 + 0.5 * k / kPanels;
    tail_from.assign(kPanels + 1, 0.0);
    for (int k = kPanels - 1; k >= 0; --k)
      tail_from[k] = tail_from[k + 1] + panel(edges[k], edges[k + 1]);
  }

  double panel(double a, double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      s += rule.weights[i] * bump(mid + half * rule.nodes[i]);
    return half * s;
  }

  double tail(double lambda) const {
    if (lambda <= 0.5) return tail_from[0];
    if (lambda >= 1.0) return 0.0;
    const int k = std::min(kPanels - 1,
                           static_cast<int>((lambda - 0.5) / 0.5 * kPanels));
    return panel(lambda, edges[k + 1]) + tail_from[k + 1];
  }
};

double tail_integral(double lambda) {
  static const TailTable table;
  return table.tail(lambda);
}

}  // namespace

CutoffProfile make_cutoff_profile(double beta, double quad_tol) {
  if (!(beta > 0.0)) throw std::invalid_argument("make_cutoff_profile: beta must be positive");
  CutoffProfile p;
  p.beta = beta;
  p.c0_norm = 1.0 / quadrature::adaptive_quad(bump, 0.5, 1.0, std::min(quad_tol, kTailTol));
  return p;
}

double f_leq(const CutoffProfile& profile, double lambda) {
  if (lambda <= 0.5) return 1.0;
  if (lambda >= 1.0) return 0.0;
  return profile.c0_norm * tail_integral(lambda);
}

double f_gt_prime(const CutoffProfile& profile, double lambda) {
  if (lambda <= 0.5 || lambda >= 1.0) return 0.0;
  return profile.c0_norm * bump(lambda);
}

double f_gt_second(const CutoffProfile& profile, double lambda) {
  if (lambda <= 0.5 || lambda >= 1.0) return 0.0;
  const double w = (lambda - 0.5) * (1.0 - lambda);
  const double wp = 1.5 - 2.0 * lambda;
  return profile.c0_norm * bump(lambda) * wp / (w * w);
}

std::pair<dvec, dvec> split_potential(const spectral::RadialGrid& grid, double c, int sign,
                                      double s, const CutoffProfile& profile) {
  if (!(s > 0.0 && s <= 1.0)) throw std::invalid_argument("split_potential: s must be in (0, 1]");
  const double cut = std::pow(s, profile.beta);
  dvec v_reg(grid.n), v_sin(grid.n);
  for (int j = 0; j < grid.n; ++j) {
    const double v = sign * c / grid.r[j];
    const double sin_part = f_leq(profile, grid.r[j] / cut) * v;
    v_sin[j] = sin_part;
    v_reg[j] = v - sin_part;  // exact partition by construction
  }
  return {v_reg, v_sin};
}

namespace {

// Dense scan over the transition band followed by golden-section polish.
double band_supremum(const std::function<double(double)>& f, int samples) {
  const double a = 0.5, b = 1.0;
  double best_x = a, best = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double x = a + (b - a) * i / samples;
    const double v = std::abs(f(x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = std::max(a, best_x - (b - a) / samples);
  double hi = std::min(b, best_x + (b - a) / samples);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = std::abs(f(x1)), f2 = std::abs(f(x2));
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = std::abs(f(x2));
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = std::abs(f(x1));
    }
  }
  return std::max(best, std::max(f1, f2));
}

}  // namespace

double compute_cf1(const CutoffProfile& profile, int samples) {
  return band_supremum([&](double x) { return x * x * f_gt_second(profile, x); }, samples);
}

double compute_cf2(const CutoffProfile& profile, int samples) {
  const double band =
      band_supremum([&](double x) { return x * f_gt_prime(profile, x) - f_gt(profile, x); },
                    samples);
  return std::max(band, 1.0);  // |0 - 1| = 1 attained for every lambda >= 1
}

double cf1_loose_bound() { return 8.0 * std::exp(26.0 / 3.0); }

double cf2_loose_bound(const CutoffProfile& profile) { return 1.0 + profile.c0_norm; }

}  // namespace trotterlab::cutoff
