#include "trotterlab/states.hpp"

#include <cmath>

#include "trotterlab/norms.hpp"

namespace trotterlab::states {

double MultiSectorState::norm() const {
  double s = 0.0;
  for (const auto& [key, sec] : sectors) s += sq(sec.norm());
  return std::sqrt(s);
}

std::shared_ptr<const RadialGrid> MultiSectorState::grid() const {
  if (sectors.empty()) return nullptr;
  return sectors.begin()->second.grid;
}

void MultiSectorState::insert(SectorState s) {
  auto key = std::make_pair(s.ell, s.m);
  if (sectors.count(key)) throw std::invalid_argument("MultiSectorState: duplicate (ell, m)");
  if (!sectors.empty() && !sectors.begin()->second.grid->same_mesh(*s.grid))
    throw std::invalid_argument("MultiSectorState: sectors must share one grid");
  sectors.emplace(key, std::move(s));
}

namespace {

double laguerre(int k, int alpha, double x) {
  if (k == 0) return 1.0;
  double lm2 = 1.0, lm1 = 1.0 + alpha - x;
  for (int i = 2; i <= k; ++i) {
    double li = ((2.0 * i - 1.0 + alpha - x) * lm1 - (i - 1.0 + alpha) * lm2) / i;
    lm2 = lm1;
    lm1 = li;
  }
  return lm1;
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

double hydrogen_radial(int n, int ell, double r) {
  const double pref = std::sqrt(std::pow(2.0 / n, 3) * factorial(n - ell - 1) /
                                (2.0 * n * factorial(n + ell)));
  const double x = 2.0 * r / n;
  return pref * std::exp(-r / n) * std::pow(x, ell) * laguerre(n - ell - 1, 2 * ell + 1, x);
}

SectorState hydrogen_state(int n, int ell_tilde, int m, std::shared_ptr<const RadialGrid> grid) {
  if (n < 1) throw std::invalid_argument("hydrogen_state: principal quantum number must be >= 1");
  if (ell_tilde < 0 || ell_tilde > n - 1)
    throw std::invalid_argument("hydrogen_state: need 0 <= ell <= n-1");
  if (std::abs(m) > ell_tilde) throw std::invalid_argument("hydrogen_state: need |m| <= ell");
  if (!grid) throw std::invalid_argument("hydrogen_state: null grid");
  SectorState s;
  s.ell = ell_tilde;
  s.m = m;
  s.grid = grid;
  s.u.resize(grid->n);
  for (int j = 0; j < grid->n; ++j)
    s.u[j] = grid->r[j] * hydrogen_radial(n, ell_tilde, grid->r[j]);
  const double nrm = s.norm();
  if (nrm <= 0.0) throw numeric_error("hydrogen_state: vanishing on-grid norm");
  for (auto& v : s.u) v /= nrm;
  return s;
}

MultiSectorState project_min_ell(const MultiSectorState& state, int ell) {
  if (ell < 0) throw std::invalid_argument("project_min_ell: ell must be >= 0");
  MultiSectorState out;
  for (const auto& [key, sec] : state.sectors)
    if (sec.ell >= ell) out.sectors.emplace(key, sec);
  return out;
}

MultiSectorState resample(const MultiSectorState& state, std::shared_ptr<const RadialGrid> grid) {
  MultiSectorState out;
  for (const auto& [key, sec] : state.sectors) {
    const auto& src = *sec.grid;
    SectorState ns;
    ns.ell = sec.ell;
    ns.m = sec.m;
    ns.grid = grid;
    ns.u.resize(grid->n);
    // Interpolate the radial function f = u / r (analytic at the origin)
    // with a cubic Lagrange stencil, one-sided at the edges, and restore
    // u' = r' f. Interpolating u itself would leave an O(h^4) offset at
    // r = 0 that the weighted-H2 probe amplifies into a fake divergence.
    for (int i = 0; i < grid->n; ++i) {
      const double x = grid->r[i] / src.h - 0.5;  // source index coordinate
      int j0 = static_cast<int>(std::floor(x)) - 1;
      j0 = std::max(0, std::min(j0, src.n - 4));
      cplx acc = 0.0;
      for (int a = 0; a < 4; ++a) {
        double w = 1.0;
        for (int b = 0; b < 4; ++b)
          if (b != a) w *= (x - (j0 + b)) / static_cast<double>(a - b);
        acc += w * (sec.u[j0 + a] / src.r[j0 + a]);
      }
      ns.u[i] = grid->r[i] * acc;
    }
    out.sectors.emplace(key, std::move(ns));
  }
  return out;
}

AssumptionReport check_assumption(const MultiSectorState& state, int ell, double threshold,
                                  const StateRebuilder& rebuild) {
  if (ell < 1)
    throw std::invalid_argument("check_assumption: ell must be >= 1 (ell = 0 is unconditioned)");
  AssumptionReport rep;
  const MultiSectorState projected = project_min_ell(state, ell);
  const double full = state.norm();
  rep.supported = std::abs(projected.norm() - full) <= 1e-10 * std::max(full, 1.0);

  auto base = state.grid();
  if (!base) throw std::invalid_argument("check_assumption: empty state");
  auto weighted = [&](const MultiSectorState& s) {
    double acc = 0.0;
    for (const auto& [key, sec] : s.sectors) acc += sq(norms::weighted_h2_norm(sec, ell));
    return std::sqrt(acc);
  };
  const double w1 = weighted(state);
  auto refine = [&](int factor) {
    auto g = spectral::build_grid(base->r_max, base->n * factor);
    return rebuild ? rebuild(g) : resample(state, g);
  };
  const double w2 = weighted(refine(2));
  const double w4 = weighted(refine(4));
  rep.probe_ratio_2x = sq(w2) / sq(w1);
  rep.probe_ratio_4x = sq(w4) / sq(w2);
  const bool divergent = rep.probe_ratio_4x > threshold;
  rep.weighted_h2 = divergent ? std::numeric_limits<double>::infinity() : w1;
  rep.verdict = rep.supported && !divergent;
  return rep;
}

}  // namespace trotterlab::states
