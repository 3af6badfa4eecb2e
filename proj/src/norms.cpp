#include "trotterlab/norms.hpp"

#include <algorithm>
#include <cmath>

namespace trotterlab::norms {

namespace {

// Applies the sector kinetic operator (u-representation) in place of a
// matrix: out_j = -(u_{j-1} - 2u_j + u_{j+1})/h^2 + l(l+1)/r_j^2 u_j with the
// odd-ghost face closure at both ends.
cvec apply_sector_laplacian(const SectorState& s) {
  const auto& g = *s.grid;
  const int n = g.n;
  const double inv_h2 = 1.0 / (g.h * g.h);
  cvec out(n);
  for (int j = 0; j < n; ++j) {
    cplx acc = 2.0 * s.u[j];
    acc -= (j > 0) ? s.u[j - 1] : -s.u[0];
    acc -= (j + 1 < n) ? s.u[j + 1] : -s.u[n - 1];
    out[j] = acc * inv_h2 + (s.ell * (s.ell + 1.0) / sq(g.r[j])) * s.u[j];
  }
  return out;
}

}  // namespace

double l2_norm(const SectorState& state) { return state.norm(); }

double h2_norm(const SectorState& state) {
  const cvec lap = apply_sector_laplacian(state);
  const double h = state.grid->h;
  return std::sqrt(sq(spectral::weighted_norm(lap, h)) + sq(spectral::weighted_norm(state.u, h)));
}

double weighted_h2_norm(const SectorState& state, int ell_weight) {
  if (ell_weight < 1) throw std::invalid_argument("weighted_h2_norm: weight must be >= 1");
  SectorState w = state;
  for (int j = 0; j < state.grid->n; ++j)
    w.u[j] = state.u[j] / std::pow(state.grid->r[j], ell_weight);
  return h2_norm(w);
}

NormReport norm_report(const SectorState& state, std::optional<int> ell_weight) {
  NormReport rep;
  rep.l2 = l2_norm(state);
  rep.h2 = h2_norm(state);
  if (ell_weight) rep.weighted_h2 = weighted_h2_norm(state, *ell_weight);
  return rep;
}

double hardy_norm_estimate(const spectral::RadialGrid& grid, int ell_max) {
  if (ell_max < 0) throw std::invalid_argument("hardy_norm_estimate: ell_max must be >= 0");
  double best = 0.0;
  for (int ell = 0; ell <= ell_max; ++ell) {
    auto K = spectral::sector_operator(grid, ell, spectral::OperatorKind::kinetic_only, 0.0, -1);
    auto fac = tridiag::ldlt_factor(K.main_diag, K.off_diag);
    // Power iteration on R K^{-1} R, R = diag(1/r).
    const int n = grid.n;
    dvec x(n), y(n);
    for (int j = 0; j < n; ++j) x[j] = 1.0 / (1.0 + j);
    double lam = 0.0, lam_prev = -1.0;
    for (int it = 0; it < 2000; ++it) {
      for (int j = 0; j < n; ++j) x[j] /= grid.r[j];
      fac.solve(x, y);
      for (int j = 0; j < n; ++j) y[j] /= grid.r[j];
      double nrm = 0.0;
      for (double v : y) nrm += v * v;
      nrm = std::sqrt(nrm);
      lam = nrm;  // ||(RK^{-1}R)x|| with ||x|| = 1
      for (int j = 0; j < n; ++j) x[j] = y[j] / nrm;
      if (it > 4 && std::abs(lam - lam_prev) < 1e-12 * lam) break;
      lam_prev = lam;
    }
    best = std::max(best, std::sqrt(lam));
  }
  return best;
}

SphericalHardyCheck spherical_hardy_check(const SectorState& state) {
  if (state.ell < 0) throw std::invalid_argument("spherical_hardy_check: bad sector");
  SphericalHardyCheck out;
  const auto& g = *state.grid;
  double acc = 0.0;
  const double cl = state.ell * (state.ell + 1.0);
  for (int j = 0; j < g.n; ++j) acc += std::norm(cl / sq(g.r[j]) * state.u[j]);
  out.lhs = std::sqrt(acc * g.h);
  out.rhs = kSphericalHardyConstant * h2_norm(state);
  out.ratio = (out.rhs > 0.0) ? out.lhs / out.rhs : 0.0;
  return out;
}

double key_observation_constant(int /*ell*/, double c) {
  return std::sqrt(1.0 + sq(kSphericalHardyConstant) + 3.0 * (1.0 + sq(c)) + 3.0 * (1.0 + sq(c)));
}

namespace {

// Walks the (t, s) lattice by composing exact group steps, so uniformly
// spaced lattices reuse one cached step size per leg.
template <typename EvolveH, typename EvolveK>
MonitorReport monitor_core(const SectorState& state, int ell_weight, double c, const dvec& times,
                           const dvec& free_times, EvolveH&& evolve_h, EvolveK&& evolve_k) {
  MonitorReport rep;
  rep.paper_constant = key_observation_constant(ell_weight, c);
  rep.initial_weighted_h2 = weighted_h2_norm(state, ell_weight);
  if (!(rep.initial_weighted_h2 > 0.0))
    throw std::invalid_argument("key_observation_monitor: vanishing initial weighted norm");
  SectorState at_t = state;
  double t_reached = 0.0;
  for (double t : times) {
    at_t.u = evolve_h(at_t.u, t - t_reached);
    t_reached = t;
    SectorState at_ts = at_t;
    double s_reached = 0.0;
    for (double s : free_times) {
      at_ts.u = evolve_k(at_ts.u, s - s_reached);
      s_reached = s;
      MonitorTraceRow row;
      row.t = t;
      row.s = s;
      row.weighted_h2 = weighted_h2_norm(at_ts, ell_weight);
      row.ratio = row.weighted_h2 / rep.initial_weighted_h2;
      rep.sup_ratio = std::max(rep.sup_ratio, row.ratio);
      rep.trace.push_back(row);
    }
  }
  return rep;
}

}  // namespace

MonitorReport key_observation_monitor(const SectorState& state, int ell_weight,
                                      const spectral::EigenDecomposition& hamiltonian,
                                      const spectral::EigenDecomposition& kinetic,
                                      const dvec& times, const dvec& free_times, double c) {
  if (hamiltonian.n != state.grid->n || kinetic.n != state.grid->n)
    throw std::invalid_argument("key_observation_monitor: decomposition dimension mismatch");
  return monitor_core(
      state, ell_weight, c, times, free_times,
      [&](const cvec& u, double t) { return spectral::propagate(hamiltonian, u, t); },
      [&](const cvec& u, double s) { return spectral::propagate(kinetic, u, s); });
}

MonitorReport key_observation_monitor_fast(const SectorState& state, int ell_weight, double c,
                                           int sign, const dvec& times, const dvec& free_times) {
  const auto& g = *state.grid;
  auto H = spectral::sector_operator(g, state.ell, spectral::OperatorKind::full_hamiltonian, c,
                                     sign);
  auto K = spectral::sector_operator(g, state.ell, spectral::OperatorKind::kinetic_only, 0.0, -1);
  tridiag::TridiagPropagator ph(H.main_diag, H.off_diag);
  tridiag::TridiagPropagator pk(K.main_diag, K.off_diag);
  return monitor_core(
      state, ell_weight, c, times, free_times,
      [&](const cvec& u, double t) {
        cvec v = u;
        ph.apply(t, v);
        return v;
      },
      [&](const cvec& u, double s) {
        cvec v = u;
        pk.apply(s, v);
        return v;
      });
}

}  // namespace trotterlab::norms
