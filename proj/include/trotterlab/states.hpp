#pragma once

#include <functional>
#include <map>

#include "trotterlab/spectral.hpp"

namespace trotterlab::states {

using spectral::RadialGrid;

// Complex radial profile attached to one spherical-harmonic sector (ell, m),
// stored in the reduced representation u_j = r_j f(r_j). m is carried for
// bookkeeping; the radial dynamics does not depend on it.
struct SectorState {
  int ell = 0;
  int m = 0;
  cvec u;
  std::shared_ptr<const RadialGrid> grid;

  double norm() const { return spectral::weighted_norm(u, grid->h); }
};

struct MultiSectorState {
  std::map<std::pair<int, int>, SectorState> sectors;  // keyed by (ell, m)

  double norm() const;
  std::shared_ptr<const RadialGrid> grid() const;
  void insert(SectorState s);
};

// Closed-form radial eigenfunction R_{n l}(r) for H = -Laplacian - 2/r
// (a0 = 1 convention; eigenvalue -1/n^2), from the associated Laguerre form.
double hydrogen_radial(int n, int ell, double r);

// Samples R_{n l} * r on the grid and renormalizes to unit discrete norm.
SectorState hydrogen_state(int n, int ell_tilde, int m,
                           std::shared_ptr<const RadialGrid> grid);

// Drops every sector with sector-ell < ell. Idempotent, norm non-increasing.
MultiSectorState project_min_ell(const MultiSectorState& state, int ell);

struct AssumptionReport {
  bool supported = false;       // state equals its projection onto sectors >= ell
  double weighted_h2 = 0.0;     // +inf when the refinement probe diverges
  bool verdict = false;
  double probe_ratio_2x = 0.0;  // squared-norm growth per refinement step
  double probe_ratio_4x = 0.0;
};

// Rebuilds the same physical state on a refined mesh; used by the
// divergence probe. Hydrogen superpositions regenerate exactly.
using StateRebuilder = std::function<MultiSectorState(std::shared_ptr<const RadialGrid>)>;

// Checks the angular-support condition and probes finiteness of
// || |x|^{-ell} psi ||_{H^2} by evaluating it at 2x and 4x resolution:
// a squared-norm growth factor above `threshold` per refinement flags the
// weighted norm as effectively infinite. Without a rebuilder the state is
// resampled by cubic interpolation of u(r).
AssumptionReport check_assumption(const MultiSectorState& state, int ell,
                                  double threshold = 4.0,
                                  const StateRebuilder& rebuild = nullptr);

// Cubic-interpolation resample of a state onto another grid (same r_max).
MultiSectorState resample(const MultiSectorState& state,
                          std::shared_ptr<const RadialGrid> grid);

}  // namespace trotterlab::states
