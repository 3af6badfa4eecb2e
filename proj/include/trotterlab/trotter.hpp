#pragma once

#include <map>

#include "trotterlab/states.hpp"
#include "trotterlab/tridiag.hpp"

namespace trotterlab::trotter {

// Exactly the two product formulas under study. lie_ba composes the kinetic
// flow first, then the potential phase (e^{-iBt} e^{-iAt}); strang is the
// palindrome e^{-iAt/2} e^{-iBt} e^{-iAt/2}.
enum class SplittingScheme { lie_ba, strang };

const char* scheme_name(SplittingScheme s);
SplittingScheme scheme_from_name(const std::string& name);

struct SectorContext {
  std::shared_ptr<const spectral::RadialGrid> grid;
  int ell = 0;
  double c = 0.0;
  int sign = -1;
};

// One composite step through the spectral decomposition of the kinetic
// sector operator (contract route; dense transforms).
cvec trotter_step(SplittingScheme scheme, const spectral::EigenDecomposition& kinetic_eig,
                  const spectral::RadialGrid& grid, double c, int sign,
                  std::span<const cplx> state, double t);

// L-fold composition of trotter_step with t = T / L.
cvec evolve(SplittingScheme scheme, const spectral::EigenDecomposition& kinetic_eig,
            const spectral::RadialGrid& grid, double c, int sign, std::span<const cplx> state,
            double T, int L);

// Chebyshev-propagator evolution for one sector; exact to round-off per
// application, O(n) memory, suitable for large grids. Interior kinetic
// half-steps of the Strang composition are merged pairwise.
class SectorEvolver {
 public:
  explicit SectorEvolver(const SectorContext& ctx);

  cvec evolve(SplittingScheme scheme, std::span<const cplx> state, double T, int L);
  cvec exact(std::span<const cplx> state, double T);
  const SectorContext& context() const { return ctx_; }

 private:
  SectorContext ctx_;
  tridiag::TridiagPropagator kinetic_;
  tridiag::TridiagPropagator hamiltonian_;
  cvec phase_table_;
  double phase_t_ = 0.0;
  bool phase_ready_ = false;
  void potential_phase_inplace(cvec& u, double t);
};

struct TrotterRun {
  SplittingScheme scheme = SplittingScheme::strang;
  double T = 0.0;
  int L = 0;
  double t_step = 0.0;
  double error_l2 = 0.0;
  std::map<std::pair<int, int>, double> per_sector_error;
};

// || split-evolved - exactly-evolved || at time T, per sector, aggregated by
// root-sum-square (sector orthogonality). Uses the Chebyshev route.
TrotterRun trotter_error(SplittingScheme scheme, const SectorContext& ctx,
                         const states::MultiSectorState& initial, double T, int L);

// Same quantity evaluated through the spectral route; used as the
// cross-check oracle against the Chebyshev path on small grids.
TrotterRun trotter_error_spectral(SplittingScheme scheme, const SectorContext& ctx,
                                  const states::MultiSectorState& initial, double T, int L);

}  // namespace trotterlab::trotter
