#include "trotterlab/trotter.hpp"

#include <cmath>

namespace trotterlab::trotter {

const char* scheme_name(SplittingScheme s) {
  return s == SplittingScheme::lie_ba ? "lie" : "strang";
}

SplittingScheme scheme_from_name(const std::string& name) {
  if (name == "lie" || name == "lie_ba") return SplittingScheme::lie_ba;
  if (name == "strang") return SplittingScheme::strang;
  throw std::invalid_argument("unknown scheme: " + name);
}

cvec trotter_step(SplittingScheme scheme, const spectral::EigenDecomposition& kinetic_eig,
                  const spectral::RadialGrid& grid, double c, int sign,
                  std::span<const cplx> state, double t) {
  if (static_cast<int>(state.size()) != grid.n || kinetic_eig.n != grid.n)
    throw std::invalid_argument("trotter_step: dimension mismatch");
  if (scheme == SplittingScheme::lie_ba) {
    cvec u = spectral::propagate(kinetic_eig, state, t);
    return spectral::potential_phase(grid, c, sign, u, t);
  }
  cvec u = spectral::propagate(kinetic_eig, state, 0.5 * t);
  u = spectral::potential_phase(grid, c, sign, u, t);
  return spectral::propagate(kinetic_eig, u, 0.5 * t);
}

cvec evolve(SplittingScheme scheme, const spectral::EigenDecomposition& kinetic_eig,
            const spectral::RadialGrid& grid, double c, int sign, std::span<const cplx> state,
            double T, int L) {
  if (L < 1) throw std::invalid_argument("evolve: L must be >= 1");
  const double t = T / L;
  cvec u(state.begin(), state.end());
  for (int step = 0; step < L; ++step) u = trotter_step(scheme, kinetic_eig, grid, c, sign, u, t);
  return u;
}

SectorEvolver::SectorEvolver(const SectorContext& ctx)
    : ctx_(ctx),
      kinetic_([&] {
        auto op = spectral::sector_operator(*ctx.grid, ctx.ell,
                                            spectral::OperatorKind::kinetic_only, 0.0, -1);
        return tridiag::TridiagPropagator(std::move(op.main_diag), std::move(op.off_diag));
      }()),
      hamiltonian_([&] {
        auto op = spectral::sector_operator(*ctx.grid, ctx.ell,
                                            spectral::OperatorKind::full_hamiltonian, ctx.c,
                                            ctx.sign);
        return tridiag::TridiagPropagator(std::move(op.main_diag), std::move(op.off_diag));
      }()) {}

void SectorEvolver::potential_phase_inplace(cvec& u, double t) {
  const auto& g = *ctx_.grid;
  if (!phase_ready_ || phase_t_ != t) {
    phase_table_.resize(g.n);
    for (int j = 0; j < g.n; ++j)
      phase_table_[j] = std::exp(cplx(0.0, -ctx_.sign * ctx_.c * t / g.r[j]));
    phase_t_ = t;
    phase_ready_ = true;
  }
  for (int j = 0; j < g.n; ++j) u[j] *= phase_table_[j];
}

cvec SectorEvolver::evolve(SplittingScheme scheme, std::span<const cplx> state, double T, int L) {
  if (L < 1) throw std::invalid_argument("SectorEvolver::evolve: L must be >= 1");
  const double t = T / L;
  cvec u(state.begin(), state.end());
  if (scheme == SplittingScheme::lie_ba) {
    for (int step = 0; step < L; ++step) {
      kinetic_.apply(t, u);
      potential_phase_inplace(u, t);
    }
    return u;
  }
  kinetic_.apply(0.5 * t, u);
  for (int step = 0; step < L; ++step) {
    potential_phase_inplace(u, t);
    kinetic_.apply(step + 1 < L ? t : 0.5 * t, u);
  }
  return u;
}

cvec SectorEvolver::exact(std::span<const cplx> state, double T) {
  cvec u(state.begin(), state.end());
  hamiltonian_.apply(T, u);
  return u;
}

namespace {

template <typename SplitFn, typename ExactFn>
TrotterRun error_core(SplittingScheme scheme, const states::MultiSectorState& initial, double T,
                      int L, SplitFn&& split, ExactFn&& exact) {
  if (L < 1) throw std::invalid_argument("trotter_error: L must be >= 1");
  TrotterRun run;
  run.scheme = scheme;
  run.T = T;
  run.L = L;
  run.t_step = T / L;
  double acc = 0.0;
  for (const auto& [key, sec] : initial.sectors) {
    cvec split_u = split(sec);
    cvec exact_u = exact(sec);
    for (size_t i = 0; i < split_u.size(); ++i) split_u[i] -= exact_u[i];
    const double err = spectral::weighted_norm(split_u, sec.grid->h);
    run.per_sector_error[key] = err;
    acc += err * err;
  }
  run.error_l2 = std::sqrt(acc);
  return run;
}

}  // namespace

TrotterRun trotter_error(SplittingScheme scheme, const SectorContext& ctx,
                         const states::MultiSectorState& initial, double T, int L) {
  std::map<int, std::unique_ptr<SectorEvolver>> evolvers;
  auto evolver_for = [&](int ell) -> SectorEvolver& {
    auto it = evolvers.find(ell);
    if (it == evolvers.end()) {
      SectorContext c = ctx;
      c.ell = ell;
      it = evolvers.emplace(ell, std::make_unique<SectorEvolver>(c)).first;
    }
    return *it->second;
  };
  return error_core(
      scheme, initial, T, L,
      [&](const states::SectorState& s) { return evolver_for(s.ell).evolve(scheme, s.u, T, L); },
      [&](const states::SectorState& s) { return evolver_for(s.ell).exact(s.u, T); });
}

TrotterRun trotter_error_spectral(SplittingScheme scheme, const SectorContext& ctx,
                                  const states::MultiSectorState& initial, double T, int L) {
  std::map<int, spectral::EigenDecomposition> kin, ham;
  for (const auto& [key, sec] : initial.sectors) {
    if (!kin.count(sec.ell)) {
      kin[sec.ell] = spectral::diagonalize(spectral::sector_operator(
          *ctx.grid, sec.ell, spectral::OperatorKind::kinetic_only, 0.0, -1));
      ham[sec.ell] = spectral::diagonalize(spectral::sector_operator(
          *ctx.grid, sec.ell, spectral::OperatorKind::full_hamiltonian, ctx.c, ctx.sign));
    }
  }
  return error_core(
      scheme, initial, T, L,
      [&](const states::SectorState& s) {
        return evolve(scheme, kin.at(s.ell), *ctx.grid, ctx.c, ctx.sign, s.u, T, L);
      },
      [&](const states::SectorState& s) { return spectral::propagate(ham.at(s.ell), s.u, T); });
}

}  // namespace trotterlab::trotter
