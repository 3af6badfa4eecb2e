#pragma once

#include <optional>

#include "trotterlab/states.hpp"
#include "trotterlab/tridiag.hpp"

namespace trotterlab::norms {

using states::SectorState;

struct NormReport {
  double l2 = 0.0;
  double h2 = 0.0;
  std::optional<double> weighted_h2;
};

double l2_norm(const SectorState& state);

// sqrt(||Delta_l f||^2 + ||f||^2) with Delta_l the sector restriction of the
// 3D Laplacian (second difference in u plus the centrifugal diagonal).
double h2_norm(const SectorState& state);

// H^2 norm of f / r^ell_weight, sector label unchanged (the weight is radial).
double weighted_h2_norm(const SectorState& state, int ell_weight);

NormReport norm_report(const SectorState& state, std::optional<int> ell_weight = std::nullopt);

// max over ell in [0, ell_max] of the largest singular value of
// diag(1/r_j) K_ell^{-1/2}, computed as sqrt(lambda_max(R K^{-1} R)) by power
// iteration with tridiagonal solves. Approaches the continuum value 2 from
// below under refinement. Nonpositive pivots in K raise numeric_error.
double hardy_norm_estimate(const spectral::RadialGrid& grid, int ell_max);

struct SphericalHardyCheck {
  double lhs = 0.0;    // || l(l+1)/r^2 f ||
  double rhs = 0.0;    // 22 * ||f||_{H^2}
  double ratio = 0.0;
};
SphericalHardyCheck spherical_hardy_check(const SectorState& state);

inline constexpr double kSphericalHardyConstant = 22.0;

// sqrt(1 + C_SH^2 + 3(1+c^2) + 3(1+c^2)): the closed-form constant the
// weighted-norm propagation bound carries; reported for comparison only.
double key_observation_constant(int /*ell*/, double c);

struct MonitorTraceRow {
  double t = 0.0;
  double s = 0.0;
  double weighted_h2 = 0.0;
  double ratio = 0.0;
};

struct MonitorReport {
  double sup_ratio = 0.0;
  double initial_weighted_h2 = 0.0;
  double paper_constant = 0.0;
  std::vector<MonitorTraceRow> trace;
};

// Evolves exactly under H for each t, then freely (kinetic only) for each s,
// and tracks || r^{-ell} psi ||_{H^2} relative to its initial value.
// Spectral-decomposition route (contract form; dense transforms).
MonitorReport key_observation_monitor(const SectorState& state, int ell_weight,
                                      const spectral::EigenDecomposition& hamiltonian,
                                      const spectral::EigenDecomposition& kinetic,
                                      const dvec& times, const dvec& free_times, double c);

// Chebyshev route used for large grids; identical semantics.
MonitorReport key_observation_monitor_fast(const SectorState& state, int ell_weight, double c,
                                           int sign, const dvec& times, const dvec& free_times);

}  // namespace trotterlab::norms
