#include "trotterlab/spectral.hpp"

#include <cmath>

#include "trotterlab/tridiag.hpp"

namespace trotterlab::spectral {

std::shared_ptr<const RadialGrid> build_grid(double r_max, int n) {
  if (!(r_max > 0.0)) throw std::invalid_argument("build_grid: r_max must be positive");
  if (n < 8) throw std::invalid_argument("build_grid: need at least 8 points");
  auto g = std::make_shared<RadialGrid>();
  g->r_max = r_max;
  g->n = n;
  g->h = r_max / n;
  g->r.resize(n);
  for (int j = 0; j < n; ++j) g->r[j] = (j + 0.5) * g->h;
  return g;
}

SectorOperator sector_operator(const RadialGrid& grid, int ell, OperatorKind kind, double c,
                               int sign) {
  if (grid.n < 8) throw std::invalid_argument("sector_operator: invalid grid");
  if (ell < 0) throw std::invalid_argument("sector_operator: ell must be >= 0");
  if (c < 0.0) throw std::invalid_argument("sector_operator: coupling must be >= 0");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sector_operator: sign must be +-1");
  const int n = grid.n;
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  SectorOperator op;
  op.ell = ell;
  op.kind = kind;
  op.c = c;
  op.sign = sign;
  op.main_diag.assign(n, 0.0);
  op.off_diag.assign(n - 1, 0.0);
  const bool kinetic = kind != OperatorKind::potential_only;
  const bool potential = kind != OperatorKind::kinetic_only;
  if (kinetic) {
    for (int j = 0; j < n; ++j) op.main_diag[j] = 2.0 * inv_h2 + ell * (ell + 1) / sq(grid.r[j]);
    op.main_diag[0] += inv_h2;      // u(0) = 0 face closure
    op.main_diag[n - 1] += inv_h2;  // u(r_max) = 0 face closure
    for (int j = 0; j + 1 < n; ++j) op.off_diag[j] = -inv_h2;
  }
  if (potential) {
    for (int j = 0; j < n; ++j) op.main_diag[j] += sign * c / grid.r[j];
  }
  return op;
}

EigenDecomposition diagonalize(const SectorOperator& op) {
  EigenDecomposition eig;
  eig.n = static_cast<int>(op.main_diag.size());
  try {
    tridiag::ql_implicit_shift(op.main_diag, op.off_diag, eig.eigenvalues, &eig.eigenvectors, 50);
  } catch (const numeric_error& e) {
    throw numeric_error(std::string(e.what()) + " [sector ell=" + std::to_string(op.ell) +
                        ", n=" + std::to_string(eig.n) + "]");
  }
  return eig;
}

dvec eigenvalues_only(const SectorOperator& op) {
  dvec vals;
  try {
    tridiag::ql_implicit_shift(op.main_diag, op.off_diag, vals, nullptr, 50);
  } catch (const numeric_error& e) {
    throw numeric_error(std::string(e.what()) + " [sector ell=" + std::to_string(op.ell) +
                        ", n=" + std::to_string(op.main_diag.size()) + "]");
  }
  return vals;
}

cvec propagate(const EigenDecomposition& eig, std::span<const cplx> state, double t) {
  const int n = eig.n;
  if (static_cast<int>(state.size()) != n)
    throw std::invalid_argument("propagate: dimension mismatch");
  cvec out(n, cplx(0.0));
  for (int k = 0; k < n; ++k) {
    const double* q = eig.eigenvectors.data() + static_cast<size_t>(k) * n;
    cplx amp = 0.0;
    for (int i = 0; i < n; ++i) amp += q[i] * state[i];
    amp *= std::exp(cplx(0.0, -eig.eigenvalues[k] * t));
    for (int i = 0; i < n; ++i) out[i] += amp * q[i];
  }
  return out;
}

cvec potential_phase(const RadialGrid& grid, double c, int sign, std::span<const cplx> state,
                     double t) {
  if (static_cast<int>(state.size()) != grid.n)
    throw std::invalid_argument("potential_phase: dimension mismatch");
  cvec out(state.begin(), state.end());
  for (int j = 0; j < grid.n; ++j) out[j] *= std::exp(cplx(0.0, -sign * c * t / grid.r[j]));
  return out;
}

}  // namespace trotterlab::spectral
