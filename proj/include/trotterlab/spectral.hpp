#pragma once

#include <memory>
#include <span>

#include "trotterlab/common.hpp"

namespace trotterlab::spectral {

// Cell-centered radial mesh r_j = (j + 1/2) h, h = r_max / n. The origin is
// excluded, so the Coulomb potential is finite at every node. The discrete
// pairing is <f, g> = sum_j conj(u_j) v_j h in the reduced representation
// u = r * f, which matches the L^2(r^2 dr) inner product.
struct RadialGrid {
  double r_max = 0.0;
  int n = 0;
  double h = 0.0;
  dvec r;

  bool same_mesh(const RadialGrid& o) const { return n == o.n && r_max == o.r_max; }
};

enum class OperatorKind { full_hamiltonian, kinetic_only, potential_only };

// Symmetric tridiagonal sector operator in the u = r*f representation:
//   kinetic: -(u_{j-1} - 2 u_j + u_{j+1}) / h^2 + l(l+1)/r_j^2,
//   potential: sign * c / r_j (diagonal).
// The u(0) = 0 condition at the r = 0 cell face is eliminated through the
// ghost value u(-h/2) = -u(h/2), and likewise at the r_max face, so the two
// boundary diagonal entries carry 3/h^2 instead of the interior 2/h^2.
struct SectorOperator {
  int ell = 0;
  OperatorKind kind = OperatorKind::full_hamiltonian;
  double c = 0.0;
  int sign = -1;
  dvec main_diag;
  dvec off_diag;
};

struct EigenDecomposition {
  dvec eigenvalues;   // ascending
  dvec eigenvectors;  // eigenvector k contiguous at [k*n, (k+1)*n)
  int n = 0;
};

std::shared_ptr<const RadialGrid> build_grid(double r_max, int n);

SectorOperator sector_operator(const RadialGrid& grid, int ell, OperatorKind kind, double c,
                               int sign);

// Implicit-shift QL with a sweep budget of 50 per eigenvalue; failures raise
// numeric_error tagged with the sector and size.
EigenDecomposition diagonalize(const SectorOperator& op);
dvec eigenvalues_only(const SectorOperator& op);

// Q diag(exp(-i lambda t)) Q^T acting on state.
cvec propagate(const EigenDecomposition& eig, std::span<const cplx> state, double t);

// Pointwise multiplication by exp(-i sign c t / r_j).
cvec potential_phase(const RadialGrid& grid, double c, int sign, std::span<const cplx> state,
                     double t);

inline double weighted_norm(std::span<const cplx> u, double h) {
  double s = 0.0;
  for (const auto& v : u) s += std::norm(v);
  return std::sqrt(s * h);
}

inline cplx weighted_dot(std::span<const cplx> a, std::span<const cplx> b, double h) {
  cplx s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s * h;
}

}  // namespace trotterlab::spectral
