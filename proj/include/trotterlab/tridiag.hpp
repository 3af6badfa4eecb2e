#pragma once

#include <optional>
#include <span>

#include "trotterlab/common.hpp"

namespace trotterlab::tridiag {

// Eigenvalues (and optionally orthonormal eigenvectors) of a symmetric
// tridiagonal matrix by implicit-shift QL sweeps (EISPACK tql2 lineage).
// d: main diagonal (size n), e: off diagonal (size n-1).
// On return eigenvalues are ascending; if vectors is non-null it receives the
// n*n eigenvector matrix with eigenvector k contiguous at [k*n, (k+1)*n).
// Throws numeric_error if any eigenvalue needs more than max_sweeps sweeps.
void ql_implicit_shift(dvec d, dvec e, dvec& eigenvalues, dvec* vectors,
                       int max_sweeps = 50);

// LDL^T factorization of a symmetric tridiagonal matrix. Pivots below
// pivot_floor raise numeric_error (operators fed here are positive definite
// by construction; smaller pivots indicate a discretization bug).
struct LdltFactor {
  dvec d_inv;  // 1/pivot
  dvec l;      // subdiagonal multipliers
  void solve(std::span<const double> rhs, std::span<double> x) const;
};
LdltFactor ldlt_factor(const dvec& diag, const dvec& off, double pivot_floor = 1e-12);

// J_0(z)..J_kmax(z) in one pass via Miller's downward recurrence,
// normalized with J_0 + 2*sum_k J_{2k} = 1. Requires z >= 0.
dvec bessel_j_sequence(double z, int kmax);

// Applies exp(-i*t*M) for a symmetric tridiagonal M through a Chebyshev
// expansion with Bessel coefficients. Spectral bounds come from Gershgorin
// discs, so the expansion converges to round-off for every real t. The
// coefficient set is cached per step size; apply() reuses internal work
// buffers, so one instance must not be shared across threads.
class TridiagPropagator {
 public:
  TridiagPropagator(dvec diag, dvec off);

  void apply(double t, cvec& state);  // in place
  int last_degree() const { return last_degree_; }
  double lambda_min() const { return lo_; }
  double lambda_max() const { return hi_; }

 private:
  void prepare(double t);

  dvec d_, e_;
  double lo_ = 0.0, hi_ = 0.0;   // Gershgorin bounds
  double cached_t_ = 0.0;
  bool has_cache_ = false;
  cvec coeff_;                   // Chebyshev coefficients a_k
  cplx phase_ = 1.0;             // exp(-i*center*t)
  int last_degree_ = 0;
  cvec b0_, b1_, b2_;            // Clenshaw workspace
};

}  // namespace trotterlab::tridiag
