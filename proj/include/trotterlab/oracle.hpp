#pragma once

#include <Eigen/Dense>

#include "trotterlab/common.hpp"

namespace trotterlab::oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Seed-reproducible Hermitian pair drawn from the Gaussian Hermitian
// ensemble and normalized to unit spectral radius.
struct GeneratorPair {
  int dim = 0;
  Matrix a_mat;
  Matrix b_mat;
  std::uint64_t seed = 0;
};

GeneratorPair make_generator_pair(int dim, std::uint64_t seed);

// exp(-i t H) for Hermitian H via spectral decomposition.
Matrix expm_herm(const Matrix& h, double t);

// e^{-iA t/2} e^{-iB t} e^{-iA t/2} - e^{-i(A+B) t}
Matrix strang_error_direct(const GeneratorPair& pair, double t);

// The double-integral representation
//   1/2 int_0^t ds int_0^s du  e^{L1 s/2} e^{L2 (s-u)}
//        [ e^{L2 u} e^{L1 (s-u)/2}, [L2, L1] ] e^{L1 u/2} e^{L (t-s)}
// with L1 = -iA, L2 = -iB, L = -iH, evaluated by tensor Gauss-Legendre
// quadrature on the triangle (substitution u = s v).
Matrix strang_error_integral(const GeneratorPair& pair, double t, int quad_nodes);

// e^{-iB t} e^{-iA t} - e^{-iH t}
Matrix lie_error_direct(const GeneratorPair& pair, double t);

// i int_0^t ds e^{-isB} [e^{-isA}, B] e^{-i(t-s)H}
Matrix lie_error_integral(const GeneratorPair& pair, double t, int quad_nodes);

// Frobenius residual of [L1, e^{s L2}] = int_0^s e^{(s-tau) L2} [L1, L2] e^{tau L2} dtau.
double commutator_expansion_check(const GeneratorPair& pair, double s, int quad_nodes);

// Assembles the three-term decomposition that relates the (L+1)-step
// second-order error to the L-step first-order error and verifies it on a
// random vector: returns the residual norm.
double e1_e2_relation_check(const GeneratorPair& pair, double t, int L);

}  // namespace trotterlab::oracle
