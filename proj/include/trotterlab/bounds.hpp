#pragma once

#include "trotterlab/common.hpp"
#include "trotterlab/trotter.hpp"

namespace trotterlab::bounds {

struct Rational {
  int num = 0;
  int den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

struct RateTableEntry {
  trotter::SplittingScheme scheme;
  int ell_condition = 0;
  Rational rate;
};

// C_N = 2 + 6 c0 N^{3/2} + 8 c0^2 N^3
double c_n(int n_particles, double c0);

// C~_N = C c0 ( (N-1) N^{3/2} + (N-1) N^{1/2} (C_N - 1) ), C the unnamed
// universal constant (default 1, non-physical).
double c_tilde_n(int n_particles, double c0, double abs_const = 1.0);

// Worst case 1/4; first-order saturates at 1 for ell >= 1; second order
// climbs 1, 3/2, 2 at ell = 1, 2, >= 3.
Rational gamma_rate(trotter::SplittingScheme scheme, int ell);

std::vector<RateTableEntry> rate_table(int ell_max);

struct Theorem1Bound {
  double headline = 0.0;    // C~_N * T * t^{1/4} * ||psi0||_{H^2}
  double three_term = 0.0;  // (3 C~_N t^{5/4} + C_N t / 2 + C~_N T t^{1/4}) * ||psi0||_{H^2}
};

Theorem1Bound theorem1_bound(int n_particles, double c0, double abs_const, double T, double t,
                             double h2_norm_psi0);

struct TwoBodyReduction {
  double M = 0.0;           // total mass
  double mu = 0.0;          // reduced mass
  double c_eff = 0.0;       // 2 e^2 / hbar^2
  double time_scale = 0.0;  // hbar^2 / (2 mu): relative evolution for t maps
                            // to the one-body clock at time_scale * t
};

TwoBodyReduction reduce_two_body(double m_e, double m_p, double hbar, double e_sq);

}  // namespace trotterlab::bounds
