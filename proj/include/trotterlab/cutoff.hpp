#pragma once

#include <utility>

#include "trotterlab/spectral.hpp"

namespace trotterlab::cutoff {

// Smooth radial cutoff: F(lambda <= 1) equals 1 on (-inf, 1/2], 0 on [1, inf)
// and decreases strictly across the transition band as the normalized tail
// integral of exp(-1/((x-1/2)(1-x))).
struct CutoffProfile {
  double c0_norm = 0.0;  // 1 / integral of the bump over (1/2, 1)
  double beta = 0.5;     // cutoff radius exponent: cut at s^beta
};

CutoffProfile make_cutoff_profile(double beta = 0.5, double quad_tol = 1e-12);

double f_leq(const CutoffProfile& profile, double lambda);
inline double f_gt(const CutoffProfile& profile, double lambda) {
  return 1.0 - f_leq(profile, lambda);
}

// Analytic derivatives of F(. > 1) on the transition band (zero outside).
double f_gt_prime(const CutoffProfile& profile, double lambda);
double f_gt_second(const CutoffProfile& profile, double lambda);

// Splits V = sign*c/r into (v_reg, v_sin) at radius s^beta: the sum is exact
// at every node, v_sin vanishes for r >= s^beta, v_reg for r <= s^beta / 2.
std::pair<dvec, dvec> split_potential(const spectral::RadialGrid& grid, double c, int sign,
                                      double s, const CutoffProfile& profile);

// sup over lambda of lambda^2 |F''(.>1)| by dense sampling plus
// golden-section refinement around the best sample.
double compute_cf1(const CutoffProfile& profile, int samples = 100000);

// sup over lambda of | lambda F'(.>1) - F(.>1) |, same search.
double compute_cf2(const CutoffProfile& profile, int samples = 100000);

double cf1_loose_bound();           // 8 e^{26/3}
double cf2_loose_bound(const CutoffProfile& profile);  // 1 + C_0

}  // namespace trotterlab::cutoff
