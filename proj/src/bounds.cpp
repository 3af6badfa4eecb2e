#include "trotterlab/bounds.hpp"

#include <cmath>

namespace trotterlab::bounds {

double c_n(int n_particles, double c0) {
  if (n_particles < 1) throw std::invalid_argument("c_n: need at least one particle");
  if (c0 < 0.0) throw std::invalid_argument("c_n: c0 must be >= 0");
  const double N = n_particles;
  return 2.0 + 6.0 * c0 * std::pow(N, 1.5) + 8.0 * c0 * c0 * std::pow(N, 3.0);
}

double c_tilde_n(int n_particles, double c0, double abs_const) {
  if (n_particles < 1) throw std::invalid_argument("c_tilde_n: need at least one particle");
  if (c0 < 0.0) throw std::invalid_argument("c_tilde_n: c0 must be >= 0");
  if (!(abs_const > 0.0)) throw std::invalid_argument("c_tilde_n: abs_const must be positive");
  const double N = n_particles;
  return abs_const * c0 *
         ((N - 1.0) * std::pow(N, 1.5) + (N - 1.0) * std::sqrt(N) * (c_n(n_particles, c0) - 1.0));
}

Rational gamma_rate(trotter::SplittingScheme scheme, int ell) {
  if (ell < 0) throw std::invalid_argument("gamma_rate: ell must be >= 0");
  if (ell == 0) return {1, 4};
  if (scheme == trotter::SplittingScheme::lie_ba) return {1, 1};
  if (ell == 1) return {1, 1};
  if (ell == 2) return {3, 2};
  return {2, 1};
}

std::vector<RateTableEntry> rate_table(int ell_max) {
  std::vector<RateTableEntry> table;
  for (auto scheme : {trotter::SplittingScheme::lie_ba, trotter::SplittingScheme::strang})
    for (int ell = 0; ell <= ell_max; ++ell)
      table.push_back({scheme, ell, gamma_rate(scheme, ell)});
  return table;
}

Theorem1Bound theorem1_bound(int n_particles, double c0, double abs_const, double T, double t,
                             double h2_norm_psi0) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("theorem1_bound: t must be in (0, 1]");
  const double cn = c_n(n_particles, c0);
  const double ctn = c_tilde_n(n_particles, c0, abs_const);
  Theorem1Bound b;
  b.headline = ctn * T * std::pow(t, 0.25) * h2_norm_psi0;
  b.three_term =
      (3.0 * ctn * std::pow(t, 1.25) + 0.5 * cn * t + ctn * T * std::pow(t, 0.25)) * h2_norm_psi0;
  return b;
}

TwoBodyReduction reduce_two_body(double m_e, double m_p, double hbar, double e_sq) {
  if (!(m_e > 0.0) || !(m_p > 0.0))
    throw std::invalid_argument("reduce_two_body: masses must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("reduce_two_body: hbar must be positive");
  TwoBodyReduction r;
  r.M = m_e + m_p;
  r.mu = m_e * m_p / r.M;
  r.c_eff = 2.0 * e_sq / (hbar * hbar);
  r.time_scale = hbar * hbar / (2.0 * r.mu);
  return r;
}

}  // namespace trotterlab::bounds
