#include <doctest.h>

#include <cmath>
#include <random>

#include "trotterlab/norms.hpp"
#include "trotterlab/quadrature.hpp"

using namespace trotterlab;
using namespace trotterlab::norms;

namespace {

states::SectorState profile_state(int ell, const std::function<double(double)>& f,
                                  std::shared_ptr<const states::RadialGrid> g) {
  states::SectorState s;
  s.ell = ell;
  s.m = 0;
  s.grid = g;
  s.u.resize(g->n);
  for (int j = 0; j < g->n; ++j) s.u[j] = g->r[j] * f(g->r[j]);
  return s;
}

}  // namespace

TEST_CASE("norm basics: zero state, h2 >= l2") {
  auto g = spectral::build_grid(30.0, 400);
  auto zero = profile_state(0, [](double) { return 0.0; }, g);
  CHECK(h2_norm(zero) == 0.0);

  auto s = states::hydrogen_state(2, 1, 0, g);
  CHECK(h2_norm(s) >= l2_norm(s));
  auto rep = norm_report(s, 1);
  CHECK(rep.h2 >= rep.l2);
  CHECK(rep.weighted_h2.has_value());
}

TEST_CASE("ground-state H2 norm matches the quadrature oracle") {
  // Delta psi = (1 - 2/r) psi for the a0 = 1 ground state, so
  // ||psi||_{H2}^2 = 1 + 4 * int (1 - 2/r)^2 e^{-2r} r^2 dr. The integrand
  // simplifies to (r - 2)^2 e^{-2r}; the oracle evaluates to 5/4 * 4 = 5,
  // giving sqrt(6).
  const double integral = quadrature::adaptive_quad(
      [](double r) { return sq(r - 2.0) * std::exp(-2.0 * r); }, 0.0, 60.0, 1e-12);
  const double oracle = std::sqrt(1.0 + 4.0 * integral);
  CHECK(oracle == doctest::Approx(std::sqrt(6.0)).epsilon(1e-10));

  // The first-node closure term enters || Delta psi || at O(h) for s-states,
  // so the 2e-3 band needs h ~ 2.5e-3.
  auto g = spectral::build_grid(20.0, 8000);
  auto s = states::hydrogen_state(1, 0, 0, g);
  CHECK(h2_norm(s) == doctest::Approx(oracle).epsilon(2e-3));
}

TEST_CASE("weighted H2 norm is a pointwise reweighting") {
  auto g = spectral::build_grid(40.0, 2000);
  // f = r^2 e^{-r} in sector 2, weight 1 -> equals H2 norm of r e^{-r} in sector 2
  auto a = profile_state(2, [](double r) { return r * r * std::exp(-r); }, g);
  auto b = profile_state(2, [](double r) { return r * std::exp(-r); }, g);
  CHECK(weighted_h2_norm(a, 1) == doctest::Approx(h2_norm(b)).epsilon(1e-12));

  auto zero = profile_state(1, [](double) { return 0.0; }, g);
  CHECK(weighted_h2_norm(zero, 1) == 0.0);
  CHECK_THROWS_AS(weighted_h2_norm(a, 0), std::invalid_argument);
}

TEST_CASE("weighted H2 norm of the ground state diverges under refinement") {
  double prev = 0.0;
  for (int n : {500, 1000, 2000}) {
    auto g = spectral::build_grid(40.0, n);
    auto s = states::hydrogen_state(1, 0, 0, g);
    const double w = weighted_h2_norm(s, 1);
    CHECK(w > prev);  // grows without bound as the mesh refines
    if (prev > 0.0) CHECK(sq(w) / sq(prev) > 4.0);
    prev = w;
  }
}

TEST_CASE("hardy estimate: coarse value, refinement, and ell maximum") {
  auto coarse = spectral::build_grid(40.0, 200);
  const double v = hardy_norm_estimate(*coarse, 0);
  CHECK(v > 1.2);
  CHECK(v < 2.0);

  double prev = 0.0;
  for (int n : {500, 1000, 2000, 4000}) {
    auto g = spectral::build_grid(80.0, n);
    const double est = hardy_norm_estimate(*g, 0);
    CHECK(est >= prev - 1e-9);  // monotone nondecreasing under refinement
    CHECK(est <= 2.0 * 1.05);
    prev = est;
  }
  // The approach to the continuum value 2 is logarithmic in the resolved
  // scale range: the (4000, 80) value sits at 1.8206 (direct Lanczos check);
  // two more octaves of scales push it past 1.85.
  CHECK(prev == doctest::Approx(1.8206).epsilon(5e-4));
  auto fine = spectral::build_grid(80.0, 16000);
  CHECK(hardy_norm_estimate(*fine, 0) >= 1.849);

  // maximum over sectors is attained at ell = 0 (observation)
  auto g = spectral::build_grid(80.0, 500);
  CHECK(hardy_norm_estimate(*g, 3) == doctest::Approx(hardy_norm_estimate(*g, 0)).epsilon(1e-9));
}

TEST_CASE("hardy estimate equals the spectral-route value on a small grid") {
  // Direct oracle: sigma_max(diag(1/r) K^{-1/2}) through the full
  // eigendecomposition of K.
  auto g = spectral::build_grid(30.0, 160);
  auto K = spectral::sector_operator(*g, 0, spectral::OperatorKind::kinetic_only, 0.0, -1);
  auto eig = spectral::diagonalize(K);
  const int n = eig.n;
  // Form B = diag(1/r) Q diag(lambda^{-1/2}) Q^T and take its largest
  // singular value via power iteration on B^T B.
  std::vector<double> B(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += eig.eigenvectors[k * n + i] * eig.eigenvectors[k * n + j] /
               std::sqrt(eig.eigenvalues[k]);
      B[i * n + j] = acc / g->r[i];
    }
  dvec x(n, 1.0), y(n);
  double sigma = 0.0;
  for (int it = 0; it < 400; ++it) {
    for (int i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < n; ++j) acc += B[i * n + j] * x[j];
      y[i] = acc;
    }
    for (int j = 0; j < n; ++j) {
      double acc = 0.0;
      for (int i = 0; i < n; ++i) acc += B[i * n + j] * y[i];
      x[j] = acc;
    }
    double nrm = 0.0;
    for (double v : x) nrm += v * v;
    nrm = std::sqrt(nrm);
    sigma = std::sqrt(nrm);
    for (auto& v : x) v /= nrm;
  }
  CHECK(hardy_norm_estimate(*g, 0) == doctest::Approx(sigma).epsilon(1e-8));
}

TEST_CASE("spherical hardy: s-sector annihilated, smooth profile ratios below one") {
  auto g = spectral::build_grid(40.0, 3000);
  auto s0 = profile_state(0, [](double r) { return std::exp(-r); }, g);
  auto c0 = spherical_hardy_check(s0);
  CHECK(c0.lhs == 0.0);
  CHECK(c0.ratio == 0.0);

  auto s1 = profile_state(1, [](double r) { return r * std::exp(-r); }, g);
  auto c1 = spherical_hardy_check(s1);
  CHECK(c1.ratio < 1.0);
  CHECK(c1.lhs > 0.0);

  // quadrature oracle for both sides of the s1 case:
  // f = r e^{-r} Y_1m: lhs = || 2/r^2 f || = 2 sqrt(int e^{-2r} r^2 dr / r^2 * r^2 ...)
  const double lhs_oracle = 2.0 * std::sqrt(quadrature::adaptive_quad(
                                      [](double r) { return std::exp(-2.0 * r); }, 0.0, 60.0,
                                      1e-13));
  CHECK(c1.lhs == doctest::Approx(lhs_oracle).epsilon(1e-4));
}

TEST_CASE("spherical hardy ratio stays below one over a random sweep") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::uniform_real_distribution<double> rate(0.3, 3.0);
  auto g = spectral::build_grid(60.0, 600);
  for (int ell = 1; ell <= 5; ++ell) {
    for (int rep = 0; rep < 200; ++rep) {
      double a1 = amp(rng), a2 = amp(rng), a3 = amp(rng);
      double b1 = rate(rng), b2 = rate(rng), b3 = rate(rng);
      auto s = profile_state(ell,
                             [&](double r) {
                               const double core = a1 * std::exp(-b1 * r) +
                                                   a2 * std::exp(-b2 * r) +
                                                   a3 * std::exp(-b3 * r);
                               return std::pow(r, ell) * core;
                             },
                             g);
      if (s.norm() < 1e-12) continue;
      CHECK(spherical_hardy_check(s).ratio < 1.0);
    }
  }
}

TEST_CASE("key observation monitor: identity lattice and route agreement") {
  auto g = spectral::build_grid(90.0, 700);
  auto s = states::hydrogen_state(3, 2, 0, g);

  auto H = spectral::diagonalize(
      spectral::sector_operator(*g, 2, spectral::OperatorKind::full_hamiltonian, 2.0, -1));
  auto K = spectral::diagonalize(
      spectral::sector_operator(*g, 2, spectral::OperatorKind::kinetic_only, 0.0, -1));

  auto id = key_observation_monitor(s, 1, H, K, {0.0}, {0.0}, 2.0);
  CHECK(id.sup_ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(id.paper_constant ==
        doctest::Approx(std::sqrt(1.0 + 484.0 + 6.0 * (1.0 + 4.0))).epsilon(1e-12));

  dvec times{0.0, 0.5, 1.0}, frees{0.0, 0.4};
  auto spec_route = key_observation_monitor(s, 1, H, K, times, frees, 2.0);
  auto cheb_route = key_observation_monitor_fast(s, 1, 2.0, -1, times, frees);
  CHECK(spec_route.sup_ratio == doctest::Approx(cheb_route.sup_ratio).epsilon(1e-8));
  REQUIRE(spec_route.trace.size() == cheb_route.trace.size());
  for (size_t i = 0; i < spec_route.trace.size(); ++i)
    CHECK(spec_route.trace[i].weighted_h2 ==
          doctest::Approx(cheb_route.trace[i].weighted_h2).epsilon(1e-7));
}
