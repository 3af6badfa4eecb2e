"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import trotterlab as tl


def test_grid_and_state():
    g = tl.build_grid(40.0, 1000)
    assert g.n == 1000
    assert g.h == pytest.approx(0.04)
    assert g.r[0] == pytest.approx(0.02)

    s = tl.hydrogen_state(1, 0, 0, g)
    assert s.norm() == pytest.approx(1.0, abs=1e-10)
    # radial profile matches the closed form up to normalization
    u = s.u
    ref = g.r * np.array([tl.hydrogen_radial(1, 0, r) for r in g.r])
    ref /= math.sqrt(np.sum(np.abs(ref) ** 2) * g.h)
    assert np.max(np.abs(u - ref)) < 1e-12


def test_operators_and_propagation():
    g = tl.build_grid(30.0, 200)
    op = tl.sector_operator(g, 0, tl.OperatorKind.full_hamiltonian, 2.0, -1)
    eig = tl.diagonalize(op)
    s = tl.hydrogen_state(1, 0, 0, g)
    out = tl.propagate(eig, s.u, 1.3)
    assert np.sum(np.abs(out) ** 2) * g.h == pytest.approx(1.0, abs=1e-9)

    phased = tl.potential_phase(g, 2.0, -1, s.u, 0.7)
    assert np.sum(np.abs(phased) ** 2) * g.h == pytest.approx(1.0, abs=1e-12)


def test_ground_energy():
    g = tl.build_grid(60.0, 3000)
    op = tl.sector_operator(g, 0, tl.OperatorKind.full_hamiltonian, 2.0, -1)
    vals = tl.eigenvalues_only(op)
    assert vals[0] == pytest.approx(-1.0, abs=2e-3)


def test_norms():
    g = tl.build_grid(20.0, 4000)
    s = tl.hydrogen_state(1, 0, 0, g)
    assert tl.h2_norm(s) == pytest.approx(math.sqrt(6.0), rel=5e-3)
    assert tl.h2_norm(s) >= tl.l2_norm(s)
    lhs, rhs, ratio = tl.spherical_hardy_check(tl.hydrogen_state(3, 2, 0, g))
    assert 0.0 < ratio < 1.0
    assert 1.2 < tl.hardy_norm_estimate(tl.build_grid(40.0, 300), 0) < 2.0


def test_trotter_error_decreases():
    g = tl.build_grid(60.0, 400)
    s = tl.hydrogen_state(3, 2, 0, g)
    errs = [tl.trotter_error("lie", s, 2.0, -1, 1.0, L) for L in (16, 32, 64, 128)]
    assert all(a > b for a, b in zip(errs, errs[1:]))
    slope, r2 = tl.fit_slope([1.0 / L for L in (16, 32, 64, 128)], errs)
    assert slope == pytest.approx(1.0, abs=0.15)
    assert r2 > 0.99


def test_constants_and_oracle():
    assert tl.c_n(1, 1.0) == 16.0
    assert tl.gamma_rate("strang", 2) == (3, 2)
    assert tl.oracle_strang_residual(5, 7, 0.3, 24) < 1e-8
    assert tl.oracle_lie_residual(5, 7, 0.3, 24) < 1e-9
    head, three = tl.theorem1_bound(2, 1.0, 1.0, 1.0, 1e-4, 1.0)
    assert three >= head > 0.0
    red = tl.reduce_two_body(2.0, 2.0, 1.0, 1.0)
    assert red["mu"] == pytest.approx(1.0)


def test_cutoff():
    p = tl.make_cutoff_profile()
    assert tl.f_leq(p, 0.4) == 1.0
    assert tl.f_leq(p, 1.2) == 0.0
    assert tl.f_leq(p, 0.75) == pytest.approx(0.5, abs=1e-8)
    assert tl.compute_cf1(p) <= 8.0 * math.exp(26.0 / 3.0)
    assert tl.compute_cf2(p) <= 1.0 + p.c0_norm
