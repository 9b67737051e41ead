import numpy as np
import pytest
from scipy.special import jv

from diracsea import (GaugeFunction, PotentialPair, TrigPolynomial,
                      apply_gauge_solution, current_density, dirac_residual,
                      evolve_free, free_mode, from_coefficients,
                      gauge_invariance_report, make_lattice,
                      solve_characteristics)
from diracsea.lattice import Mode

TWO_PI = 2.0 * np.pi


def _random_state(lat, rng, nmodes=5):
    coeffs = np.zeros(lat.dim, dtype=complex)
    picks = rng.choice(lat.dim, size=min(nmodes, lat.dim), replace=False)
    coeffs[picks] = rng.normal(size=len(picks)) + 1j * rng.normal(size=len(picks))
    coeffs /= np.linalg.norm(coeffs)
    return from_coefficients(lat, coeffs)


def test_free_evolution_at_zero_time_is_identity():
    lat = make_lattice(TWO_PI, 3)
    rng = np.random.default_rng(0)
    psi = _random_state(lat, rng)
    out = evolve_free(psi, 0.0)
    assert np.array_equal(out.coeffs, psi.coeffs)


def test_single_mode_picks_up_minus_one_at_t_pi():
    # (lam=+, r=1) on L=2pi has energy 1, so the phase at t=pi is -1
    lat = make_lattice(TWO_PI, 2)
    psi = free_mode(1, 1, lat)
    out = evolve_free(psi, np.pi)
    idx = lat.index(Mode.free(1, 1))
    assert abs(out.coeffs[idx] - (-1.0)) < 1e-14


def test_free_evolution_is_unitary():
    lat = make_lattice(TWO_PI, 4)
    rng = np.random.default_rng(3)
    for _ in range(5):
        psi = _random_state(lat, rng)
        out = evolve_free(psi, rng.uniform(0, 10))
        assert abs(out.norm() - psi.norm()) < 1e-14


def test_gauge_solution_with_zero_chi_matches_free():
    lat = make_lattice(TWO_PI, 3)
    rng = np.random.default_rng(5)
    psi = _random_state(lat, rng)
    t = 1.7
    gauged = apply_gauge_solution(psi, TrigPolynomial.zero(TWO_PI), t)
    free = evolve_free(psi, t).with_grid()
    assert np.max(np.abs(gauged.samples - free.samples)) < 1e-14


def test_constant_chi_is_global_phase():
    lat = make_lattice(TWO_PI, 3)
    rng = np.random.default_rng(6)
    psi = _random_state(lat, rng)
    c, t = 0.9, 2.0
    gauged = apply_gauge_solution(psi, TrigPolynomial.constant(TWO_PI, c), t)
    free = evolve_free(psi, t).with_grid()
    assert np.max(np.abs(gauged.samples - np.exp(1j * c) * free.samples)) < 1e-14
    assert abs(gauged.grid_norm() - 1.0) < 1e-12
    dev = np.max(np.abs(current_density(gauged).values
                        - current_density(free).values))
    assert dev < 1e-14


def test_sinusoidal_chi_produces_bessel_sidebands():
    # e^{i a sin z} phase on a single mode: Jacobi-Anger gives the sidebands
    lat = make_lattice(TWO_PI, 4)
    psi = free_mode(1, 1, lat)
    a, t = 0.8, 1.0
    out = apply_gauge_solution(psi, TrigPolynomial.sine(TWO_PI, 1, a), t)
    z = out.grid_points()
    oracle = sum(jv(m, a) * np.exp(1j * m * z) for m in range(-25, 26))
    oracle = oracle * np.exp(-1j * t) * np.exp(1j * z) / np.sqrt(TWO_PI)
    assert np.max(np.abs(out.samples[:, 0] - oracle)) < 1e-13
    assert np.max(np.abs(out.samples[:, 1])) == 0.0
    assert abs(out.grid_norm() - 1.0) < 1e-12


def test_characteristics_vanish_without_sources():
    a = PotentialPair.zero(TWO_PI)
    _, c1, c2 = solve_characteristics(a, 2.0, 100)
    assert np.max(np.abs(c1)) == 0.0
    assert np.max(np.abs(c2)) == 0.0


def test_characteristics_constant_source():
    a0 = TrigPolynomial.constant(TWO_PI, 1.0)
    a = PotentialPair.static(a0, TrigPolynomial.zero(TWO_PI))
    _, c1, c2 = solve_characteristics(a, 2.0, 64)
    assert np.max(np.abs(c1 - 2.0)) < 1e-12
    assert np.max(np.abs(c2 - 2.0)) < 1e-12


def test_characteristics_recover_minus_chi_for_pure_gauge():
    spatial = TrigPolynomial.sine(TWO_PI, 1)
    chi = GaugeFunction.separable(spatial, lambda t: t, lambda t: 1.0)
    a = PotentialPair.pure_gauge(chi)
    T = 1.5
    z, c1, c2 = solve_characteristics(a, T, 10000)
    target = -spatial(z) * T
    assert np.max(np.abs(c1 - target)) < 1e-6
    assert np.max(np.abs(c2 - target)) < 1e-6


def test_characteristics_fourth_order_convergence():
    spatial = TrigPolynomial.sine(TWO_PI, 1)
    chi = GaugeFunction.separable(spatial, np.sin, np.cos)
    a = PotentialPair.pure_gauge(chi)
    T = 1.0
    z, c_coarse, _ = solve_characteristics(a, T, 16)
    z, c_fine, _ = solve_characteristics(a, T, 32)
    target = -spatial(z) * np.sin(T)
    e_coarse = np.max(np.abs(c_coarse - target))
    e_fine = np.max(np.abs(c_fine - target))
    assert e_coarse / e_fine > 8.0


def test_characteristics_rejects_too_few_steps():
    with pytest.raises(ValueError):
        solve_characteristics(PotentialPair.zero(TWO_PI), 1.0, 1)


def test_current_of_right_moving_mode_is_constant():
    for L in (TWO_PI, 10.0):
        lat = make_lattice(L, 3)
        j = current_density(free_mode(1, 2, lat))
        assert np.max(np.abs(j.values - 1.0 / L)) < 1e-14


def test_current_of_left_moving_mode_is_negative():
    lat = make_lattice(TWO_PI, 3)
    j = current_density(free_mode(1, -2, lat))
    assert np.max(np.abs(j.values + 1.0 / TWO_PI)) < 1e-14


def test_equal_superposition_of_countermovers_carries_no_current():
    lat = make_lattice(TWO_PI, 2)
    coeffs = np.zeros(lat.dim, dtype=complex)
    coeffs[lat.index(Mode.free(1, 1))] = 1 / np.sqrt(2)
    coeffs[lat.index(Mode.free(1, -1))] = 1 / np.sqrt(2)
    j = current_density(from_coefficients(lat, coeffs))
    assert np.max(np.abs(j.values)) < 1e-15
    assert abs(j.total_charge()) < 1e-14


def test_multimode_current_oscillates_with_zero_mean():
    # hand-expanded profile: J(z) = (cos z - sin z) / (2 L)
    lat = make_lattice(TWO_PI, 2)
    coeffs = np.zeros(lat.dim, dtype=complex)
    coeffs[lat.index(Mode.free(1, 1))] = 0.5
    coeffs[lat.index(Mode.free(1, 2))] = 0.5
    coeffs[lat.index(Mode.free(1, -1))] = 0.5
    coeffs[lat.index(Mode.free(1, -2))] = 0.5j
    j = current_density(from_coefficients(lat, coeffs))
    z = j.z
    expected = (np.cos(z) - np.sin(z)) / (2 * TWO_PI)
    assert np.max(np.abs(j.values - expected)) < 1e-14
    assert np.ptp(j.values) > 0.01
    assert abs(j.total_charge()) < 1e-14


def test_gauge_invariance_zero_chi_is_exact():
    lat = make_lattice(TWO_PI, 3)
    rng = np.random.default_rng(9)
    psi = _random_state(lat, rng)
    assert gauge_invariance_report(psi, TrigPolynomial.zero(TWO_PI), 1.3) == 0.0


def test_gauge_invariance_single_mode():
    lat = make_lattice(TWO_PI, 4)
    psi = free_mode(1, 1, lat)
    chi = TrigPolynomial.sine(TWO_PI, 1, 0.7)
    assert gauge_invariance_report(psi, chi, 1.0) <= 1e-12


def test_gauge_invariance_multimode():
    lat = make_lattice(TWO_PI, 5)
    rng = np.random.default_rng(12)
    psi = _random_state(lat, rng, nmodes=5)
    chi = TrigPolynomial.cosine(TWO_PI, 2)  # cos(4 pi z / L) on L = 2 pi
    assert gauge_invariance_report(psi, chi, 2.5) <= 1e-12


def test_charge_is_conserved_under_free_evolution():
    lat = make_lattice(TWO_PI, 4)
    rng = np.random.default_rng(21)
    psi = _random_state(lat, rng)
    q0 = current_density(evolve_free(psi, 0.0)).total_charge()
    for t in (0.5, 1.9, 4.4):
        qt = current_density(evolve_free(psi, t)).total_charge()
        assert abs(qt - q0) < 1e-12


def test_dirac_residual_free_eigenmode():
    lat = make_lattice(TWO_PI, 2)
    psi = free_mode(1, 1, lat)
    dt = 1e-5
    times = [k * dt for k in range(3)]
    traj = [evolve_free(psi, t).with_grid() for t in times]
    assert dirac_residual(traj, times, PotentialPair.zero(TWO_PI)) <= 1e-10


def _pure_gauge_residual(dt):
    lat = make_lattice(TWO_PI, 4)
    psi = free_mode(1, 1, lat)
    spatial = TrigPolynomial.sine(TWO_PI, 1)
    chi = GaugeFunction.separable(spatial, np.sin, np.cos)
    a = PotentialPair.pure_gauge(chi)
    times = [0.4 + k * dt for k in (-1, 0, 1)]
    traj = [apply_gauge_solution(psi, chi, t) for t in times]
    return dirac_residual(traj, times, a)


def test_dirac_residual_pure_gauge_second_order():
    r = _pure_gauge_residual(1e-3)
    assert r < 1e-5
    ratio = r / _pure_gauge_residual(5e-4)
    assert 3.0 < ratio < 5.0


def test_dirac_residual_requires_three_samples():
    lat = make_lattice(TWO_PI, 2)
    psi = free_mode(1, 1, lat).with_grid()
    with pytest.raises(ValueError):
        dirac_residual([psi, psi], [0.0, 0.1], PotentialPair.zero(TWO_PI))


def test_gauge_solution_norm_preserved_invariant():
    lat = make_lattice(TWO_PI, 4)
    rng = np.random.default_rng(30)
    for _ in range(5):
        psi = _random_state(lat, rng)
        chi = TrigPolynomial.from_harmonics(
            TWO_PI, [(rng.uniform(-1, 1), 1, rng.uniform(0, TWO_PI)),
                     (rng.uniform(-1, 1), 2, rng.uniform(0, TWO_PI))])
        out = apply_gauge_solution(psi, chi, rng.uniform(0, 3))
        assert abs(out.grid_norm() - 1.0) < 1e-12
