import numpy as np
import pytest

from diracsea import free_mode, from_coefficients, make_lattice, mode_overlap

TWO_PI = 2.0 * np.pi


def test_positive_mode_is_upper_plane_wave():
    lat = make_lattice(TWO_PI, 3)
    psi = free_mode(1, 1, lat)
    z = psi.grid_points()
    expected = np.exp(1j * z) / np.sqrt(TWO_PI)
    assert np.max(np.abs(psi.samples[:, 0] - expected)) < 1e-14
    assert np.max(np.abs(psi.samples[:, 1])) == 0.0


def test_negative_mode_swaps_components():
    lat = make_lattice(TWO_PI, 3)
    psi = free_mode(-1, 1, lat)
    z = psi.grid_points()
    expected = np.exp(1j * z) / np.sqrt(TWO_PI)
    assert np.max(np.abs(psi.samples[:, 1] - expected)) < 1e-14
    assert np.max(np.abs(psi.samples[:, 0])) == 0.0


def test_modes_are_normalized():
    lat = make_lattice(10.0, 2)
    for m in lat.modes:
        psi = free_mode(m.lam, m.r, lat)
        assert abs(psi.norm() - 1.0) < 1e-14
        assert abs(psi.grid_norm() - 1.0) < 1e-13


def test_zero_momentum_is_not_a_free_mode():
    lat = make_lattice(TWO_PI, 2)
    with pytest.raises(ValueError):
        free_mode(1, 0, lat)


def test_mode_overlaps_are_kronecker():
    lat = make_lattice(TWO_PI, 2)
    modes = lat.modes
    for a in modes:
        for b in modes:
            val = mode_overlap(free_mode(a.lam, a.r, lat),
                               free_mode(b.lam, b.r, lat))
            expected = 1.0 if a == b else 0.0
            assert abs(val - expected) < 1e-14


def test_overlap_rejects_lattice_mismatch():
    a = free_mode(1, 1, make_lattice(TWO_PI, 2))
    b = free_mode(1, 1, make_lattice(TWO_PI, 3))
    with pytest.raises(ValueError):
        mode_overlap(a, b)


def test_parseval_between_representations():
    rng = np.random.default_rng(11)
    lat = make_lattice(TWO_PI, 4)
    for _ in range(5):
        coeffs = rng.normal(size=lat.dim) + 1j * rng.normal(size=lat.dim)
        psi = from_coefficients(lat, coeffs).with_grid()
        assert abs(psi.norm() - psi.grid_norm()) < 1e-12 * psi.norm()


def test_completeness_for_band_limited_states():
    # sum over modes of |<mode, psi>|^2 recovers the squared norm
    rng = np.random.default_rng(7)
    lat = make_lattice(TWO_PI, 3)
    coeffs = rng.normal(size=lat.dim) + 1j * rng.normal(size=lat.dim)
    psi = from_coefficients(lat, coeffs).with_grid()
    total = sum(abs(mode_overlap(free_mode(m.lam, m.r, lat), psi)) ** 2
                for m in lat.modes)
    assert abs(total - psi.norm() ** 2) < 1e-12 * psi.norm() ** 2


def test_state_requires_some_representation():
    lat = make_lattice(TWO_PI, 2)
    with pytest.raises(ValueError):
        from diracsea import SpinorState
        SpinorState(lat, None, None)
