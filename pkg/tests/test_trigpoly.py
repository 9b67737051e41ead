import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from diracsea import TrigPolynomial, integrate_product, trig_derivative
from diracsea.trigpoly import periodic_fourier_coefficients

TWO_PI = 2.0 * np.pi


def test_derivative_of_constant_is_zero():
    g = TrigPolynomial.constant(TWO_PI, 3.5)
    dg = trig_derivative(g)
    z = np.linspace(0, TWO_PI, 17)
    assert np.max(np.abs(dg(z))) == 0.0


def test_derivative_of_sine():
    L = 5.0
    g = TrigPolynomial.sine(L, 1)
    dg = trig_derivative(g)
    z = np.linspace(0, L, 33, endpoint=False)
    expected = (TWO_PI / L) * np.cos(TWO_PI * z / L)
    assert np.max(np.abs(dg(z) - expected)) < 1e-14


def test_second_derivative_of_cosine():
    L = TWO_PI
    g = TrigPolynomial.cosine(L, 1)
    ddg = trig_derivative(trig_derivative(g))
    z = np.linspace(0, L, 21, endpoint=False)
    assert np.max(np.abs(ddg(z) + np.cos(z))) < 1e-14


def test_integrate_cos_squared():
    for L in (TWO_PI, 10.0):
        g = TrigPolynomial.cosine(L, 1)
        assert abs(integrate_product(g, g) - L / 2) < 1e-14 * L


def test_integrate_cos_sin_orthogonal():
    f = TrigPolynomial.cosine(TWO_PI, 1)
    g = TrigPolynomial.sine(TWO_PI, 1)
    assert abs(integrate_product(f, g)) < 1e-15


def test_integrate_constant_against_zero_mean():
    one = TrigPolynomial.constant(TWO_PI, 1.0)
    g = TrigPolynomial.from_harmonics(TWO_PI, [(0.7, 1, 0.3), (0.2, 3, 1.1)])
    assert abs(integrate_product(one, g)) < 1e-15


def test_integrate_rejects_circle_mismatch():
    f = TrigPolynomial.cosine(TWO_PI, 1)
    g = TrigPolynomial.cosine(10.0, 1)
    with pytest.raises(ValueError):
        integrate_product(f, g)


def test_integrate_requires_real_factors():
    f = TrigPolynomial.cosine(TWO_PI, 1)
    g = TrigPolynomial(TWO_PI, [0.0, 0.0, 1.0])  # e^{iz}, not real
    assert not g.is_real
    with pytest.raises(ValueError):
        integrate_product(f, g)


def test_periodicity_and_realness():
    g = TrigPolynomial.from_harmonics(7.0, [(0.4, 2, 0.9), (1.1, 0, 0.0)])
    z = np.array([0.0, 1.3, 5.2])
    assert np.max(np.abs(g(z + 7.0) - g(z))) < 1e-13
    assert g.is_real
    vals = g(z)
    assert vals.dtype == np.float64


def test_real_flag_rejects_asymmetric_coefficients():
    with pytest.raises(ValueError):
        TrigPolynomial(TWO_PI, [0.0, 0.0, 1.0], real=True)


def test_scalar_and_sum_arithmetic():
    f = TrigPolynomial.cosine(TWO_PI, 1)
    g = TrigPolynomial.sine(TWO_PI, 2)
    h = 2.0 * f - g
    z = np.linspace(0, TWO_PI, 40, endpoint=False)
    assert np.max(np.abs(h(z) - (2 * np.cos(z) - np.sin(2 * z)))) < 1e-14
    assert h.is_real


def test_product_matches_pointwise():
    f = TrigPolynomial.cosine(TWO_PI, 1)
    g = TrigPolynomial.from_harmonics(TWO_PI, [(0.5, 2, 0.2)])
    z = np.linspace(0, TWO_PI, 64, endpoint=False)
    assert np.max(np.abs(f.product(g)(z) - f(z) * g(z))) < 1e-14


harmonic_terms = st.lists(
    st.tuples(st.floats(-1, 1), st.integers(0, 4),
              st.floats(0, 2 * np.pi)),
    min_size=1, max_size=4)


@settings(max_examples=50, deadline=None)
@given(terms=harmonic_terms)
def test_parseval_for_real_polynomials(terms):
    g = TrigPolynomial.from_harmonics(TWO_PI, terms)
    direct = integrate_product(g, g)
    parseval = TWO_PI * float(np.sum(np.abs(g.coeffs) ** 2))
    assert abs(direct - parseval) <= 1e-12 * max(1.0, parseval)


@settings(max_examples=50, deadline=None)
@given(terms=harmonic_terms)
def test_derivative_preserves_realness_and_kills_mean(terms):
    g = TrigPolynomial.from_harmonics(TWO_PI, terms)
    dg = trig_derivative(g)
    assert dg.is_real
    one = TrigPolynomial.constant(TWO_PI, 1.0)
    assert abs(integrate_product(one, dg)) < 1e-12


def test_fourier_coefficients_bessel_oracle():
    # e^{i a sin z} = sum_m J_m(a) e^{i m z}
    from scipy.special import jv
    a = 0.8
    coeffs, d, tail = periodic_fourier_coefficients(
        lambda z: np.exp(1j * a * np.sin(z)), TWO_PI, 1e-15)
    assert tail < 1e-15
    for m in range(-d, d + 1):
        assert abs(coeffs[m + d] - jv(m, a)) < 1e-14


def test_fourier_coefficients_budget_error_reports_tail():
    with pytest.raises(RuntimeError, match="achieved tail"):
        periodic_fourier_coefficients(
            lambda z: np.exp(1j * 40.0 * np.sin(z)), TWO_PI, 1e-15,
            max_samples=64)
