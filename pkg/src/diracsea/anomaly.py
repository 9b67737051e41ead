"""Spectral projectors, the gauge unitary, and the anomaly of the smeared
current under conjugation.

The central quantity is the two-trace difference

    Delta = Tr(P+ A V' P- V P+) - Tr(P- A V' P+ V P-),   A = sigma3 f,
    V = multiplication by exp(i chi),  V' its adjoint,

which equals -(1/pi) * integral f chi' dz. On the completed mode basis
(surface states in the sea) the agreement is exact at any finite cutoff
wide enough to hold the operator bands: the trace localizes at the Fermi
surface, and the closed form falls out of a Parseval identity rather than a
continuum limit.
"""

from dataclasses import dataclass

import numpy as np

from .blockop import BlockOperator, _assemble_multiplication, multiplication_operator
from .trigpoly import periodic_fourier_coefficients, integrate_product, trig_derivative

TRACE_IMAG_TOL = 1e-11


@dataclass(frozen=True)
class ProjectorPair:
    """Diagonal 0/1 projectors onto the positive/negative energy modes."""

    plus: BlockOperator
    minus: BlockOperator


@dataclass(frozen=True)
class GaugeUnitary:
    """Matrix of multiplication by exp(i chi(z)) with its band metadata.

    `bandwidth` is the retained coefficient band of exp(i chi); `tail` bounds
    the magnitude of every dropped coefficient.
    """

    chi: object
    operator: BlockOperator
    bandwidth: int
    tail: float


@dataclass(frozen=True)
class AnomalyReport:
    """Trace values and the closed-form comparison for one (f, chi, lattice)."""

    L: float
    N: int
    d_f: int
    d_v: int
    t_plus: float
    t_minus: float
    delta: float
    closed_form: float
    abs_error: float


def build_projectors(lattice):
    """Energy-sign projectors on the completed basis; the surface states
    belong to the sea."""
    modes = lattice.operator_modes
    lam = np.array([m.lam for m in modes], dtype=float)
    plus = BlockOperator(modes, np.diag((lam > 0).astype(complex)), hermitian=True)
    minus = BlockOperator(modes, np.diag((lam < 0).astype(complex)), hermitian=True)
    return ProjectorPair(plus, minus)


def gauge_unitary(chi, lattice, tail_tol=1e-15):
    """Multiplication by exp(i chi(z)) as a band matrix.

    Coefficients come from an adaptive high-resolution transform truncated
    where they fall below `tail_tol`; the band must fit the momentum window.
    """
    if not chi.is_real:
        raise ValueError("the gauge function must be real-valued")
    if chi.L != lattice.L:
        raise ValueError("gauge function and lattice circumferences differ")
    coeffs, d_v, tail = periodic_fourier_coefficients(
        lambda z: np.exp(1j * chi(z)), chi.L, tail_tol)
    mat = _assemble_multiplication(coeffs, "identity", lattice.operator_modes)
    op = BlockOperator(lattice.operator_modes, mat)
    return GaugeUnitary(chi, op, d_v, tail)


def transformed_projectors(v, projectors):
    """Conjugated projectors V' P+- V; idempotent away from the cutoff edge."""
    vm = v.operator.matrix
    plus = vm.conj().T @ projectors.plus.matrix @ vm
    minus = vm.conj().T @ projectors.minus.matrix @ vm
    modes = v.operator.modes
    return (BlockOperator(modes, plus), BlockOperator(modes, minus))


def minimum_cutoff(f, chi):
    """Smallest admissible momentum window for the anomaly traces."""
    return 3 * (f.degree + 2 * chi.degree)


def _real_trace(matrix, label):
    val = complex(np.trace(matrix))
    if abs(val.imag) > TRACE_IMAG_TOL * max(1.0, abs(val)):
        raise RuntimeError(f"{label} has imaginary residue {val.imag:.3e}")
    return val.real


def anomaly_delta(f, chi, lattice, tail_tol=1e-15):
    """Both anomaly traces by explicit matrix products, with the closed-form
    comparison.

    Requires N >= 3 * (deg f + 2 deg chi) so every trace contribution sits
    inside the truncation window (contributions beyond the input bands decay
    superexponentially).
    """
    needed = minimum_cutoff(f, chi)
    if lattice.N < needed:
        raise ValueError(f"cutoff N={lattice.N} is too small for these "
                         f"symbols; need N >= {needed}")
    a = multiplication_operator(f, "sigma3", lattice)
    v = gauge_unitary(chi, lattice, tail_tol)
    pair = build_projectors(lattice)
    p_plus_t, p_minus_t = transformed_projectors(v, pair)
    pp = pair.plus.matrix
    pm = pair.minus.matrix
    t_plus = _real_trace(pp @ a.matrix @ p_minus_t.matrix @ pp, "T+")
    t_minus = _real_trace(pm @ a.matrix @ p_plus_t.matrix @ pm, "T-")
    delta = t_plus - t_minus
    closed = anomaly_closed_form(f, chi)
    return AnomalyReport(lattice.L, lattice.N, f.degree, v.bandwidth,
                         t_plus, t_minus, delta, closed, abs(delta - closed))


def anomaly_closed_form(f, chi):
    """-(1/pi) * integral f(z) dchi/dz dz, exact in coefficient arithmetic."""
    return -integrate_product(f, trig_derivative(chi)) / np.pi


def appendix_double_sum(f, chi, lattice, grid_points=None, swap_projectors=False):
    """Independent evaluation of the plus trace as a smeared double integral.

    The mode sums over the sea and its complement collapse to a kernel
    B(z - z') carrying one factor summed over momenta >= 0 and one over > 0
    (the surface state counted once); the double integral is done by the
    trapezoid rule, spectrally exact for the periodic integrand. With
    `swap_projectors` the roles of the two energy sectors are exchanged,
    which flips the kernel's sign.
    """
    if f.L != lattice.L or chi.L != lattice.L:
        raise ValueError("symbols and lattice circumferences differ")
    _, d_v, _ = periodic_fourier_coefficients(
        lambda z: np.exp(1j * chi(z)), chi.L, 1e-15)
    min_points = 8 * (lattice.N + f.degree + d_v)
    if grid_points is None:
        grid_points = min_points
    if grid_points < min_points:
        raise ValueError(f"grid too coarse for alias-free quadrature; "
                         f"need at least {min_points} points")
    n = lattice.N
    L = lattice.L
    m = int(grid_points)
    z = np.arange(m) * (L / m)
    # multiplicity of total harmonic q in the product of one sum over
    # momenta 0..N and one over 1..N
    q = np.arange(1, 2 * n + 1)
    count = np.minimum(n, q - 1) - np.maximum(0, q - n) + 1
    u = z[:, None] - z[None, :]
    omega = 2.0 * np.pi / L
    b = np.zeros((m, m), dtype=complex)
    for qi, ci in zip(q, count):
        b += ci * (-2j) * np.sin(omega * qi * u)
    if swap_projectors:
        b = -b
    left = f(z) * np.exp(-1j * chi(z))
    right = np.exp(1j * chi(z))
    total = left @ b @ right
    val = complex(total * (1.0 / m) ** 2)
    if abs(val.imag) > TRACE_IMAG_TOL * max(1.0, abs(val)):
        raise RuntimeError(f"double sum has imaginary residue {val.imag:.3e}")
    return val.real


def hs_offdiagonal(v, projectors):
    """Squared Hilbert-Schmidt norms of the particle-hole mixing blocks
    (||P+ V P-||^2, ||P- V P+||^2); both must be finite for the gauge
    unitary to lift to the Fock space."""
    vm = v.operator.matrix
    plus = np.array([m.lam > 0 for m in v.operator.modes])
    upper = vm[np.ix_(plus, ~plus)]
    lower = vm[np.ix_(~plus, plus)]
    return (float(np.sum(np.abs(upper) ** 2)),
            float(np.sum(np.abs(lower) ** 2)))
