"""Real periodic functions on a circle of circumference L, stored as finite
Fourier data.

All integrals and derivatives used elsewhere in the package reduce to exact
coefficient arithmetic on these objects, so no quadrature error enters any
tolerance budget.
"""

import numpy as np

HERMITIAN_ATOL = 1e-14


class TrigPolynomial:
    """Finite Fourier series g(z) = sum_m c_m exp(i 2 pi m z / L).

    Coefficients are stored centered, index m in [-d, d]. A polynomial
    flagged real has exactly Hermitian coefficients (c_{-m} = conj(c_m));
    the flag is auto-detected unless given explicitly.
    """

    __slots__ = ("L", "coeffs", "is_real")

    def __init__(self, L, coeffs, real=None):
        if L <= 0:
            raise ValueError(f"circumference must be positive, got {L}")
        c = np.asarray(coeffs, dtype=complex)
        if c.ndim != 1 or c.size % 2 != 1:
            raise ValueError("coefficients must be a 1-d array of odd length "
                             "(centered index m in [-d, d])")
        hermitian_defect = np.max(np.abs(c - c[::-1].conj())) if c.size else 0.0
        scale = max(np.max(np.abs(c)), 1.0)
        if real is None:
            real = hermitian_defect <= HERMITIAN_ATOL * scale
        elif real and hermitian_defect > HERMITIAN_ATOL * scale:
            raise ValueError(f"coefficients are not Hermitian-symmetric "
                             f"(defect {hermitian_defect:.3e}); cannot flag real")
        if real:
            # make the symmetry exact so downstream coefficient arithmetic
            # (integrals, derivatives) stays exactly real
            c = 0.5 * (c + c[::-1].conj())
        self.L = float(L)
        self.coeffs = c
        self.coeffs.flags.writeable = False
        self.is_real = bool(real)

    @property
    def degree(self):
        return self.coeffs.size // 2

    def coefficient(self, m):
        """Coefficient of exp(i 2 pi m z / L); zero outside the stored band."""
        d = self.degree
        if abs(m) > d:
            return 0.0 + 0.0j
        return complex(self.coeffs[m + d])

    @classmethod
    def zero(cls, L):
        return cls(L, [0.0], real=True)

    @classmethod
    def constant(cls, L, value):
        return cls(L, [value])

    @classmethod
    def from_harmonics(cls, L, terms):
        """Build sum_j amp_j * cos(2 pi m_j z / L + phase_j).

        `terms` is an iterable of (amplitude, harmonic, phase) with integer
        harmonic >= 0. The result is exactly real.
        """
        terms = list(terms)
        d = max((int(m) for _, m, _ in terms), default=0)
        c = np.zeros(2 * d + 1, dtype=complex)
        for amp, m, phase in terms:
            m = int(m)
            if m < 0:
                raise ValueError("harmonic index must be >= 0")
            if not np.isfinite(amp) or not np.isfinite(phase):
                raise ValueError("amplitude and phase must be finite")
            if m == 0:
                c[d] += amp * np.cos(phase)
            else:
                c[d + m] += 0.5 * amp * np.exp(1j * phase)
                c[d - m] += 0.5 * amp * np.exp(-1j * phase)
        return cls(L, c, real=True)

    @classmethod
    def cosine(cls, L, harmonic=1, amplitude=1.0):
        return cls.from_harmonics(L, [(amplitude, harmonic, 0.0)])

    @classmethod
    def sine(cls, L, harmonic=1, amplitude=1.0):
        return cls.from_harmonics(L, [(amplitude, harmonic, -0.5 * np.pi)])

    def __call__(self, z):
        """Evaluate at z (scalar or array); real-flagged polynomials return
        real values."""
        z = np.asarray(z, dtype=float)
        d = self.degree
        m = np.arange(-d, d + 1)
        phases = np.exp(1j * (2.0 * np.pi / self.L) * np.outer(z, m))
        vals = phases @ self.coeffs
        if self.is_real:
            vals = vals.real
        return vals if z.ndim else vals[()]

    def derivative(self):
        """d/dz in coefficient space: c_m -> (i 2 pi m / L) c_m."""
        d = self.degree
        m = np.arange(-d, d + 1)
        return TrigPolynomial(self.L, (1j * 2.0 * np.pi / self.L) * m * self.coeffs,
                              real=self.is_real)

    def product(self, other):
        """Pointwise product as coefficient convolution (exact)."""
        self._check_same_circle(other)
        c = np.convolve(self.coeffs, other.coeffs)
        return TrigPolynomial(self.L, c, real=self.is_real and other.is_real)

    def _check_same_circle(self, other):
        if self.L != other.L:
            raise ValueError(f"circumference mismatch: {self.L} vs {other.L}")

    def __add__(self, other):
        self._check_same_circle(other)
        d = max(self.degree, other.degree)
        c = np.zeros(2 * d + 1, dtype=complex)
        c[d - self.degree:d + self.degree + 1] += self.coeffs
        c[d - other.degree:d + other.degree + 1] += other.coeffs
        return TrigPolynomial(self.L, c, real=self.is_real and other.is_real)

    def __sub__(self, other):
        return self + (-1.0) * other

    def __neg__(self):
        return (-1.0) * self

    def __mul__(self, scalar):
        s = complex(scalar)
        real = self.is_real and s.imag == 0.0
        return TrigPolynomial(self.L, s * self.coeffs, real=real)

    __rmul__ = __mul__

    def __repr__(self):
        return (f"TrigPolynomial(L={self.L!r}, degree={self.degree}, "
                f"real={self.is_real})")


def trig_derivative(g):
    """Derivative of a trigonometric polynomial (exact, realness preserved)."""
    return g.derivative()


def integrate_product(f, g):
    """Integral over one period of f(z) g(z), exact from coefficients.

    Both factors must be real-flagged and live on the same circle; the
    result is L * sum_m f_m g_{-m}, a real number.
    """
    if not (f.is_real and g.is_real):
        raise ValueError("integrate_product requires real-flagged factors")
    f._check_same_circle(g)
    d = min(f.degree, g.degree)
    df, dg = f.degree, g.degree
    # sum_m f_m g_{-m} over the overlapping band
    fm = f.coeffs[df - d:df + d + 1]
    gm = g.coeffs[dg - d:dg + d + 1][::-1]
    return float((f.L * np.sum(fm * gm)).real)


def periodic_fourier_coefficients(func, L, tail_tol=1e-15, max_samples=1 << 16):
    """Fourier coefficients of a smooth L-periodic callable by adaptive FFT.

    Resolution is doubled until every coefficient in the top octave of the
    sampled band falls below `tail_tol` (alias safety). Returns
    (coeffs, bandwidth, tail): centered coefficients for |m| <= bandwidth,
    where every dropped coefficient has magnitude < tail <= tail_tol.

    Raises RuntimeError with the achieved tail bound if the budget
    `max_samples` cannot resolve the requested tail.
    """
    if tail_tol <= 0:
        raise ValueError("tail_tol must be positive")
    M = 256
    while True:
        z = np.arange(M) * (L / M)
        c = np.fft.fft(func(z)) / M
        c = np.fft.fftshift(c)  # index m in [-M/2, M/2)
        m0 = M // 2
        mags = np.abs(c)
        top_octave = np.concatenate([mags[:m0 - M // 4], mags[m0 + M // 4:]])
        if np.all(top_octave < tail_tol):
            break
        if M >= max_samples:
            raise RuntimeError(
                f"could not reach tail tolerance {tail_tol:g} within "
                f"{max_samples} samples; achieved tail {np.max(top_octave):.3e}")
        M *= 2
    above = np.nonzero(mags >= tail_tol)[0]
    if above.size == 0:
        return np.zeros(1, dtype=complex), 0, 0.0
    d = int(max(abs(above - m0)))
    kept = c[m0 - d:m0 + d + 1].copy()
    dropped = np.concatenate([mags[:m0 - d], mags[m0 + d + 1:]])
    tail = float(np.max(dropped)) if dropped.size else 0.0
    return kept, d, tail
