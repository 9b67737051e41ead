"""One-particle spinor wavefunctions on the circle.

A state is held as coefficients over the lattice's free modes and/or as
two-component samples on a uniform grid. Free eigenmodes are chirality
eigenvectors: the mode (lam, r) has its single nonzero component
exp(i p z) / sqrt(L) in the upper (s = +1) or lower (s = -1) slot.
"""

from dataclasses import dataclass

import numpy as np

from .lattice import Mode, MomentumLattice


@dataclass(frozen=True)
class SpinorState:
    """Wavefunction with a coefficient and/or grid representation.

    `samples` has shape (M, 2): column 0 the upper component on the uniform
    grid z_k = k L / M, column 1 the lower. Grid-only states (e.g. after a
    pointwise gauge phase) carry coeffs=None.
    """

    lattice: MomentumLattice
    coeffs: np.ndarray | None
    samples: np.ndarray | None = None

    def __post_init__(self):
        if self.coeffs is None and self.samples is None:
            raise ValueError("state needs at least one representation")
        if self.coeffs is not None and len(self.coeffs) != self.lattice.dim:
            raise ValueError("coefficient vector does not match the lattice")

    def norm(self):
        if self.coeffs is not None:
            return float(np.linalg.norm(self.coeffs))
        return self.grid_norm()

    def grid_norm(self):
        if self.samples is None:
            return self.with_grid().grid_norm()
        m = self.samples.shape[0]
        return float(np.sqrt(self.lattice.L / m
                             * np.sum(np.abs(self.samples) ** 2)))

    def with_grid(self, points=None):
        """Return a copy carrying grid samples (synthesized from coefficients
        if absent)."""
        if self.samples is not None and points is None:
            return self
        if self.coeffs is None:
            raise ValueError("grid-only state cannot be resampled")
        z = self.lattice.grid(points)
        samples = _synthesize(self.lattice, self.coeffs, z)
        return SpinorState(self.lattice, self.coeffs, samples)

    def grid_points(self):
        if self.samples is None:
            raise ValueError("state has no grid samples")
        return self.lattice.grid(self.samples.shape[0])


def _synthesize(lattice, coeffs, z):
    samples = np.zeros((len(z), 2), dtype=complex)
    root_l = np.sqrt(lattice.L)
    for mode, c in zip(lattice.modes, coeffs):
        if c == 0.0:
            continue
        comp = 0 if mode.s > 0 else 1
        samples[:, comp] += (c / root_l) * np.exp(1j * lattice.momentum(mode) * z)
    return samples


def from_coefficients(lattice, coeffs):
    c = np.asarray(coeffs, dtype=complex)
    return SpinorState(lattice, c)


def free_mode(lam, r, lattice):
    """Unit-coefficient eigenmode of the free Hamiltonian.

    Grid form: the chirality-eigenvector spinor exp(i p z) / sqrt(L) in the
    component selected by s = lam * sign(r). r = 0 is rejected (no energy
    sign there).
    """
    if r == 0:
        raise ValueError("r = 0 does not label a free mode")
    mode = Mode.free(lam, r)
    coeffs = np.zeros(lattice.dim, dtype=complex)
    coeffs[lattice.index(mode)] = 1.0
    return SpinorState(lattice, coeffs).with_grid()


def mode_overlap(a, b):
    """L^2 inner product <a, b> from grid samples (trapezoid quadrature,
    exact for band-limited integrands on the uniform grid)."""
    if (a.lattice.L, a.lattice.N) != (b.lattice.L, b.lattice.N):
        raise ValueError("states live on different lattices")
    ag = a.with_grid()
    bg = b.with_grid()
    if ag.samples.shape != bg.samples.shape:
        raise ValueError("grid resolutions differ")
    m = ag.samples.shape[0]
    return complex(a.lattice.L / m
                   * np.sum(ag.samples.conj() * bg.samples))
