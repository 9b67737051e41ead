"""Dense operators over the mode basis with energy-sign block views.

A multiplication operator by a trigonometric polynomial g is banded in the
momentum index (entries g_{r-r'}) and diagonal in chirality; an optional
sigma3 weight multiplies each chirality sector by its sign. Matrices are
assembled on the completed basis (surface states included) so that products
of band operators compose exactly away from the cutoff edge.
"""

from dataclasses import dataclass

import numpy as np

from .lattice import MomentumLattice

HERMITIAN_TOL = 1e-13


@dataclass(frozen=True)
class BlockOperator:
    """Complex matrix over an ordered mode basis.

    Blocks partition rows/columns by the energy sign lam; `pp` couples
    positive-energy modes to positive-energy modes, `pm` positive to
    negative, and so on.
    """

    modes: tuple
    matrix: np.ndarray
    hermitian: bool = False

    def __post_init__(self):
        n = len(self.modes)
        if self.matrix.shape != (n, n):
            raise ValueError("matrix shape does not match the mode basis")
        if self.hermitian:
            defect = np.max(np.abs(self.matrix - self.matrix.conj().T))
            if defect > HERMITIAN_TOL * max(1.0, np.max(np.abs(self.matrix))):
                raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
        self.matrix.flags.writeable = False

    @property
    def dim(self):
        return len(self.modes)

    def _mask(self, sign):
        return np.array([m.lam == sign for m in self.modes])

    def block(self, row_sign, col_sign):
        """Submatrix between energy-sign sectors; signs are +1 or -1."""
        rows = self._mask(row_sign)
        cols = self._mask(col_sign)
        return self.matrix[np.ix_(rows, cols)]

    @property
    def pp(self):
        return self.block(+1, +1)

    @property
    def pm(self):
        return self.block(+1, -1)

    @property
    def mp(self):
        return self.block(-1, +1)

    @property
    def mm(self):
        return self.block(-1, -1)

    def dagger(self):
        return BlockOperator(self.modes, self.matrix.conj().T.copy(),
                             hermitian=self.hermitian)

    def __matmul__(self, other):
        if self.modes != other.modes:
            raise ValueError("operators act on different bases")
        return BlockOperator(self.modes, self.matrix @ other.matrix)


def identity_operator(modes):
    return BlockOperator(tuple(modes), np.eye(len(modes), dtype=complex),
                         hermitian=True)


def _assemble_multiplication(coeffs, weight, modes):
    """Matrix of multiplication by sum_m c_m exp(i 2 pi m z / L) on `modes`.

    Entry (i, j) is delta_{s_i s_j} w(s_i) c_{r_i - r_j}, identically zero
    beyond the band |r_i - r_j| <= d.
    """
    c = np.asarray(coeffs, dtype=complex)
    d = c.size // 2
    r = np.array([m.r for m in modes])
    s = np.array([m.s for m in modes])
    offset = r[:, None] - r[None, :]
    inband = np.abs(offset) <= d
    mat = np.zeros((len(modes), len(modes)), dtype=complex)
    mat[inband] = c[offset[inband] + d]
    mat *= (s[:, None] == s[None, :])
    if weight == "sigma3":
        mat *= s[:, None]
    elif weight != "identity":
        raise ValueError(f"unknown weight {weight!r}")
    return mat


def multiplication_operator(g, weight, lattice):
    """Block matrix of the operator (g) or (sigma3 g) on the completed basis.

    g must be real-flagged and fit inside the momentum window (N >= degree).
    Both weights give Hermitian matrices.
    """
    if not g.is_real:
        raise ValueError("multiplication operator requires a real-valued symbol")
    if isinstance(lattice, MomentumLattice):
        if lattice.N < g.degree:
            raise ValueError(f"cutoff N={lattice.N} is below the symbol "
                             f"degree {g.degree}")
        modes = lattice.operator_modes
    else:
        modes = tuple(lattice)
    mat = _assemble_multiplication(g.coeffs, weight, modes)
    return BlockOperator(modes, mat, hermitian=True)
