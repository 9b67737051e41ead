"""Momentum-space discretization of the circle for massless two-component
fermions.

Modes are labeled by an energy sign lam and an integer momentum index r
(momentum p = 2 pi r / L, energy lam * |p|). Each (lam, r) with r != 0 is
simultaneously a chirality eigenstate with s = lam * sign(r): the upper
spinor component moves right, the lower moves left.

The two p = 0 states have zero energy and sit exactly on the boundary
between the filled sea and the empty positive-energy states. The lattice
proper enumerates only r != 0, but every operator in this package is
assembled on the completed basis that carries the two surface states as
members of the sea (lam = -1). Dropping them instead leaves an O(1) hole in
every trace that localizes at the surface, and even breaks commutativity of
multiplication operators away from the cutoff edge.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Mode:
    """Single-particle basis label: energy sign, momentum index, chirality."""

    lam: int
    r: int
    s: int

    def __post_init__(self):
        if self.lam not in (-1, 1) or self.s not in (-1, 1):
            raise ValueError("lam and s must be +1 or -1")
        if self.r != 0:
            expected = self.lam * (1 if self.r > 0 else -1)
            if self.s != expected:
                raise ValueError(f"chirality of (lam={self.lam}, r={self.r}) "
                                 f"is {expected}, got {self.s}")
        elif self.lam != -1:
            raise ValueError("the zero-momentum states are kept in the sea "
                             "(lam = -1)")

    @classmethod
    def free(cls, lam, r):
        """Mode with nonzero momentum; chirality is determined by (lam, r)."""
        if r == 0:
            raise ValueError("r = 0 has no energy sign; use Mode.surface")
        return cls(lam, r, lam * (1 if r > 0 else -1))

    @classmethod
    def surface(cls, s):
        """Zero-momentum state of chirality s, assigned to the sea."""
        return cls(-1, 0, s)


def _mode_sort_key(mode):
    # |energy| ascending, then momentum index, then energy sign, then
    # chirality (only the surface pair needs the last tiebreak)
    return (abs(mode.r), mode.r, mode.lam, mode.s)


@dataclass(frozen=True)
class MomentumLattice:
    """Circle of circumference L truncated at momentum index |r| <= N.

    `modes` enumerates the 4N nonzero-momentum states in a fixed order;
    `operator_modes` appends the two surface states and is the basis on
    which all matrices act.
    """

    L: float
    N: int
    modes: tuple
    operator_modes: tuple

    @property
    def dim(self):
        return len(self.modes)

    @property
    def operator_dim(self):
        return len(self.operator_modes)

    def momentum(self, mode):
        return 2.0 * np.pi * mode.r / self.L

    def energy(self, mode):
        return mode.lam * abs(self.momentum(mode))

    def momenta(self):
        """Distinct nonzero momenta, ascending."""
        return np.array(sorted(2.0 * np.pi * r / self.L
                               for r in range(-self.N, self.N + 1) if r != 0))

    def index(self, mode):
        return self.modes.index(mode)

    def default_grid_points(self):
        # 4x Nyquist for the represented band
        return 4 * (2 * self.N + 1)

    def grid(self, points=None):
        m = points if points is not None else self.default_grid_points()
        return np.arange(m) * (self.L / m)


def make_lattice(L, N):
    """Build the truncated mode set; momenta come in +- pairs, no r = 0."""
    if L <= 0:
        raise ValueError(f"circumference must be positive, got {L}")
    if not isinstance(N, (int, np.integer)) or N < 1:
        raise ValueError(f"cutoff must be a positive integer, got {N}")
    free = [Mode.free(lam, r)
            for r in range(-N, N + 1) if r != 0
            for lam in (-1, 1)]
    free.sort(key=_mode_sort_key)
    surface = sorted((Mode.surface(-1), Mode.surface(1)), key=_mode_sort_key)
    operator = sorted(surface + free, key=_mode_sort_key)
    return MomentumLattice(float(L), int(N), tuple(free), tuple(operator))
