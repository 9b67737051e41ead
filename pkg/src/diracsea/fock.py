"""Exact second quantization on small mode subsets.

Jordan-Wigner ladder operators give particle (b, positive energy) and
antiparticle (d, negative energy) operators that satisfy the canonical
anticommutation relations as exact matrix identities. The charge bilinear,
the lifted gauge unitary, and the conjugation identity

    Gamma Q(A) Gamma' = Q(U A U') + Delta(A) * 1

are then finite-dimensional statements verifiable to floating-point
accuracy, with the anomaly Delta(A) emerging as the normal-ordering
mismatch between the bilinear and its conjugate.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import sparse
from scipy.linalg import eigh, logm, svd

from .blockop import BlockOperator

MAX_MODES = 12


@lru_cache(maxsize=None)
def _jordan_wigner(nmodes):
    """Annihilation matrices for nmodes fermionic modes, mode 0 on the least
    significant occupation bit, parity strings across earlier modes."""
    lower = sparse.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]]))
    z = sparse.csr_matrix(np.diag([1.0, -1.0]))
    eye2 = sparse.identity(2, format="csr")
    ops = []
    for i in range(nmodes):
        op = sparse.identity(1, format="csr")
        for j in range(nmodes - 1, -1, -1):  # mode n-1 first: mode 0 is LSB
            if j > i:
                factor = eye2
            elif j == i:
                factor = lower
            else:
                factor = z
            op = sparse.kron(op, factor, format="csr")
        ops.append(sparse.csr_matrix(op, dtype=complex))
    return tuple(ops)


@dataclass(frozen=True)
class FockSpace:
    """Occupation-number representation over an ordered mode subset."""

    modes: tuple
    lowering: tuple  # JW annihilators, aligned with `modes`

    @property
    def dim(self):
        return 1 << len(self.modes)

    @property
    def n_plus(self):
        return sum(1 for m in self.modes if m.lam > 0)

    @property
    def n_minus(self):
        return sum(1 for m in self.modes if m.lam < 0)

    @property
    def vacuum(self):
        v = np.zeros(self.dim, dtype=complex)
        v[0] = 1.0
        return v

    def b(self, k):
        """k-th particle annihilator (over positive-energy modes in order)."""
        return self.lowering[self._sector_index(+1, k)]

    def d(self, k):
        """k-th antiparticle annihilator (over negative-energy modes)."""
        return self.lowering[self._sector_index(-1, k)]

    def _sector_index(self, sign, k):
        idx = [i for i, m in enumerate(self.modes) if m.lam == sign]
        return idx[k]

    def field_mode(self, i):
        """Annihilation part of the field at mode i: b there for particles,
        d-dagger for the sea (the field creates holes in it)."""
        a = self.lowering[i]
        return a if self.modes[i].lam > 0 else a.conj().T.tocsr()

    def field(self, f):
        """Smeared field psi(f) = sum_i conj(f_i) alpha_i (antilinear)."""
        f = np.asarray(f, dtype=complex)
        out = sparse.csr_matrix((self.dim, self.dim), dtype=complex)
        for i, fi in enumerate(f):
            if fi != 0.0:
                out = out + np.conj(fi) * self.field_mode(i)
        return out

    def bilinear(self, matrix):
        """sum_ij alpha_i' M_ij alpha_j as a dense matrix (not normal
        ordered)."""
        matrix = np.asarray(matrix, dtype=complex)
        n = len(self.modes)
        if matrix.shape != (n, n):
            raise ValueError("matrix does not match the mode subset")
        out = sparse.csr_matrix((self.dim, self.dim), dtype=complex)
        for i in range(n):
            ai_dag = self.field_mode(i).conj().T.tocsr()
            for j in range(n):
                if matrix[i, j] != 0.0:
                    out = out + matrix[i, j] * (ai_dag @ self.field_mode(j))
        return out.toarray()


def build_fock(modes):
    """Fock space over the given modes (graded sign convention fixed by the
    list order); at most 12 modes."""
    modes = tuple(modes)
    if not 1 <= len(modes) <= MAX_MODES:
        raise ValueError(f"mode subset must have 1..{MAX_MODES} modes, "
                         f"got {len(modes)}")
    if len(set(modes)) != len(modes):
        raise ValueError("duplicate modes in subset")
    return FockSpace(modes, _jordan_wigner(len(modes)))


def mode_window(lattice, r_max, include_surface=False):
    """Modes with 1 <= |r| <= r_max (both energy signs), in lattice order;
    optionally with the two surface states."""
    picked = [m for m in lattice.operator_modes
              if (1 <= abs(m.r) <= r_max) or (include_surface and m.r == 0)]
    return tuple(picked)


def restrict_operator(op, modes):
    """Submatrix of a block operator over a mode subset."""
    idx = []
    for m in modes:
        try:
            idx.append(op.modes.index(m))
        except ValueError:
            raise ValueError(f"mode {m} is outside the operator's basis")
    sub = op.matrix[np.ix_(idx, idx)].copy()
    return BlockOperator(tuple(modes), sub, hermitian=False)


def charge_operator(a, fock):
    """Normal-ordered charge bilinear Q(A) = dGamma(A) - Tr(A^--) * 1.

    A must already be restricted to the subset; the subtraction makes the
    vacuum expectation vanish exactly.
    """
    if tuple(a.modes) != tuple(fock.modes):
        raise ValueError("operator support does not match the Fock space")
    sea_trace = complex(np.trace(a.mm))
    q = fock.bilinear(a.matrix)
    q -= sea_trace * np.eye(fock.dim)
    return q


@dataclass(frozen=True)
class LiftedUnitary:
    """Fock-space implementation of a single-particle unitary.

    The subset restriction of V is snapped to the closest unitary U (polar
    decomposition), K = -i log U with eigenphases in (-pi, pi], and
    Gamma = exp(i * bilinear(K)). Gamma's overall phase is not normalized;
    nothing downstream depends on it.
    """

    fock: FockSpace
    u: np.ndarray
    k: np.ndarray
    gamma: np.ndarray
    pre_polar_defect: float


def lift_unitary(v, fock, max_defect=0.1):
    """Lift a gauge unitary (or any block operator) to the Fock space.

    The pre-polar defect is the operator-norm distance from the restriction
    to the unitary it snaps to (max |sigma_i - 1| over singular values);
    beyond `max_defect` the subset is too small to contain the operator's
    action and the restriction is rejected.
    """
    op = v.operator if hasattr(v, "operator") else v
    sub = restrict_operator(op, fock.modes).matrix
    w, sigmas, vh = svd(sub)
    defect = float(np.max(np.abs(sigmas - 1.0)))
    if defect > max_defect:
        raise ValueError(f"restriction is too far from unitary "
                         f"(defect {defect:.3f} > {max_defect}); enlarge the "
                         f"mode subset")
    u = w @ vh  # closest unitary in Frobenius norm
    k = logm(u) / 1j
    k = 0.5 * (k + k.conj().T)
    lam = fock.bilinear(k)
    lam = 0.5 * (lam + lam.conj().T)
    w, vecs = eigh(lam)
    gamma = (vecs * np.exp(1j * w)) @ vecs.conj().T
    return LiftedUnitary(fock, u, k, gamma, defect)


def field_transformation_residual(lifted):
    """max_i || Gamma psi(e_i) Gamma' - psi(U e_i) ||: how exactly Gamma
    implements U on the field operators."""
    fock = lifted.fock
    gamma = lifted.gamma
    worst = 0.0
    for i in range(len(fock.modes)):
        e = np.zeros(len(fock.modes), dtype=complex)
        e[i] = 1.0
        lhs = gamma @ fock.field(e).toarray() @ gamma.conj().T
        rhs = fock.field(lifted.u @ e).toarray()
        worst = max(worst, float(np.linalg.norm(lhs - rhs, 2)))
    return worst


def finite_delta(a, u, fock):
    """Two-trace anomaly on the subset: Tr(P+ A P-' P+) - Tr(P- A P+' P-)
    with P-+' the U-conjugated projectors.

    Cross-checked against the algebraic simplification
    Tr(A (P-' - P-)), an identity whenever U is exactly unitary.
    """
    a_mat = a.matrix if isinstance(a, BlockOperator) else np.asarray(a)
    modes = a.modes if isinstance(a, BlockOperator) else fock.modes
    lam = np.array([m.lam for m in modes], dtype=float)
    p_plus = np.diag((lam > 0).astype(complex))
    p_minus = np.diag((lam < 0).astype(complex))
    p_minus_t = u.conj().T @ p_minus @ u
    p_plus_t = u.conj().T @ p_plus @ u
    val = complex(np.trace(p_plus @ a_mat @ p_minus_t @ p_plus)
                  - np.trace(p_minus @ a_mat @ p_plus_t @ p_minus))
    simplified = complex(np.trace(a_mat @ (p_minus_t - p_minus)))
    scale = max(1.0, abs(val))
    if abs(val - simplified) > 1e-12 * scale:
        raise RuntimeError(f"trace simplification mismatch: {val} vs "
                           f"{simplified}")
    return val.real


@dataclass(frozen=True)
class IdentityResidual:
    """Operator-norm residual of the conjugation identity on one subset."""

    n_plus: int
    n_minus: int
    dim: int
    residual: float
    delta: float
    closing_scalar: float
    pre_polar_defect: float


def conjugation_identity_check(a, v, fock, max_defect=0.1):
    """Verify Gamma Q(A) Gamma' = Q(U A U') + Delta(A) * 1 on the subset.

    Returns the operator-norm residual together with the scalar actually
    needed to close the identity (the trace of the leftover, divided by the
    dimension), which must match the two-trace Delta.
    """
    lifted = lift_unitary(v, fock, max_defect)
    a_sub = restrict_operator(a, fock.modes) if isinstance(a, BlockOperator) \
        else a
    if tuple(a_sub.modes) != tuple(fock.modes):
        a_sub = restrict_operator(a_sub, fock.modes)
    q_a = charge_operator(a_sub, fock)
    u = lifted.u
    conjugated = BlockOperator(fock.modes, u @ a_sub.matrix @ u.conj().T)
    q_conj = charge_operator(conjugated, fock)
    delta = finite_delta(a_sub, u, fock)
    lhs = lifted.gamma @ q_a @ lifted.gamma.conj().T
    leftover = lhs - q_conj
    closing = complex(np.trace(leftover)) / fock.dim
    residual = float(np.linalg.norm(leftover - delta * np.eye(fock.dim), 2))
    return IdentityResidual(fock.n_plus, fock.n_minus, fock.dim,
                            residual, delta, closing.real,
                            lifted.pre_polar_defect)
