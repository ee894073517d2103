"""Phase-space point operators, the lattice Weyl transform and Wigner functions.

The phase space of an N-site lattice (N prime) is the grid GF(N) x GF(N) of
points ``(q, p)``: ``q`` is a site index and ``p`` a Bloch momentum index.
To every point belongs a Hermitian, unit-trace operator ``A(q, p)`` with

    Tr[A(q, p) A(q', p')] = N * delta_qq' * delta_pp'.

The N**2 point operators form an orthogonal operator basis, so any N x N
operator expands as ``O = sum_{q,p} o(q, p) A(q, p)`` with
``o(q, p) = Tr[O A(q, p)] / N``. For a density operator the coefficient
table is the Wigner function: it is real, sums to one, and its row and
column sums are the position and momentum distributions.

Construction. For odd N the point operators are displaced parities,
``A(q, p) = T Pi T^dagger`` with ``Pi|x> = |-x>`` and ``T = D(q, -p)``.
The momentum argument enters with a minus sign because ``Z`` lowers the
Bloch index (see :mod:`latticewigner.weyl`). For N = 2 the parity is the
identity and the line-based qubit construction is used instead,
``A(q, p) = (I + (-1)**q Z + (-1)**p X + (-1)**(q+p) Y) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, ModulusMismatch, NonHermitianInput, WrongBasis
from .finite_field import FieldElement, make_field
from .hilbert import WANNIER, StateVector, check_prime
from .weyl import displacement_operator

HERMITIAN_ATOL = 1e-10

_PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


@dataclass(frozen=True)
class PhasePoint:
    q: FieldElement
    p: FieldElement

    def __post_init__(self):
        if self.q.p != self.p.p:
            raise ModulusMismatch("q and p must belong to the same field")

    @classmethod
    def create(cls, q: int, p: int, N: int) -> PhasePoint:
        F = make_field(N)
        return cls(F(q), F(p))

    @property
    def dim(self) -> int:
        return self.q.p


def parity_operator(N: int) -> np.ndarray:
    N = check_prime(N)
    P = np.zeros((N, N), dtype=np.complex128)
    x = np.arange(N)
    P[(-x) % N, x] = 1.0
    return P


def phase_space_translation(a: int, m: int, N: int) -> np.ndarray:
    """Unitary moving every phase-space point by ``(a, m)``.

    Conjugating a state with it translates its Wigner function:
    ``W'(q, p) = W(q - a, p - m)``. This is ``D(a, -m)``.
    """
    return displacement_operator(a, -m, N)


def _point_matrix(q: int, p: int, N: int) -> np.ndarray:
    if N == 2:
        sq, sp = (-1) ** q, (-1) ** p
        return 0.5 * (np.eye(2) + sq * _PAULI_Z + sp * _PAULI_X + sq * sp * _PAULI_Y)
    T = phase_space_translation(q, p, N)
    return T @ parity_operator(N) @ T.conj().T


def point_operator(point: PhasePoint) -> np.ndarray:
    return _point_matrix(point.q.value, point.p.value, point.dim)


@lru_cache(maxsize=32)
def _all_points(N: int) -> np.ndarray:
    A = np.empty((N, N, N, N), dtype=np.complex128)
    for q in range(N):
        for p in range(N):
            A[q, p] = _point_matrix(q, p, N)
    A.setflags(write=False)
    return A


def point_operators(N: int) -> np.ndarray:
    """All point operators as a read-only array indexed ``[q, p, row, col]``."""
    return _all_points(check_prime(N))


def _as_operator(obj) -> np.ndarray:
    if isinstance(obj, StateVector):
        if obj.basis != WANNIER:
            raise WrongBasis("states must be given in the Wannier basis")
        return obj.density_matrix()
    O = np.asarray(obj, dtype=np.complex128)
    if O.ndim != 2 or O.shape[0] != O.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {O.shape}")
    check_prime(O.shape[0])
    return O


def weyl_expand(operator) -> np.ndarray:
    """Expansion coefficients ``o(q, p) = Tr[O A(q, p)] / N`` (complex)."""
    O = _as_operator(operator)
    N = O.shape[0]
    # Tr[O A] = sum_ij O_ij A_ji
    return np.einsum("ij,qpji->qp", O, point_operators(N)) / N


def reconstruct(coeffs) -> np.ndarray:
    """Inverse of :func:`weyl_expand`: ``sum_{q,p} o(q, p) A(q, p)``."""
    c = np.asarray(coeffs)
    if c.ndim != 2 or c.shape[0] != c.shape[1]:
        raise DimensionMismatch(f"coefficient table must be square, got {c.shape}")
    return np.einsum("qp,qpij->ij", c, point_operators(c.shape[0]))


def wigner_transform(rho) -> np.ndarray:
    """Real Wigner table ``W[q, p] = Tr[rho A(q, p)] / N``.

    ``rho`` may be a Hermitian matrix or a Wannier-basis :class:`StateVector`.
    """
    rho = _as_operator(rho)
    scale = max(1.0, float(np.max(np.abs(rho))))
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_ATOL * scale:
        raise NonHermitianInput("Wigner transform requires a Hermitian operator")
    return weyl_expand(rho).real


def marginals(W) -> tuple[np.ndarray, np.ndarray]:
    """Position distribution ``sum_p W[q, p]`` and momentum distribution ``sum_q W[q, p]``."""
    W = np.asarray(W)
    return W.sum(axis=1), W.sum(axis=0)
