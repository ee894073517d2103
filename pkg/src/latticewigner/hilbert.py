"""Wannier (site) and Bloch (crystal momentum) bases of an N-site lattice.

The two bases are related by the unitary discrete Fourier transform with
kernel

    <q|p_m> = exp(-2j*pi*m*q/N) / sqrt(N),     p_m = 2*pi*hbar*m/N,  hbar = 1.

Note the minus sign in the exponent. Many texts use ``+``; here the sign is
fixed so that ``N = 2`` gives the Hadamard matrix with ``<1|p_1> = -1/sqrt(2)``
(both conventions agree at N = 2, but not for N >= 3).

N must be prime so that site and momentum labels form the field GF(N).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange, NotPrime, WrongBasis
from .finite_field import is_prime

WANNIER = "wannier"
BLOCH = "bloch"
HBAR = 1.0


def check_prime(N: int) -> int:
    if isinstance(N, bool) or int(N) != N or not is_prime(int(N)):
        raise NotPrime(f"lattice size {N!r} is not prime")
    return int(N)


@dataclass(frozen=True)
class MomentumGrid:
    """The N crystal momenta ``2*pi*hbar*m/N`` for ``m = 0 .. N-1``."""

    dim: int

    def __post_init__(self):
        check_prime(self.dim)

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.dim)

    @property
    def values(self) -> np.ndarray:
        return 2 * np.pi * HBAR * self.indices / self.dim

    def __len__(self):
        return self.dim


@dataclass(frozen=True, eq=False)
class StateVector:
    """Amplitudes of a pure state in either the Wannier or the Bloch basis.

    Normalization is not enforced; use :meth:`is_normalized` to check it.
    """

    amplitudes: np.ndarray
    basis: str = WANNIER

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 1:
            raise DimensionMismatch(f"amplitudes must be one-dimensional, got {amps.shape}")
        check_prime(amps.size)
        if self.basis not in (WANNIER, BLOCH):
            raise WrongBasis(f"unknown basis tag {self.basis!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        return self.amplitudes.size

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def is_normalized(self, atol: float = 1e-12) -> bool:
        return abs(np.vdot(self.amplitudes, self.amplitudes).real - 1.0) < atol

    def density_matrix(self) -> np.ndarray:
        """``|psi><psi|`` in the basis the amplitudes are expressed in."""
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.amplitudes, dtype=dtype)


def basis_state(index: int, N: int, basis: str = WANNIER) -> StateVector:
    """``|q>`` (Wannier) or ``|p_m>`` (Bloch) as a unit vector in its own basis."""
    N = check_prime(N)
    if not 0 <= index < N:
        raise IndexOutOfRange(f"index {index} outside 0..{N - 1}")
    amps = np.zeros(N, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(amps, basis)


def dft_kernel(q: int, m: int, N: int) -> complex:
    """Transformation function ``<q|p_m>``."""
    N = check_prime(N)
    if not (0 <= q < N and 0 <= m < N):
        raise IndexOutOfRange(f"(q={q}, m={m}) outside 0..{N - 1}")
    p_m = 2 * np.pi * HBAR * m / N
    return complex(np.exp(-1j * p_m * q / HBAR) / np.sqrt(N))


@lru_cache(maxsize=None)
def _dft(N: int) -> np.ndarray:
    # direct evaluation; exponent reduced mod N before scaling keeps phases exact
    q = np.arange(N)
    phase = np.outer(q, q) % N
    F = np.exp(-2j * np.pi * phase / N) / np.sqrt(N)
    F.setflags(write=False)
    return F


def dft_matrix(N: int) -> np.ndarray:
    """Matrix ``F[q, m] = <q|p_m>``; column ``m`` is the Bloch state ``|p_m>``.

    The returned array is a fresh writable copy.
    """
    return _dft(check_prime(N)).copy()


def to_bloch(psi: StateVector) -> StateVector:
    """Bloch amplitudes ``<p_m|psi> = (F^dagger psi)_m``."""
    if psi.basis != WANNIER:
        raise WrongBasis("to_bloch expects a state in the Wannier basis")
    F = _dft(psi.dim)
    return StateVector(F.conj().T @ psi.amplitudes, BLOCH)


def to_wannier(phi: StateVector) -> StateVector:
    """Site amplitudes ``psi_q = sum_m <q|p_m> phi_m``."""
    if phi.basis != BLOCH:
        raise WrongBasis("to_wannier expects a state in the Bloch basis")
    F = _dft(phi.dim)
    return StateVector(F @ phi.amplitudes, WANNIER)


def unitarity_residual(U: np.ndarray) -> float:
    """``max |U U^dagger - I|``."""
    U = np.asarray(U)
    return float(np.max(np.abs(U @ U.conj().T - np.eye(U.shape[0]))))
