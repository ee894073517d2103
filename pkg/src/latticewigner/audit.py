"""Discrete versus continuous momentum: a numerical bijectivity audit.

On an N-site lattice with N crystal momenta the Fourier map is unitary,
hence bijective (:func:`discrete_bijectivity_report`).

If instead the lattice sites are paired with a continuous momentum variable
``k`` in ``[0, 2*pi)``, a site amplitude is recovered from a momentum
function ``g`` by

    psi_q = (1/2pi) * integral_0^{2pi} g(k) exp(i k q) dk,    q = 0 .. N-1.

This map is not injective: every plane wave ``exp(-i m k)`` with ``m >= N``
restricts to the zero vector, so distinct momentum functions become
indistinguishable on the lattice. :func:`aliasing_witness` exhibits such
pairs explicitly.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable

import numpy as np

from .errors import BadModeIndex, InsufficientQuadrature
from .hilbert import StateVector, check_prime, dft_matrix

LATTICE_TOL = 1e-10
FUNCTION_TOL = 1e-3
NON_INJECTIVE = "NON_INJECTIVE"
DISTINGUISHED = "DISTINGUISHED"


@dataclass(frozen=True)
class ContinuumMomentumFunction:
    """A complex function of continuous momentum ``k`` on ``[0, 2*pi)``."""

    sampler: Callable[[np.ndarray], np.ndarray]
    label: str = ""

    def __call__(self, k):
        k = np.asarray(k, dtype=float)
        return np.broadcast_to(np.asarray(self.sampler(k), dtype=np.complex128), k.shape)


def plane_wave(m: int) -> ContinuumMomentumFunction:
    return ContinuumMomentumFunction(lambda k: np.exp(-1j * m * k), f"exp(-{m}ik)")


ZERO = ContinuumMomentumFunction(lambda k: np.zeros_like(k, dtype=np.complex128), "0")


def quadrature_nodes(M: int) -> np.ndarray:
    """``M`` uniform nodes of the periodic trapezoid rule on ``[0, 2*pi)``."""
    return 2 * np.pi * np.arange(M) / M


def default_quadrature(N: int) -> int:
    return 8 * N + 1


def restrict_to_lattice(g: ContinuumMomentumFunction, N: int, M: int | None = None) -> StateVector:
    """Site amplitudes of ``g`` by the ``M``-point trapezoid rule.

    The rule is exact for trigonometric polynomials of degree below ``M/2``.
    The result is generally not normalized.
    """
    N = check_prime(N)
    M = default_quadrature(N) if M is None else int(M)
    if M < 4 * N + 1:
        raise InsufficientQuadrature(f"need at least {4 * N + 1} nodes for N={N}, got {M}")
    k = quadrature_nodes(M)
    q = np.arange(N)
    return StateVector(np.exp(1j * np.outer(q, k)) @ g(k) / M)


def l2_distance(g1: ContinuumMomentumFunction, g2: ContinuumMomentumFunction, M: int) -> float:
    """``sqrt((1/2pi) integral |g1 - g2|^2 dk)`` by the trapezoid rule."""
    k = quadrature_nodes(M)
    return float(np.sqrt(np.mean(np.abs(g1(k) - g2(k)) ** 2)))


@dataclass(frozen=True)
class AuditReport:
    N: int
    mode: int
    partner: str
    quadrature_points: int
    lattice_distance: float
    function_distance: float
    verdict: str

    def to_dict(self) -> dict:
        return asdict(self)


def aliasing_witness(N: int, m: int, M: int | None = None) -> AuditReport:
    """Compare the plane wave ``exp(-i m k)`` with its aliased partner.

    The partner is ``exp(-i (m mod N) k)`` or, when ``N`` divides ``m``, the
    zero function. The verdict is ``NON_INJECTIVE`` when the two functions
    differ in L2 (> 1e-3) yet restrict to the same site amplitudes (< 1e-10).
    """
    N = check_prime(N)
    if isinstance(m, bool) or int(m) != m or m < N:
        raise BadModeIndex(f"mode {m!r} must be an integer >= N={N}")
    m = int(m)
    r = m % N
    partner = ZERO if r == 0 else plane_wave(r)
    g = plane_wave(m)
    # nodes must resolve mode m itself, not just the site range
    if M is None:
        M = 8 * max(N, m) + 1
    psi1 = restrict_to_lattice(g, N, M).amplitudes
    psi2 = restrict_to_lattice(partner, N, M).amplitudes
    lattice_distance = float(np.max(np.abs(psi1 - psi2)))
    function_distance = l2_distance(g, partner, M)
    injective_here = lattice_distance >= LATTICE_TOL or function_distance <= FUNCTION_TOL
    return AuditReport(
        N=N,
        mode=m,
        partner=partner.label,
        quadrature_points=M,
        lattice_distance=lattice_distance,
        function_distance=function_distance,
        verdict=DISTINGUISHED if injective_here else NON_INJECTIVE,
    )


@dataclass(frozen=True)
class BijectivityReport:
    N: int
    condition_number: float
    inverse_residual: float
    unitarity_residual: float

    def to_dict(self) -> dict:
        return asdict(self)


def discrete_bijectivity_report(N: int) -> BijectivityReport:
    """Certify that the N-point Fourier matrix is invertible with ``F^-1 = F^dagger``."""
    F = dft_matrix(N)
    Fh = F.conj().T
    return BijectivityReport(
        N=F.shape[0],
        condition_number=float(np.linalg.cond(F)),
        inverse_residual=float(np.max(np.abs(np.linalg.inv(F) - Fh))),
        unitarity_residual=float(np.max(np.abs(F @ Fh - np.eye(F.shape[0])))),
    )
