"""Generalized Pauli (shift and clock) and displacement operators.

``X|q> = |q+1 mod N>`` and ``Z = diag(w**q)`` with ``w = exp(2j*pi/N)``
satisfy ``Z X = w X Z``. For N = 2 they are the Pauli matrices.

With the Fourier sign used in :mod:`latticewigner.hilbert`, the Bloch states
diagonalize translations, ``F^dagger X F = Z``, and ``Z`` lowers the Bloch
index: ``Z|p_m> = |p_{m-1}>``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ModulusMismatch
from .finite_field import FieldElement, half, make_field
from .hilbert import check_prime


def omega(N: int) -> complex:
    return complex(np.exp(2j * np.pi / N))


def _root_powers(N: int, exponents) -> np.ndarray:
    # w**k evaluated with k reduced mod N so that phases do not drift for large k
    k = np.mod(exponents, N)
    return np.exp(2j * np.pi * k / N)


@lru_cache(maxsize=None)
def _shift(N: int) -> np.ndarray:
    X = np.roll(np.eye(N, dtype=np.complex128), 1, axis=0)
    X.setflags(write=False)
    return X


@lru_cache(maxsize=None)
def _clock(N: int) -> np.ndarray:
    Z = np.diag(_root_powers(N, np.arange(N)))
    if N == 2:
        Z = np.diag([1.0, -1.0]).astype(np.complex128)
    Z.setflags(write=False)
    return Z


def shift_operator(N: int) -> np.ndarray:
    return _shift(check_prime(N)).copy()


def clock_operator(N: int) -> np.ndarray:
    return _clock(check_prime(N)).copy()


@dataclass(frozen=True)
class DisplacementLabel:
    """Position shift ``a`` and momentum shift ``b`` in GF(N)."""

    a: FieldElement
    b: FieldElement

    def __post_init__(self):
        if self.a.p != self.b.p:
            raise ModulusMismatch("displacement components live in different fields")

    @classmethod
    def create(cls, a: int, b: int, N: int) -> DisplacementLabel:
        F = make_field(N)
        return cls(F(a), F(b))

    @property
    def dim(self) -> int:
        return self.a.p

    def __neg__(self):
        return DisplacementLabel(-self.a, -self.b)


def displacement(label: DisplacementLabel) -> np.ndarray:
    """Phase-space displacement ``D(a, b)``.

    Odd N: ``D(a, b) = w**(2^{-1} a b) X**a Z**b`` with ``2^{-1}`` taken in
    GF(N); then ``D(a, b)^dagger = D(-a, -b)`` and ``D(a, b)**k = D(ka, kb)``.

    N = 2: ``D(a, b) = i**(a b) X**a Z**b``, the Pauli group
    (``D(1, 1) = Y``).
    """
    N = label.dim
    a, b = label.a.value, label.b.value
    X, Z = _shift(N), _clock(N)
    base = np.linalg.matrix_power(X, a) @ np.linalg.matrix_power(Z, b)
    if N == 2:
        return (1j ** (a * b)) * base
    h = half(label.a.modulus).value
    return _root_powers(N, h * a * b) * base


def displacement_operator(a: int, b: int, N: int) -> np.ndarray:
    """Shorthand for ``displacement(DisplacementLabel.create(a, b, N))``."""
    return displacement(DisplacementLabel.create(a, b, N))
