"""Reciprocal lattice vectors for 2-D and 3-D Bravais lattices.

The convention is ``a_i . b_j = delta_ij`` with no factor of 2*pi; use
:meth:`ReciprocalBasis.scaled` with ``2*np.pi`` for the crystallographic
convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateBasis, DimensionMismatch

DEGENERACY_RTOL = 1e-12
N_HAT = np.array([0.0, 0.0, 1.0])


def _vec(v, dim):
    arr = np.asarray(v, dtype=float)
    if arr.shape != (dim,):
        raise DimensionMismatch(f"expected a {dim}-vector, got shape {arr.shape}")
    return arr


def _embed(v):
    return np.array([v[0], v[1], 0.0])


@dataclass(frozen=True, eq=False)
class LatticeBasis2D:
    """Primitive vectors ``a1, a2`` of a planar lattice with normal +z."""

    a1: np.ndarray
    a2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a1", _vec(self.a1, 2))
        object.__setattr__(self, "a2", _vec(self.a2, 2))
        area = abs(self.a1[0] * self.a2[1] - self.a1[1] * self.a2[0])
        scale = np.linalg.norm(self.a1) * np.linalg.norm(self.a2)
        if not area > DEGENERACY_RTOL * scale:
            raise DegenerateBasis(f"a1={self.a1} and a2={self.a2} are linearly dependent")

    @property
    def dim(self) -> int:
        return 2

    @property
    def vectors(self) -> np.ndarray:
        """Primitive vectors as rows."""
        return np.vstack([self.a1, self.a2])


@dataclass(frozen=True, eq=False)
class LatticeBasis3D:
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray

    def __post_init__(self):
        for name in ("a1", "a2", "a3"):
            object.__setattr__(self, name, _vec(getattr(self, name), 3))
        volume = abs(np.dot(self.a1, np.cross(self.a2, self.a3)))
        scale = np.prod([np.linalg.norm(v) for v in (self.a1, self.a2, self.a3)])
        if not volume > DEGENERACY_RTOL * scale:
            raise DegenerateBasis("primitive vectors span zero cell volume")

    @property
    def dim(self) -> int:
        return 3

    @property
    def vectors(self) -> np.ndarray:
        return np.vstack([self.a1, self.a2, self.a3])

    @property
    def volume(self) -> float:
        return float(np.dot(self.a1, np.cross(self.a2, self.a3)))


@dataclass(frozen=True, eq=False)
class ReciprocalBasis:
    """Reciprocal vectors ``b_i`` stored as the rows of ``vectors``."""

    vectors: np.ndarray

    def __post_init__(self):
        vecs = np.array(self.vectors, dtype=float)
        if vecs.ndim != 2 or vecs.shape[0] != vecs.shape[1] or vecs.shape[0] not in (2, 3):
            raise DimensionMismatch(f"reciprocal vectors must be 2x2 or 3x3, got {vecs.shape}")
        vecs.setflags(write=False)
        object.__setattr__(self, "vectors", vecs)

    @property
    def dim(self) -> int:
        return self.vectors.shape[0]

    def __getitem__(self, i):
        return self.vectors[i]

    def scaled(self, factor: float) -> ReciprocalBasis:
        return ReciprocalBasis(self.vectors * factor)

    def as_basis(self) -> LatticeBasis2D | LatticeBasis3D:
        """Reinterpret the reciprocal vectors as a direct-space basis."""
        return make_basis(self.vectors)


def make_basis(vectors) -> LatticeBasis2D | LatticeBasis3D:
    """Build a 2-D or 3-D basis from a square array whose rows are ``a_i``."""
    try:
        vecs = np.asarray(vectors, dtype=float)
    except ValueError as exc:
        raise DimensionMismatch("primitive vectors have inconsistent lengths") from exc
    if vecs.shape == (2, 2):
        return LatticeBasis2D(*vecs)
    if vecs.shape == (3, 3):
        return LatticeBasis3D(*vecs)
    raise DimensionMismatch(f"basis must be 2x2 or 3x3, got shape {vecs.shape}")


def reciprocal_2d(basis: LatticeBasis2D) -> ReciprocalBasis:
    """``b1 = (a2 x n)/(n.(a1 x a2))`` and ``b2 = (n x a1)/(n.(a1 x a2))``."""
    a1, a2 = _embed(basis.a1), _embed(basis.a2)
    denom = np.dot(N_HAT, np.cross(a1, a2))
    b1 = np.cross(a2, N_HAT) / denom
    b2 = np.cross(N_HAT, a1) / denom
    return ReciprocalBasis(np.vstack([b1[:2], b2[:2]]))


def reciprocal_3d(basis: LatticeBasis3D) -> ReciprocalBasis:
    a1, a2, a3 = basis.a1, basis.a2, basis.a3
    b1 = np.cross(a2, a3) / np.dot(a1, np.cross(a2, a3))
    b2 = np.cross(a3, a1) / np.dot(np.cross(a3, a1), a2)
    b3 = np.cross(a1, a2) / np.dot(np.cross(a1, a2), a3)
    return ReciprocalBasis(np.vstack([b1, b2, b3]))


def reciprocal(basis: LatticeBasis2D | LatticeBasis3D) -> ReciprocalBasis:
    if isinstance(basis, LatticeBasis2D):
        return reciprocal_2d(basis)
    return reciprocal_3d(basis)


def biorthogonality_residual(basis, recip) -> float:
    """Largest deviation of ``a_i . b_j`` from the Kronecker delta.

    Either argument may be a basis object or a square array of row vectors.
    """
    a = basis.vectors if hasattr(basis, "vectors") else np.asarray(basis, dtype=float)
    b = recip.vectors if hasattr(recip, "vectors") else np.asarray(recip, dtype=float)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"cannot pair basis {a.shape} with reciprocal {b.shape}")
    return float(np.max(np.abs(a @ b.T - np.eye(a.shape[0]))))
