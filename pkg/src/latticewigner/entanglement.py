"""Bell and GHZ bases built from the two-site lattice primitives.

The only gates used are the two-point Fourier transform (the Hadamard matrix,
``dft_matrix(2)``) and a controlled version of the two-site translation
``shift_operator(2)``. Qubit 0 is the leftmost tensor factor.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, IndexOutOfRange
from .hilbert import dft_matrix
from .weyl import shift_operator

_P0 = np.array([[1, 0], [0, 0]], dtype=np.complex128)
_P1 = np.array([[0, 0], [0, 1]], dtype=np.complex128)


def _embed(op: np.ndarray, target: int, n_qubits: int) -> np.ndarray:
    out = np.eye(1, dtype=np.complex128)
    for k in range(n_qubits):
        out = np.kron(out, op if k == target else np.eye(2))
    return out


def controlled_shift(control: int, target: int, n_qubits: int) -> np.ndarray:
    """Apply the two-site shift to ``target`` when ``control`` is in ``|1>``."""
    X = shift_operator(2)
    proj0 = np.eye(1, dtype=np.complex128)
    proj1 = np.eye(1, dtype=np.complex128)
    for k in range(n_qubits):
        proj0 = np.kron(proj0, _P0 if k == control else np.eye(2))
        proj1 = np.kron(proj1, _P1 if k == control else (X if k == target else np.eye(2)))
    return proj0 + proj1


def _circuit(n_qubits: int) -> np.ndarray:
    U = _embed(dft_matrix(2), 0, n_qubits)
    for k in range(n_qubits - 1):
        U = controlled_shift(k, k + 1, n_qubits) @ U
    return U


def bell_basis() -> np.ndarray:
    """The four Bell states as the rows of a 4 x 4 array.

    Row ``j`` is the circuit applied to the computational state ``|j>``;
    row 0 is ``(|00> + |11>)/sqrt(2)``.
    """
    return _circuit(2).T.copy()


def ghz_basis() -> np.ndarray:
    """The eight GHZ states as the rows of an 8 x 8 array."""
    return _circuit(3).T.copy()


def partial_trace(state, keep: int) -> np.ndarray:
    """Reduced 2 x 2 density matrix of qubit ``keep`` for a pure multi-qubit state."""
    psi = np.asarray(state, dtype=np.complex128)
    n = int(round(np.log2(psi.size))) if psi.size else 0
    if psi.ndim != 1 or n < 1 or 2**n != psi.size:
        raise DimensionMismatch(f"state of length {psi.size} is not a multi-qubit state")
    if not 0 <= keep < n:
        raise IndexOutOfRange(f"qubit {keep} outside 0..{n - 1}")
    t = np.moveaxis(psi.reshape((2,) * n), keep, 0).reshape(2, -1)
    return t @ t.conj().T
