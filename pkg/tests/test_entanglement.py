import numpy as np
import pytest

from latticewigner.entanglement import bell_basis, controlled_shift, ghz_basis, partial_trace
from latticewigner.errors import IndexOutOfRange
from latticewigner.hilbert import dft_matrix
from latticewigner.weyl import shift_operator

S = 1 / np.sqrt(2)


def kron(*ops):
    out = np.eye(1)
    for op in ops:
        out = np.kron(out, op)
    return out


def reduced_by_einsum(psi, keep, n):
    t = psi.reshape((2,) * n)
    letters = "abcdefgh"[:n]
    left = "".join(letters)
    right = "".join("z" if i == keep else c for i, c in enumerate(letters))
    # contract all but `keep`
    rho = np.einsum(f"{left},{right}->{letters[keep]}z", t, t.conj())
    return rho


def test_bell_first_state():
    np.testing.assert_allclose(bell_basis()[0], [S, 0, 0, S], atol=1e-15)


def test_bell_against_explicit_cnot():
    cnot = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    H = np.array([[1, 1], [1, -1]]) * S
    expected = (cnot @ kron(H, np.eye(2))).T
    np.testing.assert_allclose(bell_basis(), expected, atol=1e-15)
    np.testing.assert_allclose(controlled_shift(0, 1, 2), cnot)


def test_ghz_first_state():
    np.testing.assert_allclose(ghz_basis()[0], [S, 0, 0, 0, 0, 0, 0, S], atol=1e-15)


@pytest.mark.parametrize("basis, n", [(bell_basis(), 2), (ghz_basis(), 3)])
def test_orthonormal_and_maximally_entangled(basis, n):
    gram = np.array([[np.vdot(u, v) for v in basis] for u in basis])
    assert np.max(np.abs(gram - np.eye(2**n))) < 1e-12
    for psi in basis:
        for k in range(n):
            rho = partial_trace(psi, k)
            assert np.max(np.abs(rho - np.eye(2) / 2)) < 1e-12
            assert np.max(np.abs(rho - reduced_by_einsum(psi, k, n))) < 1e-15


def test_partial_trace_product_state():
    psi = np.kron([1, 0], [0, 1])
    np.testing.assert_allclose(partial_trace(psi, 0), [[1, 0], [0, 0]])
    np.testing.assert_allclose(partial_trace(psi, 1), [[0, 0], [0, 1]])
    with pytest.raises(IndexOutOfRange):
        partial_trace(psi, 2)


def test_partial_trace_is_density(rng):
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    for k in range(3):
        rho = partial_trace(psi, k)
        assert abs(np.trace(rho) - 1) < 1e-12
        assert np.linalg.eigvalsh(rho).min() > -1e-12


def test_built_from_lattice_primitives():
    H, X = dft_matrix(2), shift_operator(2)
    expected = kron(np.diag([1, 0]), np.eye(2)) + kron(np.diag([0, 1]), X)
    np.testing.assert_allclose(controlled_shift(0, 1, 2), expected)
    np.testing.assert_allclose(bell_basis().T, controlled_shift(0, 1, 2) @ kron(H, np.eye(2)))
