import cmath
import math

import numpy as np
import pytest

from latticewigner.errors import IndexOutOfRange, NotPrime, WrongBasis
from latticewigner.hilbert import (
    BLOCH,
    MomentumGrid,
    StateVector,
    basis_state,
    dft_kernel,
    dft_matrix,
    to_bloch,
    to_wannier,
    unitarity_residual,
)

from conftest import random_state

PRIMES_TO_97 = [n for n in range(2, 98) if all(n % d for d in range(2, n))]


def test_kernel_examples():
    for N in (2, 3, 5, 7):
        for m in range(N):
            assert dft_kernel(0, m, N) == pytest.approx(1 / math.sqrt(N), abs=1e-15)
    assert dft_kernel(1, 1, 2) == pytest.approx(-1 / math.sqrt(2), abs=1e-15)
    assert dft_kernel(1, 1, 3) == pytest.approx(cmath.exp(-2j * math.pi / 3) / math.sqrt(3), abs=1e-15)
    with pytest.raises(IndexOutOfRange):
        dft_kernel(3, 0, 3)
    with pytest.raises(NotPrime):
        dft_kernel(0, 0, 4)


def test_hadamard():
    H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    assert np.max(np.abs(dft_matrix(2) - H)) < 1e-15


def test_matrix_matches_kernel():
    N = 7
    F = dft_matrix(N)
    for q in range(N):
        for m in range(N):
            assert F[q, m] == pytest.approx(dft_kernel(q, m, N), abs=1e-14)


def test_columns_orthonormal_by_inner_products():
    F = dft_matrix(5)
    for i in range(5):
        for j in range(5):
            ip = sum(F[q, i].conjugate() * F[q, j] for q in range(5))
            assert abs(ip - (i == j)) < 1e-12


@pytest.mark.parametrize("N", PRIMES_TO_97)
def test_bijective(N):
    F = dft_matrix(N)
    assert unitarity_residual(F) < 1e-12
    assert np.max(np.abs(F.conj().T @ F - np.eye(N))) < 1e-12
    s = np.linalg.svd(F, compute_uv=False)
    assert s.max() / s.min() == pytest.approx(1.0, abs=1e-12)


def test_rejects_composite():
    for N in (1, 4, 6, 9, 15):
        with pytest.raises(NotPrime):
            dft_matrix(N)
    with pytest.raises(NotPrime):
        StateVector(np.ones(4))


def test_to_bloch_examples(rng):
    phi = to_bloch(basis_state(0, 2))
    np.testing.assert_allclose(phi.amplitudes, [1 / math.sqrt(2)] * 2, atol=1e-15)
    assert phi.basis == BLOCH

    N = 7
    uniform = StateVector(np.ones(N) / math.sqrt(N))
    # sum_q exp(2 pi i m q / N) / N vanishes unless m = 0
    expected = [sum(cmath.exp(2j * math.pi * m * q / N) for q in range(N)) / N for m in range(N)]
    np.testing.assert_allclose(to_bloch(uniform).amplitudes, expected, atol=1e-14)
    np.testing.assert_allclose(to_bloch(uniform).amplitudes, np.eye(N)[0], atol=1e-14)

    psi = StateVector(random_state(rng, N))
    back = to_wannier(to_bloch(psi))
    assert np.max(np.abs(back.amplitudes - psi.amplitudes)) < 1e-12
    assert abs(to_bloch(psi).norm() - psi.norm()) < 1e-12


def test_bloch_state_is_dft_column():
    N = 5
    for m in range(N):
        col = to_wannier(basis_state(m, N, BLOCH)).amplitudes
        np.testing.assert_allclose(col, [dft_kernel(q, m, N) for q in range(N)], atol=1e-15)


def test_wrong_basis():
    with pytest.raises(WrongBasis):
        to_wannier(basis_state(0, 3))
    with pytest.raises(WrongBasis):
        to_bloch(basis_state(0, 3, BLOCH))


def test_completeness_of_both_bases():
    N = 11
    F = dft_matrix(N)
    site = sum(np.outer(e, e) for e in np.eye(N))
    bloch = sum(np.outer(F[:, m], F[:, m].conj()) for m in range(N))
    np.testing.assert_allclose(site, np.eye(N), atol=1e-12)
    np.testing.assert_allclose(bloch, np.eye(N), atol=1e-12)


def test_momentum_grid():
    g = MomentumGrid(2)
    np.testing.assert_allclose(g.values, [0, math.pi])
    g = MomentumGrid(7)
    assert len(g) == 7 and g.values.min() >= 0 and g.values.max() < 2 * math.pi


def test_normalization_is_checked_not_enforced():
    s = StateVector([1, 1, 0])
    assert not s.is_normalized()
    assert s.norm() == pytest.approx(math.sqrt(2))
