import numpy as np
import pytest

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def random_state(rng, N):
    psi = rng.normal(size=N) + 1j * rng.normal(size=N)
    return psi / np.linalg.norm(psi)


def random_hermitian(rng, N):
    M = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
    return (M + M.conj().T) / 2
