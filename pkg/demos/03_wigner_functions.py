"""
Discrete Wigner functions
=========================

Every operator on an N-site lattice (N prime) expands in the N**2 phase-space
point operators A(q, p). For a density operator the expansion coefficients
form the Wigner function W(q, p), whose row and column sums are the site and
Bloch-momentum probabilities.
"""

import numpy as np

from latticewigner import StateVector, marginals, reconstruct, to_bloch, weyl_expand, wigner_transform
from latticewigner.hilbert import basis_state
from latticewigner.phase_space import phase_space_translation

np.set_printoptions(precision=3, suppress=True)
N = 5

# A localized (Wannier) state occupies one row of phase space
W = wigner_transform(basis_state(2, N))
print("W for |q=2>  (rows q, columns p):\n", W)

# A Gaussian-like wave packet; the Wigner function can go negative
q = np.arange(N)
psi = np.exp(-((q - 2) ** 2) / 2 + 2j * np.pi * q / N)
state = StateVector(psi / np.linalg.norm(psi))
W = wigner_transform(state)
print("\nW for a wave packet:\n", W)
print("min W =", W.min())

pos, mom = marginals(W)
print("position marginal:", pos, " |psi|^2:", np.abs(state.amplitudes) ** 2)
print("momentum marginal:", mom, " |phi|^2:", np.abs(to_bloch(state).amplitudes) ** 2)

# Translating the state translates the Wigner function on the torus
T = phase_space_translation(1, 3, N)
W_moved = wigner_transform(T @ state.density_matrix() @ T.conj().T)
print("\ncovariant under (1, 3) translation:", np.allclose(W_moved, np.roll(W, (1, 3), axis=(0, 1))))

# Any operator, Hermitian or not, is recovered from its coefficients
rng = np.random.default_rng(0)
M = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
print("Weyl expansion round trip error:", np.abs(reconstruct(weyl_expand(M)) - M).max())
