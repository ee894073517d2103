"""
The two-site lattice: Hadamard and Pauli matrices
=================================================

A lattice with two sites, q = 0 and 1, has two crystal momenta,
p = 0 and pi (hbar = 1, unit lattice constant). The Fourier matrix relating
the Wannier states |q> and the Bloch states |p> is the Hadamard gate, and the
translation and its Fourier conjugate are the Pauli matrices.
"""

import numpy as np

from latticewigner import MomentumGrid, clock_operator, dft_matrix, shift_operator

np.set_printoptions(precision=4, suppress=True)

print("crystal momenta for N=2:", MomentumGrid(2).values)

H = dft_matrix(2)
print("\n<q|p> for N=2 (rows q, columns p):\n", H.real)

# Translation by one site, and the diagonal phase it becomes in Bloch space
X, Z = shift_operator(2), clock_operator(2)
print("\nshift X:\n", X.real)
print("clock Z:\n", Z.real)
print("H^dagger X H == Z:", np.allclose(H.conj().T @ X @ H, Z))
print("X Z (= -iY):\n", (X @ Z).real)

# For larger primes the same construction gives the generalized Pauli group
N = 5
w = np.exp(2j * np.pi / N)
print(f"\nN={N}: Z X == w X Z:", np.allclose(clock_operator(N) @ shift_operator(N), w * shift_operator(N) @ clock_operator(N)))
