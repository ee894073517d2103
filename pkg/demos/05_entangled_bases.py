"""
Bell and GHZ bases
==================

The two-site Fourier matrix (Hadamard) and a controlled two-site translation
generate the Bell basis of two qubits and a GHZ basis of three.
"""

import numpy as np

from latticewigner import bell_basis, ghz_basis, partial_trace

np.set_printoptions(precision=4, suppress=True)

labels = ["00", "01", "10", "11"]
for lab, psi in zip(labels, bell_basis()):
    terms = " ".join(f"{c.real:+.4f}|{format(i, '02b')}>" for i, c in enumerate(psi) if abs(c) > 1e-12)
    print(f"|{lab}> -> {terms}")

G = ghz_basis()
print("\nGHZ basis is orthonormal:", np.allclose(G.conj() @ G.T, np.eye(8)))
print("reduced state of qubit 0 in first GHZ state:\n", partial_trace(G[0], 0).real)
