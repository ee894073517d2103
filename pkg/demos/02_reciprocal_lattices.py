"""
Reciprocal lattices
===================

Reciprocal vectors b_j satisfy a_i . b_j = delta_ij (no 2*pi factor).
"""

import numpy as np

from latticewigner import LatticeBasis2D, LatticeBasis3D, biorthogonality_residual, reciprocal_2d, reciprocal_3d

np.set_printoptions(precision=4, suppress=True)

# Triangular lattice in the plane
tri = LatticeBasis2D([1, 0], [0.5, np.sqrt(3) / 2])
b = reciprocal_2d(tri)
print("triangular lattice reciprocal vectors:\n", b.vectors)
print("b1 . a2 =", b[0] @ tri.a2, " b2 . a1 =", b[1] @ tri.a1)

# Face-centred cubic primitive cell -> body-centred cubic reciprocal cell
fcc = LatticeBasis3D([0, 0.5, 0.5], [0.5, 0, 0.5], [0.5, 0.5, 0])
bcc = reciprocal_3d(fcc)
print("\nFCC reciprocal vectors (a BCC cell):\n", bcc.vectors)
print("residual:", biorthogonality_residual(fcc, bcc))

# Crystallographic 2*pi convention
print("\nwith 2*pi:\n", bcc.scaled(2 * np.pi).vectors)
