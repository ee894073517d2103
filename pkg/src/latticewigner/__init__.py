"""Discrete Weyl-Wigner phase space on prime-sized lattices.

Modules
-------
finite_field   arithmetic in GF(p)
lattice        reciprocal lattice vectors in 2-D and 3-D
hilbert        Wannier and Bloch bases, discrete Fourier transform
weyl           shift, clock and displacement operators
phase_space    point operators, Weyl expansion, Wigner functions
entanglement   Bell and GHZ bases from two-site primitives
audit          bijectivity of discrete vs. continuous momentum
cli            command-line front end
"""

from .errors import *  # noqa: F401,F403
from .finite_field import FieldElement, PrimeModulus, add, div, half, inv, make_field, mul, neg
from .lattice import (
    LatticeBasis2D,
    LatticeBasis3D,
    ReciprocalBasis,
    biorthogonality_residual,
    reciprocal_2d,
    reciprocal_3d,
)
from .hilbert import MomentumGrid, StateVector, dft_kernel, dft_matrix, to_bloch, to_wannier
from .weyl import DisplacementLabel, clock_operator, displacement, shift_operator
from .phase_space import (
    PhasePoint,
    marginals,
    point_operator,
    reconstruct,
    weyl_expand,
    wigner_transform,
)
from .entanglement import bell_basis, ghz_basis, partial_trace
from .audit import aliasing_witness, discrete_bijectivity_report, restrict_to_lattice

__version__ = "0.1.0"
