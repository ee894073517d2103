"""
Discrete versus continuous momentum
===================================

With N sites and N crystal momenta the Fourier transform is unitary. If
instead the N sites are paired with a continuous momentum k in [0, 2*pi),
many different momentum functions land on the same site amplitudes.
"""

from latticewigner import aliasing_witness, discrete_bijectivity_report, restrict_to_lattice
from latticewigner.audit import plane_wave

for N in (2, 3, 5, 7):
    r = discrete_bijectivity_report(N)
    print(f"N={N}: cond(F) = {r.condition_number:.15f}, |F^-1 - F^+| = {r.inverse_residual:.1e}")

# The qubit case: two sites, continuous momentum
print("\nexp(-2ik) on two sites ->", restrict_to_lattice(plane_wave(2), 2).amplitudes.round(12))
print("exp(-ik)  on two sites ->", restrict_to_lattice(plane_wave(1), 2).amplitudes.round(12))

for N, m in [(2, 2), (2, 4), (5, 10), (7, 21)]:
    r = aliasing_witness(N, m)
    print(
        f"N={N}, exp(-{m}ik) vs {r.partner}: lattice distance {r.lattice_distance:.1e}, "
        f"L2 distance {r.function_distance:.3f} -> {r.verdict}"
    )
