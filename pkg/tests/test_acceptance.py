"""Acceptance criteria, one check per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the PASS/FAIL lines, or
directly with ``python tests/test_acceptance.py``.
"""

import io
import itertools
import sys
from pathlib import Path

import numpy as np
import pytest

from latticewigner import finite_field as ff
from latticewigner.audit import NON_INJECTIVE, aliasing_witness
from latticewigner.cli import main as cli_main
from latticewigner.entanglement import bell_basis, ghz_basis, partial_trace
from latticewigner.hilbert import StateVector, dft_matrix, to_bloch
from latticewigner.lattice import LatticeBasis3D, biorthogonality_residual, reciprocal_3d
from latticewigner.phase_space import marginals, point_operators, reconstruct, weyl_expand, wigner_transform
from latticewigner.weyl import clock_operator, shift_operator

GOLDEN = Path(__file__).parent / "golden"
PRIMES_TO_97 = [n for n in range(2, 98) if all(n % d for d in range(2, n))]


def c1_hadamard():
    H = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    err = np.max(np.abs(dft_matrix(2) - H))
    return err <= 1e-15, f"max entry error {err:.1e} (tol 1e-15)"


def c2_pauli():
    X, Z = shift_operator(2), clock_operator(2)
    ok = (
        np.array_equal(X, [[0, 1], [1, 0]])
        and np.array_equal(Z, [[1, 0], [0, -1]])
        and np.array_equal(X @ Z, [[0, -1], [1, 0]])
    )
    return ok, "X, Z and XZ = -iY exact"


def c3_biorthogonality():
    rng = np.random.default_rng(3)
    worst, count = 0.0, 0
    while count < 1000:
        a = rng.normal(size=(3, 3))
        if np.linalg.cond(a) > 1e4:
            continue
        worst = max(worst, biorthogonality_residual(a, reciprocal_3d(LatticeBasis3D(*a))))
        count += 1
    fcc = np.array([[0, 0.5, 0.5], [0.5, 0, 0.5], [0.5, 0.5, 0]])
    oracle = np.linalg.inv(fcc).T
    fcc_err = np.max(np.abs(reciprocal_3d(LatticeBasis3D(*fcc)).vectors - oracle))
    return worst < 1e-10 and fcc_err < 1e-12, f"worst residual {worst:.1e}, FCC->BCC error {fcc_err:.1e}"


def c4_bijectivity():
    worst_u, worst_c = 0.0, 0.0
    for N in PRIMES_TO_97:
        F = dft_matrix(N)
        worst_u = max(worst_u, np.max(np.abs(F @ F.conj().T - np.eye(N))))
        s = np.linalg.svd(F, compute_uv=False)
        worst_c = max(worst_c, abs(s.max() / s.min() - 1))
    return worst_u < 1e-12 and worst_c < 1e-10, f"max |FF^+ - I| {worst_u:.1e}, max |cond - 1| {worst_c:.1e}"


def c5_wigner():
    rng = np.random.default_rng(5)
    worst = {"herm": 0.0, "trace": 0.0, "gram": 0.0, "marg": 0.0, "round": 0.0}
    for N in (2, 3, 5, 7, 11):
        ops = point_operators(N).reshape(N * N, N, N)
        worst["herm"] = max(worst["herm"], np.max(np.abs(ops - ops.conj().transpose(0, 2, 1))))
        worst["trace"] = max(worst["trace"], np.max(np.abs(np.einsum("aii->a", ops) - 1)))
        gram = np.einsum("aij,bji->ab", ops, ops)
        worst["gram"] = max(worst["gram"], np.max(np.abs(gram - N * np.eye(N * N))))
        for _ in range(100):
            psi = rng.normal(size=N) + 1j * rng.normal(size=N)
            s = StateVector(psi / np.linalg.norm(psi))
            pos, mom = marginals(wigner_transform(s))
            worst["marg"] = max(
                worst["marg"],
                np.max(np.abs(pos - np.abs(s.amplitudes) ** 2)),
                np.max(np.abs(mom - np.abs(to_bloch(s).amplitudes) ** 2)),
            )
            M = rng.normal(size=(N, N)) + 1j * rng.normal(size=(N, N))
            worst["round"] = max(worst["round"], np.max(np.abs(reconstruct(weyl_expand(M)) - M)))
    ok = all(v < 1e-12 for v in worst.values())
    return ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items())


def c6_field():
    checked = 0
    for p in (2, 3, 5, 7, 11, 13):
        els = ff.make_field(p).elements()
        for a, b, c in itertools.product(els, repeat=3):
            if not (
                (a + b) + c == a + (b + c)
                and (a * b) * c == a * (b * c)
                and a * (b + c) == a * b + a * c
                and a + b == b + a
                and a * b == b * a
                and 0 <= (a + b).value < p
                and 0 <= (a * b).value < p
            ):
                return False, f"axiom failure at p={p}, ({a}, {b}, {c})"
        for a in els[1:]:
            brute = [x for x in range(1, p) if (a.value * x) % p == 1]
            if brute != [ff.inv(a).value]:
                return False, f"inverse mismatch at p={p}, a={a.value}"
            checked += 1
    return True, f"axioms exhaustive for p <= 13, {checked} inverses verified"


def c7_aliasing():
    lines = []
    ok = True
    for N in (2, 3, 5, 7):
        for m in (N, 2 * N):
            r = aliasing_witness(N, m)
            good = r.verdict == NON_INJECTIVE and r.lattice_distance < 1e-10 and r.function_distance > 1e-3
            ok &= good
            lines.append(f"N={N},m={m}:{r.lattice_distance:.0e}/{r.function_distance:.2f}")
    return ok, "lattice/function distance " + " ".join(lines)


def c8_entangled():
    worst_gram, worst_red = 0.0, 0.0
    for basis, n in ((bell_basis(), 2), (ghz_basis(), 3)):
        worst_gram = max(worst_gram, np.max(np.abs(basis.conj() @ basis.T - np.eye(2**n))))
        for psi in basis:
            for k in range(n):
                worst_red = max(worst_red, np.max(np.abs(partial_trace(psi, k) - np.eye(2) / 2)))
    return worst_gram < 1e-12 and worst_red < 1e-12, f"gram {worst_gram:.1e}, reduction {worst_red:.1e}"


def c9_cli():
    cases = [
        (["dft", "--dim", "2"], "dft_dim2.json"),
        (["weyl", "--dim", "3", "--a", "1", "--b", "1"], "weyl_dim3_a1_b1.json"),
        (["audit", "--dim", "5", "--mode", "10"], "audit_dim5_mode10.json"),
    ]
    for argv, golden in cases:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            if cli_main(argv, stdout=buf, stderr=io.StringIO()) != 0:
                return False, f"{' '.join(argv)} failed"
            outs.append(buf.getvalue())
        if outs[0] != outs[1] or outs[0] != (GOLDEN / golden).read_text():
            return False, f"{' '.join(argv)} differs from golden file"
    return True, "3 golden outputs byte-identical across runs"


CRITERIA = [
    ("1 Hadamard reproduction", c1_hadamard),
    ("2 Pauli reproduction", c2_pauli),
    ("3 Biorthogonality", c3_biorthogonality),
    ("4 Bijectivity certificates", c4_bijectivity),
    ("5 Wigner suite", c5_wigner),
    ("6 Finite-field closure", c6_field),
    ("7 Aliasing audit", c7_aliasing),
    ("8 Entangled bases", c8_entangled),
    ("9 CLI determinism", c9_cli),
]


def _report(name, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}"


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _report(name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_report(name, ok, detail))
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
