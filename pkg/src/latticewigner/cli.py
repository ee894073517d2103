"""Command-line front end.

Every successful command prints one JSON envelope::

    {"command": ..., "parameters": {...}, "result": ..., "format_version": "1"}

or, with ``--format csv``, a CSV table with a header row (tabular commands
only). Complex numbers are written as ``[re, im]``. Domain errors print an
envelope carrying ``error`` to stderr and exit with status 1; bad usage
exits with status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import audit, entanglement, finite_field, hilbert, lattice, phase_space, weyl
from .errors import DimensionMismatch, LatticeWignerError, NotNormalized

FORMAT_VERSION = "1"
DEFAULT_PRECISION = 12


class InvalidStateFile(LatticeWignerError, ValueError):
    pass


def _round(x: float, precision: int) -> float:
    r = round(float(x), precision)
    return 0.0 if r == 0 else r


def _to_jsonable(obj, precision: int):
    if isinstance(obj, dict):
        return {k: _to_jsonable(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_to_jsonable(v, precision) for v in obj]
    if isinstance(obj, np.ndarray):
        return _to_jsonable(obj.tolist(), precision)
    if isinstance(obj, (complex, np.complexfloating)):
        return [_round(obj.real, precision), _round(obj.imag, precision)]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round(obj, precision)
    return obj


def _complex_rows(matrix: np.ndarray, precision: int):
    rows = [["row", "col", "re", "im"]]
    for (i, j), z in np.ndenumerate(matrix):
        rows.append([i, j, _round(z.real, precision), _round(z.imag, precision)])
    return rows


def _parse_vector(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def load_state(path: str) -> hilbert.StateVector:
    """Read a JSON array of ``[re, im]`` pairs as a Wannier-basis state."""
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidStateFile(f"cannot read state file {path!r}: {exc}") from exc
    try:
        amps = np.array([complex(float(re), float(im)) for re, im in data])
    except (TypeError, ValueError) as exc:
        raise InvalidStateFile("state file must be a JSON array of [re, im] pairs") from exc
    return hilbert.StateVector(amps)


# --- command handlers: each returns (result, csv_rows | None)


def cmd_field(args):
    F = finite_field.make_field(args.p)
    result = {
        "p": F.p,
        "inverses": [[a.value, finite_field.inv(a).value] for a in F.elements()[1:]],
        "half": None if F.p == 2 else finite_field.half(F).value,
    }
    if args.a is not None and args.b is not None:
        a, b = F(args.a), F(args.b)
        result["operations"] = {
            "a": a.value,
            "b": b.value,
            "add": finite_field.add(a, b).value,
            "neg_a": finite_field.neg(a).value,
            "mul": finite_field.mul(a, b).value,
            "div": finite_field.div(a, b).value if b.value else None,
        }
    return result, None


def cmd_lattice(args):
    vectors = [v for v in (args.a1, args.a2, args.a3) if v is not None]
    basis = lattice.make_basis(vectors)
    recip = lattice.reciprocal_2d(basis) if basis.dim == 2 else lattice.reciprocal_3d(basis)
    residual = lattice.biorthogonality_residual(basis, recip)
    if args.two_pi:
        recip = recip.scaled(2 * np.pi)
    result = {
        "dim": basis.dim,
        "convention": "a_i.b_j = 2pi delta_ij" if args.two_pi else "a_i.b_j = delta_ij",
        "direct": basis.vectors,
        "reciprocal": recip.vectors,
        "biorthogonality_residual": residual,
    }
    return result, None


def cmd_dft(args):
    F = hilbert.dft_matrix(args.dim)
    result = {"dim": args.dim, "matrix": F}
    if args.check_unitary:
        result["unitarity_residual"] = hilbert.unitarity_residual(F)
    return result, _complex_rows(F, args.precision)


def cmd_weyl(args):
    D = weyl.displacement_operator(args.a, args.b, args.dim)
    return {"dim": args.dim, "a": args.a % args.dim, "b": args.b % args.dim, "matrix": D}, _complex_rows(
        D, args.precision
    )


def cmd_wigner(args):
    state = load_state(args.state)
    if args.dim is not None and state.dim != args.dim:
        raise DimensionMismatch(f"--dim {args.dim} but state has {state.dim} amplitudes")
    if not state.is_normalized(atol=1e-9):
        raise NotNormalized(f"state norm is {state.norm()!r}, expected 1")
    W = phase_space.wigner_transform(state)
    pos, mom = phase_space.marginals(W)
    rows = [["q", "p", "value"]]
    for (q, p), w in np.ndenumerate(W):
        rows.append([q, p, _round(w, args.precision)])
    result = {"dim": state.dim, "wigner": W, "position_marginal": pos, "momentum_marginal": mom}
    return result, rows


def _states(states: np.ndarray, precision: int):
    rows = [["state", "index", "re", "im"]]
    for (s, i), z in np.ndenumerate(states):
        rows.append([s, i, _round(z.real, precision), _round(z.imag, precision)])
    return rows


def cmd_bell(args):
    B = entanglement.bell_basis()
    return {"n_qubits": 2, "states": B}, _states(B, args.precision)


def cmd_ghz(args):
    G = entanglement.ghz_basis()
    return {"n_qubits": 3, "states": G}, _states(G, args.precision)


def cmd_audit(args):
    report = audit.aliasing_witness(args.dim, args.mode)
    result = report.to_dict()
    result["discrete"] = audit.discrete_bijectivity_report(args.dim).to_dict()
    return result, None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="printed decimals")

    parser = argparse.ArgumentParser(
        prog="latticewigner", description="Discrete Weyl-Wigner phase space on prime lattices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common], help="GF(p) inverses and operations")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(handler=cmd_field)

    p = sub.add_parser("lattice", parents=[common], help="reciprocal lattice vectors")
    p.add_argument("--a1", type=_parse_vector, required=True, help="e.g. 1,0 or 0,0.5,0.5")
    p.add_argument("--a2", type=_parse_vector, required=True)
    p.add_argument("--a3", type=_parse_vector)
    p.add_argument("--two-pi", action="store_true", help="scale reciprocal vectors by 2*pi")
    p.set_defaults(handler=cmd_lattice)

    p = sub.add_parser("dft", parents=[common], help="Wannier-to-Bloch Fourier matrix")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--check-unitary", action="store_true")
    p.set_defaults(handler=cmd_dft)

    p = sub.add_parser("weyl", parents=[common], help="displacement operator D(a, b)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(handler=cmd_weyl)

    p = sub.add_parser("wigner", parents=[common], help="Wigner function of a pure state")
    p.add_argument("--dim", type=int)
    p.add_argument("--state", required=True, help="JSON file of [re, im] pairs")
    p.set_defaults(handler=cmd_wigner)

    p = sub.add_parser("bell", parents=[common], help="two-qubit Bell basis")
    p.set_defaults(handler=cmd_bell)

    p = sub.add_parser("ghz", parents=[common], help="three-qubit GHZ basis")
    p.set_defaults(handler=cmd_ghz)

    p = sub.add_parser("audit", parents=[common], help="aliasing witness and bijectivity certificate")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--mode", type=int, required=True)
    p.set_defaults(handler=cmd_audit)
    return parser


def _parameters(args) -> dict:
    skip = {"command", "handler"}
    return {k: v for k, v in vars(args).items() if k not in skip and v is not None}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.precision < 0:
        print("error: --precision must be non-negative", file=stderr)
        return 2

    envelope = {"command": args.command, "parameters": _parameters(args)}
    try:
        result, rows = args.handler(args)
    except LatticeWignerError as exc:
        envelope["error"] = {"name": type(exc).__name__, "message": str(exc)}
        envelope["format_version"] = FORMAT_VERSION
        print(json.dumps(_to_jsonable(envelope, args.precision), indent=2), file=stderr)
        return 1

    if args.format == "csv":
        if rows is None:
            print(f"error: --format csv is not available for '{args.command}'", file=stderr)
            return 2
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        stdout.write(buf.getvalue())
        return 0

    envelope["result"] = result
    envelope["format_version"] = FORMAT_VERSION
    print(json.dumps(_to_jsonable(envelope, args.precision), indent=2), file=stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
