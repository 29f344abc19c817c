"""Command-line interface: JSON matrix I/O and subcommands wiring the
measurement lift, basis dump, classifiers, and self-test together."""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .basis import gell_mann_basis, verify_orthonormal
from .bloch import decompose
from .classify import (
    BellDiagonalSpec,
    check_classical_classical,
    check_classical_quantum,
    check_quantum_classical,
    classify_bell_diagonal,
    dakic_condition,
)
from .linalg import DEFAULT_TOL, Tolerance, numerical_rank, validate_density
from .measurement import consistency_check, from_unitary, lift_matrix
from .sampler import (
    invariance_search,
    random_classical_classical,
    random_classical_quantum,
    random_unitary,
)


def matrix_to_pairs(a: np.ndarray) -> list:
    """Row-major [re, im] pairs."""
    return [[float(z.real), float(z.imag)] for z in np.asarray(a, dtype=complex).ravel()]


def pairs_to_matrix(pairs, rows: int, cols: int) -> np.ndarray:
    arr = np.asarray(pairs, dtype=float)
    if arr.shape != (rows * cols, 2):
        raise ValueError(f"expected {rows * cols} [re, im] pairs, got shape {arr.shape}")
    return (arr[:, 0] + 1j * arr[:, 1]).reshape(rows, cols)


def load_state(path: str, validate: bool = True, tol: Tolerance = DEFAULT_TOL):
    with open(path) as fh:
        doc = json.load(fh)
    m, n = int(doc["m"]), int(doc["n"])
    rho = pairs_to_matrix(doc["rho"], m * n, m * n)
    if validate:
        report = validate_density(rho, tol)
        if not report.ok:
            raise ValueError(
                "state file fails density validation: "
                f"hermitian={report.hermitian} unit_trace={report.unit_trace} "
                f"psd={report.psd} (min eigenvalue {report.min_eigenvalue:.3e})"
            )
    return m, n, rho


def load_unitary(path: str, dim: int | None = None) -> np.ndarray:
    with open(path) as fh:
        doc = json.load(fh)
    m = int(doc["m"]) if dim is None else dim
    return pairs_to_matrix(doc["u"], m, m)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2)


def _verdict_doc(v) -> dict:
    return {
        "ruled_out": v.ruled_out,
        "rank": v.computed_rank,
        "threshold": v.threshold,
    }


def _verdict_line(name: str, v) -> str:
    word = "RULED-OUT   " if v.ruled_out else "INCONCLUSIVE"
    rel = ">" if v.ruled_out else "<="
    return f"{name:<20}: {word} (rank {v.computed_rank} {rel} {v.threshold})"


def cmd_basis(args) -> int:
    b = gell_mann_basis(args.m)
    doc = {
        "m": args.m,
        "elements": [
            {"label": lab, "matrix": matrix_to_pairs(el)}
            for lab, el in zip(b.labels, b.elements)
        ],
    }
    print(_dump(doc))
    return 0


def cmd_lift(args) -> int:
    tol = Tolerance(args.tol_rank, args.tol_eq)
    u = load_unitary(args.unitary, args.dim)
    meas = from_unitary(u, tol)
    lifted = lift_matrix(meas, gell_mann_basis(meas.dim), tol)
    rank = numerical_rank(lifted.matrix, tol)
    defect = lifted.idempotency_defect
    doc = {
        "dim": meas.dim,
        "matrix": [[float(x) for x in row] for row in lifted.matrix],
        "rank": rank,
        "idempotency_defect": defect,
    }
    print(_dump(doc))
    if defect > 1e-9 or rank != meas.dim - 1:
        print(
            f"error: lifted matrix violates structural invariants "
            f"(defect {defect:.3e}, rank {rank})",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_classify(args) -> int:
    tol = Tolerance(args.tol_rank, args.tol_eq)
    m, n, rho = load_state(args.state, validate=not args.no_validate, tol=tol)
    bf = decompose(rho, gell_mann_basis(m), gell_mann_basis(n), tol)
    cq = check_classical_quantum(bf, tol)
    qc = check_quantum_classical(bf, tol)
    cc = check_classical_classical(bf, tol)
    dk = dakic_condition(bf, tol)
    oracle = {}
    if args.oracle:
        for side in ("left", "right"):
            rep = invariance_search(rho, m, n, side=side, trials=args.oracle, seed=args.seed)
            oracle[side] = {
                "best_residual": rep.best_residual,
                "trials": rep.trials,
                "reduced_spectrum_degenerate": rep.reduced_spectrum_degenerate,
            }
    if args.json:
        doc = {
            "input": os.path.basename(args.state),
            "m": m,
            "n": n,
            "tolerances": {"rank_rel": tol.rank_rel, "eq_abs": tol.eq_abs},
            "checks": {
                "classical_quantum": _verdict_doc(cq),
                "quantum_classical": _verdict_doc(qc),
                "classical_classical": _verdict_doc(cc),
                "dakic": _verdict_doc(dk),
            },
            "oracle": oracle,
        }
        print(_dump(doc))
    else:
        print(f"state: {args.state} ({m} x {n})")
        print(_verdict_line("classical-quantum", cq))
        print(_verdict_line("quantum-classical", qc))
        print(_verdict_line("classical-classical", cc))
        print(_verdict_line("dakic baseline", dk))
        for side, rep in oracle.items():
            print(
                f"oracle {side:<5}: best residual {rep['best_residual']:.3e} "
                f"over {rep['trials']} trials"
            )
        print(f"tolerances: rank_rel={tol.rank_rel:g} eq_abs={tol.eq_abs:g}")
    return 0


def cmd_bell(args) -> int:
    tol = Tolerance(args.tol_rank, args.tol_eq)
    spec = BellDiagonalSpec(args.t1, args.t2, args.t3)
    verdict = classify_bell_diagonal(spec, tol)
    print(f"t = ({args.t1:g}, {args.t2:g}, {args.t3:g})")
    print(f"nonzero correlations : {verdict.nonzero_correlations}")
    print(f"quantum-quantum      : {verdict.quantum_quantum}")
    print(f"separable            : {verdict.separable}")
    return 0


def cmd_selftest(args) -> int:
    tol = DEFAULT_TOL
    seed = args.seed
    rows = []

    def record(name, ok):
        rows.append((name, ok))

    for m in (2, 3, 4):
        record(f"basis orthonormal m={m}", verify_orthonormal(gell_mann_basis(m), tol))

    ok_lift = True
    ok_consist = True
    for m in (2, 3):
        b = gell_mann_basis(m)
        for k in range(50):
            meas = from_unitary(random_unitary(m, seed + 97 * m + k), tol)
            lifted = lift_matrix(meas, b, tol)
            if lifted.idempotency_defect > 1e-9 or numerical_rank(lifted.matrix, tol) != m - 1:
                ok_lift = False
            if consistency_check(meas, b, tol) > 1e-10:
                ok_consist = False
    record("lift idempotent, rank m-1 (50 random unitaries, m=2,3)", ok_lift)
    record("channel matches coefficient matrix C", ok_consist)

    ok_cq = True
    ok_cc = True
    for k in range(50):
        rho = random_classical_quantum(2, 2, seed + k)
        bf = decompose(rho, gell_mann_basis(2), gell_mann_basis(2), tol)
        if check_classical_quantum(bf, tol).ruled_out:
            ok_cq = False
        rho = random_classical_classical(2, 2, seed + 1000 + k)
        bf = decompose(rho, gell_mann_basis(2), gell_mann_basis(2), tol)
        if (
            check_classical_quantum(bf, tol).ruled_out
            or check_quantum_classical(bf, tol).ruled_out
            or check_classical_classical(bf, tol).ruled_out
        ):
            ok_cc = False
    record("no false rule-outs on constructed classical-quantum states", ok_cq)
    record("no false rule-outs on constructed classical-classical states", ok_cc)

    rho = random_classical_quantum(2, 2, seed + 7)
    rep = invariance_search(rho, 2, 2, side="left", trials=50, seed=seed)
    record("invariance oracle finds the generating basis", rep.best_residual <= 1e-10)

    octahedron = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1), (0, 0, 0)]
    ok_bell = all(
        not classify_bell_diagonal(BellDiagonalSpec(*t), tol).quantum_quantum
        for t in octahedron
    )
    ok_bell = ok_bell and classify_bell_diagonal(BellDiagonalSpec(0.5, 0.3, 0.0), tol).quantum_quantum
    record("Bell-diagonal classification on reference points", ok_bell)

    width = max(len(name) for name, _ in rows)
    failures = 0
    for name, ok in rows:
        print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}")
        failures += 0 if ok else 1
    print(f"{len(rows) - failures}/{len(rows)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnlift",
        description="Lift von Neumann measurements to matrix form and screen "
        "bipartite states for nonzero quantum correlation.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_tol(p):
        p.add_argument("--tol-rank", type=float, default=DEFAULT_TOL.rank_rel,
                       help="relative singular-value cutoff for ranks")
        p.add_argument("--tol-eq", type=float, default=DEFAULT_TOL.eq_abs,
                       help="absolute cutoff for matrix comparisons")

    p = sub.add_parser("basis", help="dump the canonical basis for dimension m")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("lift", help="lift a measurement unitary and report rank")
    p.add_argument("unitary")
    p.add_argument("--dim", type=int, default=None)
    add_tol(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("classify", help="run the rank screens on a state file")
    p.add_argument("state")
    p.add_argument("--oracle", type=int, default=0, metavar="TRIALS",
                   help="also run the measurement-invariance search")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-validate", action="store_true",
                   help="skip density validation of the input state")
    add_tol(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bell", help="classify a Bell-diagonal state by (t1, t2, t3)")
    p.add_argument("t1", type=float)
    p.add_argument("t2", type=float)
    p.add_argument("t3", type=float)
    add_tol(p)
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("selftest", help="run the property corpus and print a table")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
