"""Command-line front end.

Commands
--------
compute      invariants of one diagram (raw Gauss code or table name)
tabulate     recompute the embedded 116-knot table and verify it
distinguish  first n at which two diagrams' F-polynomials differ
verify-moves fuzz invariance under random Reidemeister moves
family       emit the k-twist member of the shared-F-polynomial family

Inputs may be raw Gauss codes (``"O1+ U2+ U1+ O2+"``) or tabulated
knot names (``4.24``); raw codes win when both readings are possible.
Exit status: 0 success, 1 verification mismatch, 2 malformed input.
All stdout output is byte-deterministic for fixed arguments and seed;
timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from .gauss import Diagram, GaussCodeError, parse_gauss
from .invariants import (
    FReport,
    crossing_reports,
    dwrithe,
    f_sequence,
    t_set,
)
from .laurent import PolyParseError
from .moves import Lcg, MoveError, random_walk
from .table import (
    CorruptData,
    EvenK,
    Verdict,
    group_by_f_sequence,
    kauffman_family,
    load_table,
    verify_record,
)

_NAME_RE = re.compile(r"^[2-4]\.\d+$")


class _InputError(ValueError):
    pass


def _resolve(text: str) -> tuple[Diagram, str | None]:
    """A raw Gauss code, or failing that a table name."""
    try:
        return parse_gauss(text), None
    except GaussCodeError as exc:
        if _NAME_RE.match(text.strip()):
            for record in load_table():
                if record.name == text.strip():
                    return record.diagram(), record.name
            raise _InputError(f"unknown table name {text.strip()!r}") from None
        raise _InputError(str(exc)) from None


def _sign_str(s: int) -> str:
    return "+1" if s > 0 else "-1"


# -- compute ---------------------------------------------------------------------


def _cmd_compute(args: argparse.Namespace) -> int:
    diagram, name = _resolve(args.target)
    report = f_sequence(diagram)
    if args.all:
        ns = list(range(1, report.n_max + 2))
    else:
        ns = [args.n if args.n is not None else 1]
        if any(n < 1 for n in ns):
            raise _InputError("n must be >= 1")

    if args.format == "json":
        payload = report.to_json(name)
        if not args.all:
            payload["F"] = {str(n): report.f_at(n).json_terms() for n in ns}
        print(json.dumps(payload))
        return 0

    label = f"knot {name}: " if name else ""
    print(f"{label}gauss: {str(diagram) or '(unknot)'}")
    print(f"crossings: {diagram.n_crossings}")
    for rep in crossing_reports(diagram, ns):
        smoothed = " ".join(f"dJ_{n}(D_c)={rep.smoothed_dwrithe[n]}" for n in ns)
        print(
            f"crossing {rep.crossing}: sign={_sign_str(rep.sign)} "
            f"index={rep.index} {smoothed}"
        )
    print(f"P(t) = {report.stable_tail}")
    print(f"n_max = {report.n_max}")
    for n in ns:
        ts = ",".join(sorted(t_set(diagram, n))) if diagram.n_crossings else ""
        print(
            f"n={n}: dJ_{n}(D)={dwrithe(diagram, n)} "
            f"T_{n}={{{ts}}} F^{n} = {report.f_at(n)}"
        )
    if args.all:
        print(f"stable tail (n > {report.n_max}): {report.stable_tail}")
    return 0


# -- tabulate --------------------------------------------------------------------


def _cmd_tabulate(args: argparse.Namespace) -> int:
    records = load_table()
    verdicts = [verify_record(r) for r in records]
    rows = []
    for record, verdict in zip(records, verdicts):
        for n, _ in record.expected:
            value = verdict.report.f_at(n)
            if verdict.status is Verdict.MATCH_UNDER_INVERSION:
                value = value.invert_vars()
            rows.append((record.name, n, str(value), verdict.status.value))

    if args.format == "csv":
        print("name,n,polynomial,status")
        for name, n, poly, status in rows:
            print(f"{name},{n},{poly},{status}")
    elif args.format == "json":
        out = []
        for record, verdict in zip(records, verdicts):
            out.append(
                {
                    "name": record.name,
                    "status": verdict.status.value,
                    "transform": verdict.transform_used,
                    "rows": [
                        {"n": n, "polynomial": poly}
                        for name, n, poly, _ in rows
                        if name == record.name
                    ],
                }
            )
        print(json.dumps(out))
    else:
        for name, n, poly, status in rows:
            print(f"{name}\t{n}\t{poly}\t{status}")
        counts = {s: 0 for s in Verdict}
        for v in verdicts:
            counts[v.status] += 1
        print(
            f"{len(records)} records: "
            f"{counts[Verdict.EXACT_MATCH]} ExactMatch, "
            f"{counts[Verdict.MATCH_UNDER_INVERSION]} MatchUnderInversion, "
            f"{counts[Verdict.MISMATCH]} Mismatch"
        )
        if args.groups:
            for group in group_by_f_sequence(records):
                print("group: " + " ".join(group.names))

    failures = [v for v in verdicts if not v.ok]
    for v in failures:
        for line in v.details:
            print(f"{v.name}: {line}", file=sys.stderr)
    return 1 if failures else 0


# -- distinguish -----------------------------------------------------------------


def _cmd_distinguish(args: argparse.Namespace) -> int:
    da, _ = _resolve(args.first)
    db, _ = _resolve(args.second)
    ra, rb = f_sequence(da), f_sequence(db)
    fa, fb = ra.fingerprint(), rb.fingerprint()
    horizon = max(ra.n_max, rb.n_max) + 1

    if fa == fb:
        print(f"not distinguished by F up to n={horizon}")
        return 0
    if fa == tuple((n, p.invert_vars()) for n, p in fb):
        print(
            f"not distinguished by F up to n={horizon} "
            "(equal after orientation reversal (t,l)->(t^-1,l^-1))"
        )
        return 0
    for n in range(1, horizon + 1):
        pa, pb = ra.f_at(n), rb.f_at(n)
        if pa != pb and pa != pb.invert_vars():
            print(f"distinguished at n={n}: F^{n} = {pa} vs {pb}")
            return 0
    # Sequences differ but every single n matches under one transform or
    # the other; report the first plain difference.
    for n in range(1, horizon + 1):
        if ra.f_at(n) != rb.f_at(n):
            print(f"distinguished at n={n}: F^{n} = {ra.f_at(n)} vs {rb.f_at(n)}")
            return 0
    print(f"not distinguished by F up to n={horizon}")
    return 0


# -- verify-moves ----------------------------------------------------------------


def _cmd_verify_moves(args: argparse.Namespace) -> int:
    if args.target is None:
        targets = [(r.name, r.diagram()) for r in load_table()]
    else:
        diagram, name = _resolve(args.target)
        targets = [(name or str(diagram) or "(unknot)", diagram)]

    rng = Lcg(args.seed)
    failures = 0
    started = time.perf_counter()
    for name, diagram in targets:
        base = f_sequence(diagram).fingerprint()
        bad = 0
        for trial in range(args.trials):
            walk_seed = rng.next_bits()
            moved, script = random_walk(diagram, args.steps, walk_seed)
            if f_sequence(moved).fingerprint() != base:
                bad += 1
                print(f"{name}: trial {trial} FAILED, script: {script.to_json()}")
        status = "ok" if bad == 0 else f"{bad}/{args.trials} FAILED"
        print(f"{name}: {args.trials} walks x {args.steps} moves: {status}")
        failures += bad
    elapsed = time.perf_counter() - started
    print(f"elapsed: {elapsed:.2f}s", file=sys.stderr)
    print(f"total failures: {failures}")
    return 1 if failures else 0


# -- family ----------------------------------------------------------------------


def _cmd_family(args: argparse.Namespace) -> int:
    diagram = kauffman_family(args.k)
    report = f_sequence(diagram)
    if args.format == "json":
        print(json.dumps(report.to_json(f"D^{args.k}")))
        return 0
    print(f"D^{args.k}: {diagram}")
    for n, poly in report.fingerprint():
        print(f"F^{n} = {poly}")
    print(f"P(t) = {report.stable_tail}")
    return 0


# -- plumbing --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vknot",
        description="F-polynomial invariants of oriented virtual knots",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of one diagram")
    p.add_argument("target", help="Gauss code or table name (empty string = unknot)")
    p.add_argument("-n", type=int, default=None, help="single n (default 1)")
    p.add_argument("--all", action="store_true", help="full F-sequence report")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("tabulate", help="verify the embedded knot table")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--groups", action="store_true", help="also print F-sequence groups")
    p.set_defaults(func=_cmd_tabulate)

    p = sub.add_parser("distinguish", help="compare two diagrams by F-polynomials")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=_cmd_distinguish)

    p = sub.add_parser("verify-moves", help="fuzz invariance under Reidemeister moves")
    p.add_argument("target", nargs="?", default=None, help="default: whole table")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_moves)

    p = sub.add_parser("family", help="k-twist member of the shared-F family")
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_family)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (_InputError, GaussCodeError, PolyParseError, MoveError, EvenK, CorruptData) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        # Downstream consumer (head, grep -m) closed the pipe; not an error.
        import os

        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
