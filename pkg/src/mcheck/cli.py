"""mcheck: decide matrix conditions from the command line.

Exit status: 0 holds / non-trivial, 1 fails / trivial, 2 usage or input
error, 3 undecided at the node cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import cubeterm as cube_mod
from .corpus import SAFE_BOUNDS, run_corpus
from .lex import implies_lex
from .matrix import MatrixError, cube, family, intersect, presentation, require_simple
from .textformat import format_matrix, parse_matrix
from .triviality import is_trivial

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args, report: dict, text_lines: list[str]):
    if getattr(args, "timing", False):
        report["elapsed_s"] = round(time.perf_counter() - args._t0, 6)
    if getattr(args, "json", False):
        print(json.dumps(report))
    else:
        print("\n".join(text_lines))
        if "witness" in report:
            print("witness: " + json.dumps(report["witness"]))


def _write_or_print(M, out):
    text = format_matrix(M)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_trivial(args) -> int:
    M = require_simple(parse_matrix(args.file))
    v = is_trivial(M)
    verdict = "trivial" if v.trivial else "non-trivial"
    report = {"verb": "trivial", "verdict": verdict, "witness": v.to_json()}
    detail = (
        f"rows {v.pair} admit no witnessing columns" if v.trivial
        else f"every row pair has witnessing columns ({len(v.table)} pairs)"
    )
    _emit(args, report, [verdict, detail])
    return EXIT_FAILS if v.trivial else EXIT_HOLDS


def _cube_verdict(args, M, n_prime: int, context: str | None, node_cap: int) -> int:
    if context is None:
        context = "lex" if M.is_simple else "reg"
    if M.is_simple:
        v = cube_mod.implies_cube_simple(M, n_prime)
        witness = v.to_json()
        if not v.holds:
            witness["algebra"] = cube_mod.TwoElementAlgebra(
                (cube_mod.build_counterexample_algebra(M, n_prime),)
            ).to_json()
        verdict = "holds" if v.holds else "fails"
        method = "row-cover"
        counters = {"comparisons": v.comparisons, "bound": cube_mod.comparison_bound(M, n_prime)}
        code = EXIT_HOLDS if v.holds else EXIT_FAILS
    else:
        if context == "lex":
            raise UsageError("--context lex needs a simple matrix (m'=1, k=l); use reg or alg")
        v = cube_mod.implies_cube_general(M, n_prime, node_cap=node_cap)
        witness = v.to_json()
        verdict = {"holds": "holds", "fails": "fails", "undecided": "undecided at cap"}[v.outcome]
        method = "two-element-algebra"
        counters = {"nodes": v.nodes, "node_cap": node_cap}
        code = {"holds": EXIT_HOLDS, "fails": EXIT_FAILS, "undecided": EXIT_UNDECIDED}[v.outcome]
    note = (
        f"M => Cube_{n_prime} in context {context}; the verdict is the same in the "
        "lex, reg and alg contexts"
    )
    report = {
        "verb": "cube", "context": context, "n_prime": n_prime, "method": method,
        "verdict": verdict, "note": note, "witness": witness, "counters": counters,
    }
    _emit(args, report, [verdict, note, f"method: {method}", f"counters: {counters}"])
    return code


def cmd_cube(args) -> int:
    if args.n < 2:
        raise UsageError(f"-n must be at least 2, got {args.n}")
    M = parse_matrix(args.file)
    return _cube_verdict(args, M, args.n, args.context, args.node_cap)


def _cube_index(M) -> int | None:
    """``n'`` such that ``M`` is lex-equivalent to ``Cube_n'``, if any."""
    if not M.is_simple:
        return None
    for n_prime in range(2, M.n + 1):
        C = cube(n_prime)
        if implies_lex(M, C).holds and implies_lex(C, M).holds:
            return n_prime
    return None


def cmd_implies(args) -> int:
    M1, M2 = parse_matrix(args.file1), parse_matrix(args.file2)
    if args.context != "lex":
        n_prime = _cube_index(M2)
        if n_prime is None:
            raise UsageError(
                f"no general algorithm is known for => under --context {args.context}; "
                "it is only available when the second matrix is a Cube/Mal instance"
            )
        return _cube_verdict(args, M1, n_prime, args.context, args.node_cap)
    require_simple(M1, "first matrix")
    require_simple(M2, "second matrix")
    v = implies_lex(M1, M2, full_saturation=args.full_saturation)
    verdict = "holds" if v.holds else "fails"
    report = {
        "verb": "implies", "context": "lex", "verdict": verdict, "witness": v.to_json(),
        "counters": {"derived": len(v.derived_columns)},
    }
    _emit(args, report, [verdict, f"case: {v.case}", f"derived columns: {len(v.derived_columns)}"])
    return EXIT_HOLDS if v.holds else EXIT_FAILS


def cmd_family(args) -> int:
    params = {k: getattr(args, k) for k in ("r", "n", "k") if getattr(args, k) is not None}
    _write_or_print(family(args.name, **params), args.output)
    return EXIT_HOLDS


def cmd_intersect(args) -> int:
    _write_or_print(intersect(parse_matrix(args.file1), parse_matrix(args.file2)), args.output)
    return EXIT_HOLDS


def cmd_presentation(args) -> int:
    P = presentation(parse_matrix(args.file))
    sig = ", ".join(f"{s}/{a}" for s, a in P.symbols)
    print(f"operations: {sig}")
    print(str(P))
    return EXIT_HOLDS


def cmd_corpus(args) -> int:
    if args.count < 0:
        raise UsageError("--count must be non-negative")
    bounds = {"nmax": args.nmax, "mmax": args.mmax, "kmax": args.kmax}
    if bounds["nmax"] < 1 or bounds["kmax"] < 1 or bounds["mmax"] < 0:
        raise UsageError("need --nmax >= 1, --kmax >= 1 and --mmax >= 0")
    for key, val in bounds.items():
        if val > SAFE_BOUNDS[key] and not args.force:
            raise UsageError(f"--{key} {val} exceeds the safety limit {SAFE_BOUNDS[key]}; pass --force")
    lines, bad = run_corpus(args.seed, args.count, **bounds)
    print("\n".join(lines))
    return EXIT_FAILS if bad else EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcheck",
        description="Decision procedures for matrix conditions.",
        epilog="exit status: 0 holds/non-trivial, 1 fails/trivial, 2 usage error, 3 undecided at cap",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("trivial", help="is a simple matrix trivial? (exit 0 non-trivial, 1 trivial)")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_trivial)

    p = sub.add_parser(
        "implies",
        help="does file1's condition imply file2's? (exit 0 holds, 1 fails)",
        description="With --context lex (default) both matrices must be simple. reg/alg are "
        "accepted only when file2 is lex-equivalent to some Cube_n', and then run the cube test.",
    )
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--context", choices=["lex", "reg", "alg"], default="lex")
    p.add_argument("--json", action="store_true")
    p.add_argument("--full-saturation", action="store_true", help="do not stop at the goal column")
    p.add_argument("--node-cap", type=int, default=cube_mod.DEFAULT_NODE_CAP)
    p.add_argument("--timing", action="store_true", help="add elapsed time (non-deterministic)")
    p.set_defaults(func=cmd_implies)

    p = sub.add_parser(
        "cube",
        help="does the condition imply an n-cube term? (exit 0 holds, 1 fails, 3 undecided)",
        description="Simple matrices use the row-cover test; other matrices the "
        "two-element-algebra search. The context only labels the report.",
    )
    p.add_argument("file")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--context", choices=["lex", "reg", "alg"], default=None)
    p.add_argument("--node-cap", type=int, default=cube_mod.DEFAULT_NODE_CAP)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="add elapsed time (non-deterministic)")
    p.set_defaults(func=cmd_cube)

    p = sub.add_parser("family", help="write a built-in matrix")
    p.add_argument("name", choices=["mal", "perm", "ari", "maj", "cube", "edge"])
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("intersect", help="matrix of the conjunction of two simple conditions")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("presentation", help="equations of the generic variety")
    p.add_argument("file")
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser(
        "corpus", help="cross-check all procedures on random simple matrices (exit 1 on disagreement)"
    )
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--mmax", type=int, default=4)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--force", action="store_true")
    p.set_defaults(func=cmd_corpus)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_HOLDS
    args._t0 = time.perf_counter()
    try:
        return args.func(args)
    except (MatrixError, UsageError) as exc:
        print(f"mcheck {args.verb}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
