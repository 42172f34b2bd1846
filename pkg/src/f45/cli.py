"""Command-line interface: ``f45 gb|check|reduce FILE``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .engine import RunConfig, InputError, certify_verify, f45
from .frontend import ParseError, SystemDocument, format_polynomial, parse_system, stats_to_json
from .matrixred import format_matrix
from .oracle import dehomogenize, homogenize, interreduce, is_groebner

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT = 2
EXIT_CAP = 3

log = logging.getLogger("f45")


def _load(path: str) -> SystemDocument:
    return parse_system(Path(path).read_text())


def _fresh_name(names) -> str:
    if "h" not in names:
        return "h"
    n = 0
    while f"h{n}" in names:
        n += 1
    return f"h{n}"


def cmd_gb(args) -> int:
    doc = _load(args.file)
    ring = doc.ring
    polys = []
    for n, f in enumerate(doc.polys):
        if f:
            polys.append(f)
        else:
            print(f"warning: dropping zero polynomial on input line {n + 1}: {doc.source_lines[n].strip()}", file=sys.stderr)
    if not polys:
        raise InputError("no nonzero polynomials in input")
    work_ring = ring
    if args.homogenize:
        work_ring = ring.extend(_fresh_name(ring.var_names))
        polys = [homogenize(f, work_ring) for f in polys]
    else:
        for n, f in enumerate(polys):
            if not f.is_homogeneous():
                raise InputError(f"polynomial is not homogeneous (use --homogenize): {format_polynomial(f)}")

    dumps: list[str] = []
    hook = (lambda d, before, after: dumps.append(format_matrix(d, before, work_ring))) if args.dump_matrices else None
    cfg = RunConfig(max_degree=args.max_degree, certify=args.certify, emit_trace=bool(args.trace), matrix_hook=hook)
    result = f45(polys, work_ring, cfg)
    basis = interreduce(result.basis) if args.reduce else result.basis

    shown = basis
    if args.homogenize:
        shown = [dehomogenize(f, ring) for f in basis]
        print("note: output was dehomogenized and need not be a Gröbner basis of the original ideal", file=sys.stderr)
    out = sys.stdout
    for f in shown:
        out.write(format_polynomial(f, ring) + "\n")

    if args.stats:
        Path(args.stats).write_text(stats_to_json(result.stats))
    if args.trace:
        Path(args.trace).write_text(result.trace.text())
    if args.dump_matrices:
        Path(args.dump_matrices).write_text("".join(dumps))

    code = EXIT_OK
    if args.certify:
        violations = certify_verify(result.store, result.reps, result.inputs)
        for v in violations:
            print(f"admissibility violation: {v}", file=sys.stderr)
        if violations:
            code = EXIT_FALSE
    if not result.complete:
        print(f"stopped at degree cap {args.max_degree}; output is incomplete", file=sys.stderr)
        return code or EXIT_CAP
    if args.verify and not is_groebner(basis):
        print("verification failed: output is not a Gröbner basis", file=sys.stderr)
        code = EXIT_FALSE
    return code


def cmd_check(args) -> int:
    doc = _load(args.file)
    return EXIT_OK if is_groebner(doc.polys) else EXIT_FALSE


def cmd_reduce(args) -> int:
    doc = _load(args.file)
    for f in interreduce(doc.polys):
        sys.stdout.write(format_polynomial(f, doc.ring) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="f45", description="Gröbner bases over prime fields with F4/5.")
    sub = parser.add_subparsers(dest="command", required=True)

    gb = sub.add_parser("gb", help="compute a Gröbner basis")
    gb.add_argument("file")
    gb.add_argument("--reduce", action="store_true", help="interreduce the output")
    gb.add_argument("--verify", action="store_true", help="check the output with the Buchberger oracle")
    gb.add_argument("--certify", action="store_true", help="track module representations and check admissibility")
    gb.add_argument("--max-degree", type=int, default=None)
    gb.add_argument("--homogenize", action="store_true", help="homogenize inputs with a new last variable")
    gb.add_argument("--stats", metavar="PATH", help="write run statistics as JSON")
    gb.add_argument("--trace", metavar="PATH", help="write the event trace")
    gb.add_argument("--dump-matrices", metavar="PATH", help="write per-degree matrix snapshots")
    gb.set_defaults(func=cmd_gb)

    check = sub.add_parser("check", help="exit 0 iff the file's polynomials form a Gröbner basis")
    check.add_argument("file")
    check.set_defaults(func=cmd_check)

    red = sub.add_parser("reduce", help="print the interreduction of the file's polynomials")
    red.add_argument("file")
    red.set_defaults(func=cmd_reduce)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    sys.exit(run_cli())
