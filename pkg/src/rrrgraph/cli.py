"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 unreadable or invalid input graph.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence, TextIO

from .cases import CaseClass, choose_u0, classify
from .enumeration import code_to_graph, unicyclic_codes, unicyclic_shards
from .errors import GraphError, NBelowMinimum, NotUnicyclic, ParseError, UndefinedTerm
from .families import FamilyId, build
from .formats import FORMATS, guess_format, parse_graph, render_graph, render_graph6
from .indices import FUNCTIONALS, index
from .radical import max_precision, to_decimal
from .verify import crossover_table, threshold_table, verify_theorem

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

FAST_MAX_N = 16
EXTENDED_N = (17, 18)


class UsageError(Exception):
    pass


def _read_input(path: str, fmt: str | None):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_graph(text, fmt or ("edgelist" if path == "-" else guess_format(path)))


def cmd_index(args, out: TextIO) -> int:
    g = _read_input(args.input, args.format)
    value = index(g, FUNCTIONALS[args.index])
    out.write(f"{value}\n{to_decimal(value, args.digits)}\n")
    return EXIT_OK


def cmd_gen(args, out: TextIO) -> int:
    try:
        g = build(args.family, args.n)
    except NBelowMinimum as exc:
        raise UsageError(str(exc)) from exc
    out.write(render_graph(g, args.format))
    return EXIT_OK


def _enum_chunk(job):
    n, shards, cls = job
    lines = []
    count = 0
    for shard in shards:
        for code in unicyclic_codes(n, shard):
            g = code_to_graph(code)
            if cls is not None and classify(g) is not cls:
                continue
            count += 1
            lines.append(render_graph6(g))
    return count, lines


def cmd_enum(args, out: TextIO) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    cls = CaseClass(args.cls) if args.cls else None
    if args.jobs > 1:
        shards = unicyclic_shards(args.n)
        size = max(1, len(shards) // (8 * args.jobs))
        jobs = [(args.n, shards[i : i + size], cls) for i in range(0, len(shards), size)]
        total = 0
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            for count, lines in pool.map(_enum_chunk, jobs):
                total += count
                if not args.count_only:
                    for line in lines:
                        out.write(line + "\n")
        if args.count_only:
            out.write(f"{total}\n")
        return EXIT_OK
    total = 0
    for code in unicyclic_codes(args.n):
        if cls is None and args.count_only:
            total += 1
            continue
        g = code_to_graph(code)
        if cls is not None and classify(g) is not cls:
            continue
        total += 1
        if not args.count_only:
            out.write(render_graph6(g) + "\n")
    if args.count_only:
        out.write(f"{total}\n")
    return EXIT_OK


def cmd_classify(args, out: TextIO) -> int:
    g = _read_input(args.input, args.format)
    cls = classify(g)
    if cls is CaseClass.PURE_CYCLE:
        out.write(f"{cls}\n")
        return EXIT_OK
    ctx = choose_u0(g)
    out.write(f"{cls}\nu0={ctx.u0} v0={ctx.v0} x={ctx.x} p={ctx.p}\n")
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.max_n < 4:
        raise UsageError("--max-n must be at least 4")
    if args.max_n > FAST_MAX_N and not args.extended:
        raise UsageError(f"--max-n above {FAST_MAX_N} requires --extended")
    extra = EXTENDED_N if args.extended else ()

    def progress(row):
        flag = "PASS" if row.passed else "FAIL"
        out.write(
            f"{flag} n={row.n:<3d} class={row.cls:<6s} count={row.count:<8d} "
            f"min={row.observed}  expected={row.expected}  unique={row.unique}\n"
        )
        out.flush()

    report = verify_theorem(
        args.max_n,
        class_max_n=args.class_max_n,
        extra_n=extra,
        jobs=args.jobs,
        tree_max_n=args.tree_max_n,
        progress=progress,
    )
    out.write(
        f"{'PASS' if report.tree_floor else 'FAIL'} tree floor: RRR(T) >= 0, "
        f"zero exactly on stars, n <= {args.tree_max_n}\n"
    )
    if args.out:
        Path(args.out).write_text(report.to_csv())
    if args.json:
        Path(args.json).write_text(report.to_json())
    out.write("all checks passed\n" if report.passed else "verification FAILED\n")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_crossover(args, out: TextIO) -> int:
    lo, hi = args.lo, args.hi
    if lo < 5 or hi < lo:
        raise UsageError("need 5 <= --from <= --to")
    hplus = dict(crossover_table(lo, hi))
    h = dict(threshold_table(max(lo, 6), hi)) if hi >= 6 else {}
    out.write("n\tS+ vs H+\tS+ vs H\n")
    for n in range(lo, hi + 1):
        out.write(f"{n}\t{hplus[n]}\t{h.get(n, '-')}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rrrgraph",
        description="Exact degree-based indices and minimum-RRR verification for unicyclic graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("index", help="compute a topological index of a graph")
    p.add_argument("--index", required=True, choices=sorted(FUNCTIONALS))
    p.add_argument("--in", dest="input", required=True, help="graph file, or - for stdin")
    p.add_argument("--format", choices=FORMATS, help="default: by extension (.g6 is graph6)")
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("gen", help="print a member of a named family")
    p.add_argument("--family", required=True, choices=[f.value for f in FamilyId])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enum", help="list connected unicyclic graphs as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", choices=[c.value for c in CaseClass])
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("classify", help="case class and pendant witness of a unicyclic graph")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--format", choices=FORMATS)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="exhaustively check the minimum-RRR theorem")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--extended", action="store_true", help=f"also run n = {EXTENDED_N}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--class-max-n", type=int, default=12)
    p.add_argument("--tree-max-n", type=int, default=10)
    p.add_argument("--out", help="CSV report path")
    p.add_argument("--json", help="JSON report path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("crossover", help="exact sign tables of S_n+ against H_n+ and H_n")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.set_defaults(func=cmd_crossover)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", 1) < 1:
        err.write("rrrgraph: --jobs must be at least 1\n")
        return EXIT_USAGE
    if getattr(args, "digits", 1) < 0:
        err.write("rrrgraph: --digits must be nonnegative\n")
        return EXIT_USAGE
    try:
        max_precision()
    except ValueError as exc:
        err.write(f"rrrgraph: {exc}\n")
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"rrrgraph {args.command}: {exc}\n")
        return EXIT_USAGE
    except (ParseError, GraphError, NotUnicyclic, UndefinedTerm) as exc:
        err.write(f"rrrgraph {args.command}: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
