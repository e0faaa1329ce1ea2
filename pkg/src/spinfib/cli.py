"""Command-line front end.

Exit codes: 0 success, 1 verification failure or OEIS mismatch, 2 usage,
3 domain restriction, 4 missing or unreachable sequence data.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Sequence

from . import grid, kernel, oeis, sums, verify
from ._bigint import decimal_digits, to_decimal
from .grid import BoundaryConvention, Prop3Variant, SpinSeeds
from .sums import Region

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN, EXIT_DATA = 0, 1, 2, 3, 4

_COLUMN_ALIASES = {
    "lower": Region.LOWER_STRICT,
    "upper": Region.UPPER_INCL_DIAG,
    "triangle": Region.LOWER_INCL_DIAG,
    **{r.value: r for r in Region},
}


class UsageError(Exception):
    pass


class DomainFailure(Exception):
    pass


def _seeds(text: str) -> SpinSeeds:
    try:
        return SpinSeeds.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _region(text: str) -> Region:
    try:
        return _COLUMN_ALIASES[text]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown region {text!r}; choose from {', '.join(r.value for r in Region)}"
        ) from None


def _emit(out, fmt: str, text: str, payload, rows: list[list] | None = None) -> None:
    if fmt == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows or [])
        out.write(buf.getvalue())
    else:
        out.write(text + "\n")


def cmd_grid(args, out) -> int:
    if not 1 <= args.size <= grid.MAX_RENDER_SIZE:
        raise UsageError(f"--size must be in [1, {grid.MAX_RENDER_SIZE}]")
    rows = grid.grid_render(args.seeds, args.size, args.convention)
    cells = [[to_decimal(v) for v in row] for row in rows]
    width = max(len(c) for row in cells for c in row)
    text = "\n".join(" ".join(c.rjust(width) for c in row) for row in reversed(cells))
    payload = {
        "seeds": args.seeds.as_list(),
        "size": args.size,
        "convention": args.convention.value,
        "rows": cells,
    }
    _emit(out, args.format, text, payload, cells)
    return EXIT_OK


def cmd_eval(args, out, err) -> int:
    m, n, seeds = args.m, args.n, args.seeds
    if m < 0 or n < 0:
        raise UsageError("m and n must be non-negative")
    variant = None
    if args.method == "closed":
        value = grid.grid_eval_closed(seeds, m, n)
    elif args.method == "recurrence":
        value = grid.grid_eval_recurrence(seeds, m, n, args.convention)
    else:
        variant = args.variant
        try:
            value = grid.prop3_decompose(seeds, m, n, variant)
        except grid.DomainError as exc:
            raise DomainFailure(str(exc)) from None
        if variant is Prop3Variant.PAPER_LITERAL:
            oracle = grid.grid_eval_recurrence(seeds, m, n)
            if oracle != value:
                err.write(
                    f"warning: paper-literal decomposition gives {value}, "
                    f"the recurrence gives {oracle}\n"
                )
    payload = {
        "method": args.method,
        "m": m,
        "n": n,
        "seeds": seeds.as_list(),
        "convention": args.convention.value,
        "variant": variant.value if variant else None,
        "value": to_decimal(value),
    }
    rows = [["method", "m", "n", "value"], [args.method, m, n, to_decimal(value)]]
    _emit(out, args.format, to_decimal(value), payload, rows)
    return EXIT_OK


def cmd_sum(args, out) -> int:
    seeds, region, n = args.seeds, args.region, args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    wants_closed = args.closed or args.verify
    if wants_closed and (seeds != grid.FIBONACCI_SEEDS or region not in (
            Region.LOWER_INCL_DIAG, Region.FULL_SQUARE)):
        raise DomainFailure(
            "closed forms exist only for seeds 0,1,1,1 with region triangle-incl or square"
        )
    payload = {"seeds": seeds.as_list(), "region": region.value, "n": n,
               "convention": args.convention.value}
    if args.verify:
        direct = sums.region_sum(seeds, region, n, args.convention)
        closed = sums.fibonacci_closed_sum(region, n)
        diff = closed - direct
        payload.update(direct=to_decimal(direct), closed=to_decimal(closed),
                       difference=to_decimal(diff))
        text = f"direct: {to_decimal(direct)}\nclosed: {to_decimal(closed)}\ndifference: {to_decimal(diff)}"
        rows = [["direct", "closed", "difference"],
                [to_decimal(direct), to_decimal(closed), to_decimal(diff)]]
        _emit(out, args.format, text, payload, rows)
        return EXIT_OK if diff == 0 else EXIT_FAIL
    if args.closed:
        value = sums.fibonacci_closed_sum(region, n)
    else:
        value = sums.region_sum(seeds, region, n, args.convention)
    payload.update(method="closed" if args.closed else "direct", value=to_decimal(value))
    rows = [["region", "n", "value"], [region.value, n, to_decimal(value)]]
    _emit(out, args.format, to_decimal(value), payload, rows)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.max < 1:
        raise UsageError("--max must be >= 1")
    results = verify.run(args.suite, args.max)
    lines, rows = [], [["suite", "property", "passed", "checked", "counterexample", "note"]]
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(f"{mark} {r.suite}: {r.name} ({r.checked} cases)")
        if r.counterexample:
            lines.append(f"     counterexample: {r.counterexample}")
        if r.note:
            lines.append(f"     note: {r.note}")
        rows.append([r.suite, r.name, r.passed, r.checked, r.counterexample or "", r.note or ""])
    payload = [
        {"suite": r.suite, "property": r.name, "passed": r.passed, "checked": r.checked,
         "counterexample": r.counterexample, "note": r.note}
        for r in results
    ]
    _emit(out, args.format, "\n".join(lines), payload, rows)
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def _report_line(r: oeis.MatchReport) -> str:
    head = f"{r.verdict.value:<11} {str(r.row_seeds):<8} {r.region.value:<13} {r.anumber}(n{r.claimed_shift:+d}) [{r.convention.value}]"
    if r.verdict is oeis.Verdict.ERROR:
        return f"{head} {r.error}"
    tail = f" compared {r.compared_count}"
    if r.verdict is oeis.Verdict.SHIFT_FOUND:
        tail += f", matches at n{r.found_shift:+d}"
    elif r.verdict is oeis.Verdict.MISMATCH and r.first_divergence:
        n, expected, actual = r.first_divergence
        tail += f", first divergence at n={n}: sequence {expected}, sum {actual}"
    return head + tail




def cmd_oeis_check(args, out) -> int:
    fetch = {"offline": not args.online}
    if args.count < oeis.MIN_OVERLAP:
        raise UsageError(f"--count must be >= {oeis.MIN_OVERLAP}")
    if args.all:
        cells = list(oeis.TABLE1)
    else:
        missing = [f for f in ("row", "column", "anum") if getattr(args, f) is None]
        if missing:
            raise UsageError("give --all or all of --row, --column, --anum")
        try:
            oeis.check_anumber(args.anum)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        cells = [oeis.TableCell(args.row, args.column, args.anum, args.shift)]
    convs = list(BoundaryConvention) if args.both_conventions else [args.convention]
    per_conv = {c: oeis.run_full_table(args.count, c, cells=cells, **fetch) for c in convs}
    reports = [per_conv[c][i] for i in range(len(cells)) for c in convs]

    lines = [_report_line(r) for r in reports]
    resolutions = [oeis.CellResolution(cell, {c: per_conv[c][i] for c in convs})
                   for i, cell in enumerate(cells)]
    if args.both_conventions:
        lines.append("")
        for res in resolutions:
            found = ", ".join(f"{c.value} at n{s:+d}" for c, s in res.matches) or "none"
            lines.append(f"{res.status:<16} {str(res.cell.seeds):<8} {res.cell.region.value:<13} "
                         f"{res.cell.anumber}(n{res.cell.shift:+d}) -> {found}")
    rows = [["seeds", "region", "anumber", "claimed_shift", "convention", "verdict",
             "found_shift", "compared", "error"]]
    rows += [[str(r.row_seeds), r.region.value, r.anumber, r.claimed_shift, r.convention.value,
              r.verdict.value, "" if r.found_shift is None else r.found_shift,
              r.compared_count, r.error or ""] for r in reports]
    payload = {"reports": [r.to_dict() for r in reports],
               "cells": [res.to_dict() for res in resolutions]}
    _emit(out, args.format, "\n".join(lines), payload, rows)

    if any(r.verdict is oeis.Verdict.ERROR for r in reports):
        return EXIT_DATA
    if all(res.matches for res in resolutions):
        return EXIT_OK
    return EXIT_FAIL


def cmd_oeis_fetch(args, out) -> int:
    bodies = oeis.fetch_many(args.anumbers, offline=not args.online)
    status = EXIT_OK
    for anum, body in bodies.items():
        if isinstance(body, Exception):
            out.write(f"{anum}: error: {body}\n")
            status = EXIT_DATA
            continue
        record = oeis.parse_bfile(body, anum)
        out.write(f"{anum}: offset {record.offset}, {len(record.terms)} terms\n")
    return status


def cmd_bench(args, out) -> int:
    n = args.n
    start = time.perf_counter()
    if args.target == "fib":
        if not 0 <= n <= kernel.get_max_index():
            raise UsageError(f"n must be in [0, {kernel.get_max_index()}]")
        value = kernel.fib(n)
        label = f"fib({n})"
    else:
        if not 1 <= n <= grid.DEFAULT_GRID_BOUND:
            raise UsageError(f"n must be in [1, {grid.DEFAULT_GRID_BOUND}]")
        if args.target == "grid":
            value = grid.grid_table(grid.FIBONACCI_SEEDS, n)[n][n]
            label = f"grid {n}x{n} (corner value)"
        else:
            value = sums.sum_sequence(grid.FIBONACCI_SEEDS, Region.FULL_SQUARE, n + 1)[-1]
            label = f"square sums up to {n}"
    elapsed = time.perf_counter() - start
    digits = decimal_digits(value)
    payload = {"target": args.target, "n": n, "seconds": elapsed, "digits": digits}
    rows = [["target", "n", "seconds", "digits"], [args.target, n, f"{elapsed:.6f}", digits]]
    _emit(out, args.format, f"{label}: {elapsed:.4f} s, {digits} digits", payload, rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--convention", type=BoundaryConvention, default=BoundaryConvention.B_WINS,
                        choices=list(BoundaryConvention), metavar="{b-wins,d-wins}")
    common.add_argument("--max-index", type=int, default=None,
                        help="cap on Fibonacci indices (default 10^7)")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--offline", dest="online", action="store_false",
                      help="use bundled b-file fixtures (default)")
    mode.add_argument("--online", dest="online", action="store_true",
                      help="download b-files from OEIS, with caching")
    common.set_defaults(online=False)

    seeds = argparse.ArgumentParser(add_help=False)
    seeds.add_argument("--seeds", type=_seeds, default=grid.FIBONACCI_SEEDS,
                       help="a,b,c,d (default 0,1,1,1)")

    parser = argparse.ArgumentParser(prog="spinfib", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("grid", parents=[common, seeds], help="render a grid")
    p.add_argument("--size", type=int, required=True)

    p = sub.add_parser("eval", parents=[common, seeds], help="evaluate one cell")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--method", choices=("closed", "recurrence", "prop3"), default="closed")
    p.add_argument("--variant", type=Prop3Variant, default=Prop3Variant.CORRECTED,
                   choices=list(Prop3Variant), metavar="{corrected,paper-literal}")

    p = sub.add_parser("sum", parents=[common, seeds], help="sum a region")
    p.add_argument("--region", type=_region, required=True,
                   help="lower-strict, upper-incl, triangle-incl or square")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--closed", action="store_true", help="use the closed form")
    p.add_argument("--verify", action="store_true", help="print direct and closed sums")

    p = sub.add_parser("verify", parents=[common], help="run identity sweeps")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--max", type=int, default=60)

    p = sub.add_parser("oeis", help="audit the related-sequences table")
    osub = p.add_subparsers(dest="oeis_command", required=True)
    c = osub.add_parser("check", parents=[common])
    c.add_argument("--all", action="store_true")
    c.add_argument("--row", type=_seeds)
    c.add_argument("--column", type=_region)
    c.add_argument("--anum")
    c.add_argument("--shift", type=int, default=0)
    c.add_argument("--count", type=int, default=20)
    c.add_argument("--both-conventions", action="store_true")
    f = osub.add_parser("fetch", parents=[common], help="fetch b-files into the cache")
    f.add_argument("anumbers", nargs="+")

    p = sub.add_parser("bench", parents=[common], help="time a kernel")
    p.add_argument("target", choices=("fib", "grid", "sums"))
    p.add_argument("n", type=int)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_index is not None:
        kernel.set_max_index(args.max_index)
    try:
        if args.command == "grid":
            return cmd_grid(args, out)
        if args.command == "eval":
            return cmd_eval(args, out, err)
        if args.command == "sum":
            return cmd_sum(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        if args.command == "oeis":
            if args.oeis_command == "fetch":
                return cmd_oeis_fetch(args, out)
            return cmd_oeis_check(args, out)
        return cmd_bench(args, out)
    except UsageError as exc:
        parser.print_usage(err)
        err.write(f"spinfib: error: {exc}\n")
        return EXIT_USAGE
    except kernel.IndexOutOfBounds as exc:
        err.write(f"spinfib: error: {exc}\n")
        return EXIT_USAGE
    except DomainFailure as exc:
        err.write(f"spinfib: domain error: {exc}\n")
        return EXIT_DOMAIN
    except oeis.OeisDataError as exc:
        err.write(f"spinfib: data error: {exc}\n")
        return EXIT_DATA
