"""Command-line driver.

Subcommands: count, search, verify, density-table, slices.
Exit codes: 0 success, 2 usage or invalid q, 3 size guard, 4 search
exhausted, 5 verification failure.  MNA_JOBS sets the default for --jobs.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from typing import Callable, Sequence

from .assoc import sigma_count
from .charside import sigma_count_D, slice_counters
from .errors import BadSliceParam, NotOddPrimePower, SearchExhausted, TooLarge
from .field import Field, make_field
from .quasigroup import sigma_cardinality
from .reports import (
    DENSITY_HEADER,
    SigmaReport,
    density_row,
    rows_to_csv,
    to_json,
)
from .search import search_mna
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_EXHAUSTED = 4
EXIT_VERIFY = 5


def _default_jobs() -> int:
    env = os.environ.get("MNA_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def count_report(
    q: int,
    method: str,
    jobs: int = 1,
    force: bool = False,
    seed: int | None = None,
    time_fn: Callable[[], float] = time.perf_counter,
) -> SigmaReport:
    """Count sigma(q) by the chosen method and wrap it in a report."""
    F = make_field(q)
    start = time_fn()
    if method == "D":
        sigma = sigma_count_D(F, jobs=jobs)
    else:
        sigma = sigma_count(F, method, jobs=jobs, force=force)
    seconds = time_fn() - start
    return SigmaReport.build(
        q, sigma_cardinality(q), sigma, method, round(seconds, 3), seed
    )


def _cmd_count(args: argparse.Namespace) -> int:
    report = count_report(args.q, args.method, jobs=args.jobs, force=args.force)
    if args.format == "json":
        _emit(to_json(report.to_dict()), args.out)
    else:
        row = report.to_dict()
        header = tuple(k for k in row)
        _emit(rows_to_csv(header, [row]), args.out)
    return EXIT_OK


def _cmd_search(args: argparse.Namespace) -> int:
    F = make_field(args.q)
    cert = search_mna(F, args.seed, args.max_attempts)
    if args.format == "json":
        _emit(to_json(cert.to_dict()), args.out)
    else:
        row = cert.to_dict()
        row["methods"] = "+".join(cert.methods)
        _emit(rows_to_csv(tuple(row), [row]), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.qmax, jobs=args.jobs)
    payload = report.to_dict()
    if args.format == "json":
        _emit(to_json(payload), args.out)
    else:
        header = ("name", "q", "ok", "detail")
        _emit(rows_to_csv(header, payload["checks"]), args.out)
    return EXIT_OK if report.ok else EXIT_VERIFY


def _cmd_density_table(args: argparse.Namespace) -> int:
    rows = []
    for q in sorted(args.q):
        try:
            report = count_report(q, args.method, jobs=args.jobs, force=args.force)
            rows.append(density_row(report))
        except (NotOddPrimePower, TooLarge) as exc:
            row = dict.fromkeys(DENSITY_HEADER)
            row["q"] = q
            row["sigma_count_method"] = args.method
            row["error"] = f"{type(exc).__name__}: {exc}"
            rows.append(row)
            print(f"q={q} failed: {exc}", file=sys.stderr)
    if args.format == "json":
        _emit(to_json(rows), args.out)
    else:
        _emit(rows_to_csv(DENSITY_HEADER, rows), args.out)
    return EXIT_OK


def _slice_rows(F: Field, cs: list[int]) -> list[dict]:
    rows = []
    for c in cs:
        sc = slice_counters(F, c)
        row: dict = {"q": sc.q, "mod4": sc.mod4, "c": sc.c,
                     "admissible": sc.admissible}
        for key, val in sc.counts.items():
            row[key] = val
            if sc.bounds is not None:
                b = sc.bounds[key]
                row[f"{key}_target"] = round(b.target, 6)
                row[f"{key}_radius"] = round(b.radius, 6)
                row[f"{key}_ok"] = b.ok
        rows.append(row)
    return rows


def _cmd_slices(args: argparse.Namespace) -> int:
    F = make_field(args.q)
    if args.c is not None:
        cs = [args.c]
    else:
        cs = [
            c
            for c in range(2, F.q)
            if F.chi(c) == 1 and (F.q % 4 == 1 or F.chi(F.sub(1, c)) == 1)
        ]
    rows = _slice_rows(F, cs)
    if args.format == "json":
        _emit(to_json(rows), args.out)
    else:
        header: tuple[str, ...] = ()
        for row in rows:
            if len(row) > len(header):
                header = tuple(row)
        _emit(rows_to_csv(header, rows), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mnaq",
        description="Quasigroups from quadratic orthomorphisms: exact "
        "maximal-nonassociativity counting, search and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, fmt_default: str) -> None:
        p.add_argument("--jobs", type=int, default=_default_jobs(),
                       help="worker processes (default: MNA_JOBS or 1)")
        p.add_argument("--out", type=str, default=None, help="output path")
        p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
        p.add_argument("--force", action="store_true",
                       help="override method size guards")

    p_count = sub.add_parser("count", help="count sigma(q)")
    p_count.add_argument("--q", type=int, required=True)
    p_count.add_argument("--method", choices=("A", "B", "Bscaled", "C", "D"),
                         default="D")
    add_common(p_count, "json")
    p_count.set_defaults(func=_cmd_count)

    p_search = sub.add_parser("search", help="random search for an MNA pair")
    p_search.add_argument("--q", type=int, required=True)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument("--max-attempts", type=int, default=10_000)
    add_common(p_search, "json")
    p_search.set_defaults(func=_cmd_search)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("--suite", choices=sorted(SUITES), required=True)
    p_verify.add_argument("--qmax", type=int, default=49)
    add_common(p_verify, "json")
    p_verify.set_defaults(func=_cmd_verify)

    p_density = sub.add_parser("density-table", help="sigma/q^2 table")
    p_density.add_argument("--q", type=int, action="append", required=True,
                           help="repeatable field order")
    p_density.add_argument("--method", choices=("A", "B", "Bscaled", "C", "D"),
                           default="D")
    add_common(p_density, "csv")
    p_density.set_defaults(func=_cmd_density_table)

    p_slices = sub.add_parser("slices", help="slice counters with bounds")
    p_slices.add_argument("--q", type=int, required=True)
    p_slices.add_argument("--c", type=int, default=None)
    add_common(p_slices, "csv")
    p_slices.set_defaults(func=_cmd_slices)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotOddPrimePower as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TooLarge, BadSliceParam) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SearchExhausted as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED


if __name__ == "__main__":
    raise SystemExit(main())
