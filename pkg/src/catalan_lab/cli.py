"""Command-line front end.

    catalan-lab verify --suite identities --l-max 10 --m-max 30 --n-max 10
    catalan-lab fg 0 2
    catalan-lab oracle 5 0 2
    catalan-lab table --suite fg --d-max 3 --r-max 3 --out fg.csv
    catalan-lab series-check --l-max 8 --n-max 8

Exit status: 0 all checks pass, 1 some check failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .harness import DEFAULTS, SUITES, SweepConfig, default_jobs, run_suite, table_rows
from .modp.congruences import oracle_power_sum
from .modp.constants import fg_constants
from .primes import is_prime
from .report import canonical, render

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_corrupt(text: str):
    check, _, rest = text.partition(":")
    params = []
    for item in filter(None, rest.split(",")):
        name, _, value = item.partition("=")
        params.append((name, int(value)))
    return check, tuple(params)


def _add_bounds(p: argparse.ArgumentParser, names):
    for name in names:
        p.add_argument(f"--{name.replace('_', '-')}", type=int, default=None, dest=name)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="catalan-lab", description="Exact checks of Catalan-number identities and congruences.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, required=True)
    _add_bounds(v, DEFAULTS)
    v.add_argument("--classes", default="1,2", help="residue classes of p mod 3; '3' adds p = 3")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", default=None)
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--corrupt", action="append", default=[], help=argparse.SUPPRESS)

    s = sub.add_parser("series-check", help="replay the generating-function proof")
    _add_bounds(s, ("l_max", "n_max"))
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.add_argument("--out", default=None)
    s.add_argument("--jobs", type=int, default=None)
    s.add_argument("--corrupt", action="append", default=[], help=argparse.SUPPRESS)

    f = sub.add_parser("fg", help="print the constants F(d, r) and G(d, r)")
    f.add_argument("d", type=int)
    f.add_argument("r", type=int)
    f.add_argument("--format", choices=("json", "csv"), default="json")

    o = sub.add_parser("oracle", help="sum_{k=1}^{p-1} k^r C_{k+d} mod p by direct summation")
    o.add_argument("p", type=int)
    o.add_argument("d", type=int)
    o.add_argument("r", type=int)

    t = sub.add_parser("table", help="CSV table of F/G or harmonic constants")
    t.add_argument("--suite", choices=("fg", "harmonic"), required=True)
    _add_bounds(t, ("d_max", "r_max"))
    t.add_argument("--out", default=None)
    t.add_argument("--jobs", type=int, default=None)
    return parser


def _emit(text: str, out: str | None, stdout):
    if out is None:
        stdout.write(text)
        return
    try:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc}") from None


def _sweep_config(args, suite: str) -> SweepConfig:
    bounds = {k: getattr(args, k, None) for k in DEFAULTS}
    bounds = {k: v for k, v in bounds.items() if v is not None}
    classes = frozenset(c.strip() for c in getattr(args, "classes", "1,2").split(",") if c.strip())
    try:
        corrupt = tuple(_parse_corrupt(c) for c in args.corrupt)
    except ValueError:
        raise UsageError("malformed --corrupt spec") from None
    cfg = SweepConfig(
        suite=suite,
        classes=classes,
        jobs=args.jobs if args.jobs is not None else default_jobs(),
        corrupt=corrupt,
        **bounds,
    )
    try:
        cfg.validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return cfg


def _cmd_verify(args, suite, stdout) -> int:
    cfg = _sweep_config(args, suite)
    records, skipped = run_suite(cfg)
    _emit(render(records, args.format, skipped), args.out, stdout)
    return EXIT_FAIL if any(not r.passed for r in records) else EXIT_OK


def _cmd_fg(args, stdout) -> int:
    if args.d < 0 or args.r < 0:
        raise UsageError("d and r must be nonnegative")
    f = canonical(fg_constants(args.d, args.r, 1))
    g = canonical(fg_constants(args.d, args.r, 2))
    if args.format == "json":
        stdout.write(json.dumps({"d": args.d, "r": args.r, "F": f, "G": g}, separators=(",", ":")) + "\n")
    else:
        stdout.write(f"d,r,F,G\n{args.d},{args.r},{f},{g}\n")
    return EXIT_OK


def _cmd_oracle(args, stdout) -> int:
    if not is_prime(args.p):
        raise UsageError(f"{args.p} is not prime")
    if args.d < 0 or args.r < 0 or args.p <= max(args.d, args.r):
        raise UsageError("need 0 <= d, r < p")
    stdout.write(f"{oracle_power_sum(args.p, args.d, args.r)}\n")
    return EXIT_OK


def _cmd_table(args, stdout) -> int:
    for name in ("d_max", "r_max"):
        v = getattr(args, name)
        if v is not None and v < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    header, rows = table_rows(args.suite, args.d_max, args.r_max, jobs)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    _emit(buf.getvalue(), args.out, stdout)
    return EXIT_OK


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "verify":
            return _cmd_verify(args, args.suite, stdout)
        if args.command == "series-check":
            return _cmd_verify(args, "series", stdout)
        if args.command == "fg":
            return _cmd_fg(args, stdout)
        if args.command == "oracle":
            return _cmd_oracle(args, stdout)
        if args.command == "table":
            return _cmd_table(args, stdout)
    except UsageError as exc:
        stderr.write(f"catalan-lab: error: {exc}\n")
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
