"""Command-line front end.

    catalan-tr count --g 1 --n 1 --mu 4
    catalan-tr transform --g 0 --n 3
    catalan-tr specialize --g 1 --n 1
    catalan-tr intersections --g 2 --n 1
    catalan-tr wick --N 2
    catalan-tr verify --suite all --level 3

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Sequence

from .algebra import poly_to_records, rational_to_str
from .cache import ENV_VAR, DiskCache, default_cache_dir
from .catalan import CountKey, catalan_gn, d_gn
from .laplace import UnstableError, compute_F, configure_store, intersection_numbers, principal_specialize, require_stable
from .ribbon import DEFAULT_BUDGET, HARD_CEILING, ResourceLimitError
from .suites import SUITES, run_suite
from .wick import wick_matrix_average

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _parse_mu(text: str) -> tuple[int, ...]:
    try:
        mu = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--mu expects comma-separated integers, got {text!r}") from None
    if any(m < 0 for m in mu):
        raise argparse.ArgumentTypeError("vertex degrees must be non-negative")
    return mu


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cache", metavar="DIR", default=None,
                        help=f"directory for cached F_{{g,n}} (default: ${ENV_VAR})")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verification")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help=f"half-edge budget for brute-force enumeration (at most {HARD_CEILING})")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="catalan-tr", description="Generalized Catalan numbers and their Laplace transforms.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="C_{g,n}(mu) and D_{g,n}(mu)")
    c.add_argument("--g", type=int, required=True)
    c.add_argument("--n", type=int)
    c.add_argument("--mu", type=_parse_mu, required=True)

    for name, helptext in (("transform", "the Laurent polynomial F_{g,n}"),
                           ("specialize", "F_{g,n}(t,...,t) as a polynomial in s"),
                           ("intersections", "psi-class intersection numbers from the top part")):
        q = sub.add_parser(name, parents=[common], help=helptext)
        q.add_argument("--g", type=int, required=True)
        q.add_argument("--n", type=int, required=True)

    w = sub.add_parser("wick", parents=[common], help="exact Gaussian matrix average for small N")
    w.add_argument("--N", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    v.add_argument("--level", type=int, default=3, help="largest 2g - 2 + n to check")
    return p


# ---------------------------------------------------------------- emitters

def _emit(records: list[dict[str, Any]], columns: Sequence[str], fmt: str, envelope: dict[str, Any]) -> str:
    if fmt == "json":
        return json.dumps({**envelope, "rows": records})
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(columns)
    for r in records:
        wr.writerow([_csv_cell(r[c]) for c in columns])
    return buf.getvalue().rstrip("\n")


def _csv_cell(v: Any) -> str:
    if isinstance(v, list):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


# ---------------------------------------------------------------- commands

def cmd_count(args) -> tuple[str, int]:
    mu = args.mu
    if args.n is not None and args.n != len(mu):
        raise UsageError(f"--n {args.n} does not match {len(mu)} entries in --mu")
    try:
        key = CountKey(args.g, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    C = catalan_gn(key.g, key.mu)
    D = rational_to_str(d_gn(key.g, key.mu)) if 0 not in key.mu else None
    rec = {"g": key.g, "n": key.n, "mu": list(key.mu), "C": str(C), "D": D}
    if args.format == "json":
        return json.dumps(rec), EXIT_OK
    return _emit([rec], ["g", "n", "mu", "C", "D"], "csv", {}), EXIT_OK


def _stable(args) -> None:
    try:
        require_stable(args.g, args.n)
    except UnstableError as exc:
        raise UsageError(str(exc)) from None
    if args.g < 0 or args.n < 1:
        raise UsageError("need g >= 0 and n >= 1")


def cmd_transform(args) -> tuple[str, int]:
    _stable(args)
    F = compute_F(args.g, args.n)
    rows = poly_to_records(F.poly)
    env = {"g": args.g, "n": args.n, "variables": [f"t{i + 1}" for i in range(args.n)]}
    return _emit(rows, ["exp", "coeff"], args.format, env), EXIT_OK


def cmd_specialize(args) -> tuple[str, int]:
    _stable(args)
    S = principal_specialize(compute_F(args.g, args.n))
    rows = poly_to_records(S)
    return _emit(rows, ["exp", "coeff"], args.format, {"g": args.g, "n": args.n, "variables": ["s"]}), EXIT_OK


def cmd_intersections(args) -> tuple[str, int]:
    _stable(args)
    table = intersection_numbers(args.g, args.n)
    rows = [{"d": list(d), "value": rational_to_str(v)} for d, v in table.items()]
    return _emit(rows, ["d", "value"], args.format, {"g": args.g, "n": args.n}), EXIT_OK


def cmd_wick(args) -> tuple[str, int]:
    if args.N < 1:
        raise UsageError("--N must be a positive integer")
    S = wick_matrix_average(args.N)
    return _emit(poly_to_records(S), ["exp", "coeff"], args.format, {"N": args.N, "variables": ["s"]}), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.level < 1:
        raise UsageError("--level must be at least 1")
    reports = run_suite(args.suite, args.level, args.jobs, args.budget)
    rows = []
    for rep in reports:
        for c in rep.checks:
            rows.append({"suite": rep.suite, "check": c.id,
                         "g": c.cell[0] if c.cell else None, "n": c.cell[1] if c.cell else None,
                         "pass": c.passed, "detail": c.detail})
    passed = all(r.passed for r in reports)
    env = {"suite": args.suite, "level": args.level, "pass": passed}
    out = _emit(rows, ["suite", "check", "g", "n", "pass", "detail"], args.format, env)
    return out, EXIT_OK if passed else EXIT_FAIL


COMMANDS = {
    "count": cmd_count,
    "transform": cmd_transform,
    "specialize": cmd_specialize,
    "intersections": cmd_intersections,
    "wick": cmd_wick,
    "verify": cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.jobs < 1:
            raise UsageError("--jobs must be at least 1")
        if args.budget > HARD_CEILING:
            raise ResourceLimitError(f"--budget {args.budget} exceeds the hard ceiling of {HARD_CEILING}")
        if args.budget < 0:
            raise UsageError("--budget must be non-negative")
        cache_dir = args.cache or default_cache_dir()
        configure_store(DiskCache(cache_dir) if cache_dir else None)
        out, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
