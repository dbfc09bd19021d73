"""Command-line front end: tables, single polynomials, bijections, verification.

Exit codes: 0 success, 1 a verification check failed, 2 usage or precondition error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .bijections import (
    block_decompose,
    circle_bijection,
    circle_bijection_inverse,
    code_bijection,
)
from .checks import REGISTRY, run_check
from .enumerators import (
    ab_index,
    ahat_bivariate,
    ahat_poly,
    alt_eulerian_triangle,
    catalan,
    cd_index,
    cd_index_alt,
    ehat_poly,
    euler_numbers,
)
from .perms import DEFAULT_CAP, format_perm, parse_perm
from .series import R_series
from .stats import alt_descent_set, d3_set, i3, i_hat
from .symfun import fhat_poly

MIN_ORDER = 2
MAX_ORDER = 14
TABLE_KINDS = ("euler", "alt-eulerian", "ehat", "R", "catalan")
POLY_KINDS = ("ahat-t", "ahat-tq", "ehat-q", "cd", "cd-alt", "ab", "ab-alt", "fhat")
BIJECTION_KINDS = ("circle", "circle-inv", "code", "blocks")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    """Precondition violated; reported with exit code 2."""


def _check_n(n: int, unsafe: bool, extra: int = 0) -> None:
    if n < 0:
        raise UsageError(f"size must be non-negative, got {n}")
    if not unsafe and n + extra > DEFAULT_CAP:
        raise UsageError(f"size {n + extra} exceeds the cap {DEFAULT_CAP}; pass --unsafe to override")


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def _table_rows(kind: str, max_n: int) -> list[tuple[int, list[int]]]:
    if kind == "euler":
        return [(n, [e]) for n, e in enumerate(euler_numbers(max_n))]
    if kind == "catalan":
        return [(n, [catalan(n)]) for n in range(max_n + 1)]
    if kind == "R":
        vals = R_series(max_n).egf_values()
        return [(n, [int(v)]) for n, v in enumerate(vals)]
    if kind == "alt-eulerian":
        tri = alt_eulerian_triangle(max_n)
        return [(n, list(tri[n])) for n in range(1, max_n + 1)]
    if kind == "ehat":
        return [(n, list(ehat_poly(n, None).coeffs)) for n in range(max_n + 1)]
    raise UsageError(f"unknown table {kind!r}")


def cmd_table(kind: str, max_n: int, fmt: str, unsafe: bool = False) -> str:
    _check_n(max_n, unsafe)
    rows = _table_rows(kind, max_n)
    if fmt == "text":
        return "\n".join(" ".join(str(v) for v in vals) for _, vals in rows)
    if fmt == "json":
        return json.dumps({"table": kind, "rows": [{"n": n, "values": [str(v) for v in vals]}
                                                   for n, vals in rows]})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        width = max((len(vals) for _, vals in rows), default=0)
        writer.writerow(["n"] + [f"c{k}" for k in range(width)])
        for n, vals in rows:
            writer.writerow([n] + vals)
        return buf.getvalue().rstrip("\n")
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# poly
# ---------------------------------------------------------------------------

def _poly_object(kind: str, n: int):
    if kind in ("ahat-t", "ahat-tq", "cd", "cd-alt", "ab", "ab-alt") and n < 1:
        raise UsageError(f"{kind} needs n >= 1")
    if kind == "ahat-t":
        return ahat_poly(n, None)
    if kind == "ahat-tq":
        return ahat_bivariate(n, None)
    if kind == "ehat-q":
        return ehat_poly(n, None)
    if kind == "cd":
        return cd_index(n, None)
    if kind == "cd-alt":
        return cd_index_alt(n, None)
    if kind == "ab":
        return ab_index(n, "classic", None)
    if kind == "ab-alt":
        return ab_index(n, "alt", None)
    if kind == "fhat":
        return fhat_poly(n)
    raise UsageError(f"unknown polynomial {kind!r}")


def cmd_poly(kind: str, n: int, fmt: str, unsafe: bool = False) -> str:
    _check_n(n, unsafe)
    obj = _poly_object(kind, n)
    if fmt == "text":
        return str(obj)
    if fmt == "json":
        return json.dumps(obj.to_json())
    if fmt == "csv":
        data = obj.to_json()
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if "coefficients" in data:
            writer.writerow(["exponent", "coefficient"])
            writer.writerows(enumerate(data["coefficients"]))
        elif "terms" in data and "vars" in data:
            writer.writerow(["t", "q", "coefficient"])
            writer.writerows((d["t"], d["q"], d["c"]) for d in data["terms"])
        else:
            writer.writerow(["word", "coefficient"])
            writer.writerows((d["word"], d["c"]) for d in data["terms"])
        return buf.getvalue().rstrip("\n")
    raise UsageError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# bijection
# ---------------------------------------------------------------------------

def _fmt_set(s) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def cmd_bijection(kind: str, perm_text: str, unsafe: bool = False) -> str:
    try:
        perm = parse_perm(perm_text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _check_n(len(perm), unsafe)
    try:
        if kind == "circle":
            omega = circle_bijection(perm)
            return f"{format_perm(omega)}\nD3={_fmt_set(d3_set(perm))} D_hat={_fmt_set(alt_descent_set(omega))}"
        if kind == "circle-inv":
            sigma = circle_bijection_inverse(perm)
            return f"{format_perm(sigma)}\nD_hat={_fmt_set(alt_descent_set(perm))} D3={_fmt_set(d3_set(sigma))}"
        if kind == "code":
            sigma = code_bijection(perm)
            return (f"{format_perm(sigma)}\nD_hat={_fmt_set(alt_descent_set(perm))} i_hat={i_hat(perm)} "
                    f"D3={_fmt_set(d3_set(sigma))} i3={i3(sigma)}")
        if kind == "blocks":
            blocks = block_decompose(perm)
            sep = "" if len(perm) < 10 else ","
            return "|".join(sep.join(str(v) for v in b) for b in blocks)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown bijection {kind!r}")


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _run_one(args: tuple[str, int | None, int | None]):
    check_id, max_n, order = args
    start = time.perf_counter()
    report = run_check(check_id, max_n, order)
    return report, time.perf_counter() - start


def cmd_verify(target: str, max_n: int | None, order: int | None, jobs: int = 1,
               unsafe: bool = False, timing: bool = False, out=None) -> int:
    out = out or sys.stdout
    if target == "all":
        ids = list(REGISTRY)
    elif target in REGISTRY:
        ids = [target]
    else:
        raise UsageError(f"unknown check id {target!r}; known: {', '.join(REGISTRY)}")
    if jobs < 1:
        raise UsageError("--jobs must be at least 1")
    for cid in ids:
        check = REGISTRY[cid]
        _check_n(check.default_n if max_n is None else max_n, unsafe, check.extra)
    o = order
    if o is not None and (o < MIN_ORDER or (not unsafe and o > MAX_ORDER)):
        raise UsageError(f"series order {o} outside {MIN_ORDER}..{MAX_ORDER}; pass --unsafe to override")

    tasks = [(cid, max_n, order) for cid in ids]
    if jobs == 1 or len(tasks) == 1:
        results = [_run_one(t) for t in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # map preserves submission order, so output does not depend on jobs
            results = list(pool.map(_run_one, tasks))

    failed = 0
    for report, elapsed in results:
        record = json.loads(report.to_json())
        if timing:
            record["seconds"] = round(elapsed, 3)
        print(json.dumps(record, sort_keys=True), file=out)
        failed += not report.ok
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="altdesc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a table of numbers or polynomial coefficients")
    p.add_argument("kind", choices=TABLE_KINDS)
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--unsafe", action="store_true", help="lift the size cap")

    p = sub.add_parser("poly", help="emit a single polynomial")
    p.add_argument("kind", choices=POLY_KINDS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--unsafe", action="store_true", help="lift the size cap")

    p = sub.add_parser("bijection", help="apply a bijection to one permutation")
    p.add_argument("kind", choices=BIJECTION_KINDS)
    p.add_argument("--perm", required=True, help="comma-separated, e.g. 1,3,2")
    p.add_argument("--unsafe", action="store_true", help="lift the size cap")

    p = sub.add_parser("verify", help="run named checks ('all' for the whole suite)")
    p.add_argument("check_id")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--series-order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--unsafe", action="store_true", help="lift the size and order caps")
    p.add_argument("--timing", action="store_true",
                   help="add wall-clock seconds to each line (output is then not reproducible)")

    sub.add_parser("list", help="list check ids with descriptions")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "table":
            print(cmd_table(args.kind, args.max_n, args.format, args.unsafe))
        elif args.command == "poly":
            print(cmd_poly(args.kind, args.n, args.format, args.unsafe))
        elif args.command == "bijection":
            print(cmd_bijection(args.kind, args.perm, args.unsafe))
        elif args.command == "verify":
            return cmd_verify(args.check_id, args.max_n, args.series_order, args.jobs,
                              args.unsafe, args.timing)
        elif args.command == "list":
            for cid, check in REGISTRY.items():
                print(f"{cid}\t{check.description}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
