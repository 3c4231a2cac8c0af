"""Command-line interface: ``pseudoknot count|table|verify|convert``.

Exit codes: 0 success, 1 consistency or verification failure, 2 usage or
input error, 3 domain violation (crossing number >= k, walk leaves chamber).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Dict, Iterable, List, Optional

from . import bijection, closedforms, oracle, transforms, walks
from .cache import TableCache, resolve_cache_dir
from .core import chamber_origin

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

TABLE1 = [1, 1, 2, 5, 13, 36, 105, 321, 1018, 3334, 11216, 38635, 135835,
          486337, 1769500]
TABLE3 = [1, 1, 1, 2, 5, 14, 40, 119, 364, 1145, 3688, 12139, 40734, 139071,
          482214]

ROUTES = ("transform", "walk", "series", "reflection", "oracle")


class UsageError(Exception):
    pass


def _check_variant(kind: str, k: int, route: str) -> None:
    if kind == "restricted" and k <= 2 and route != "oracle":
        raise UsageError("restricted structures need --k > 2")
    if k < 2:
        raise UsageError("--k must be >= 2")


def compute_counts(kind: str, k: int, keys: Iterable, route: str = "transform",
                   cache: Optional[TableCache] = None) -> Dict:
    """Counts for (n, l) keys (l None = all isolated), read through the cache.

    Only the default transform route uses the cache.
    """
    keys = list(keys)
    _check_variant(kind, k, route)
    known: Dict = {}
    if cache is not None and route == "transform":
        known = cache.load(kind, k)
    missing = [key for key in keys if key not in known]
    for n, l in missing:
        if route == "oracle":
            if n > oracle.MAX_N:
                raise UsageError(f"--n {n} exceeds the oracle cap {oracle.MAX_N}")
            known[(n, l)] = oracle.oracle_count(n, k, kind, l)
        else:
            inner = "walk" if route == "transform" else route
            known[(n, l)] = transforms.count(kind, k, n, l, inner)
    if missing and cache is not None and route == "transform":
        cache.store(kind, k, known)
    return {key: known[key] for key in keys}


# ---------------------------------------------------------------------------
# count / table
# ---------------------------------------------------------------------------

def cmd_count(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    key = (args.n, args.isolated)
    value = compute_counts(args.variant, args.k, [key], args.route, args.cache)[key]
    out.write(f"{value}\n")
    return EXIT_OK


def table_rows(kind: str, k: int, n_max: int, by_isolated: bool,
               cache: Optional[TableCache] = None) -> List[tuple]:
    if by_isolated:
        keys = [(n, l) for n in range(n_max + 1) for l in range(n + 1)]
    else:
        keys = [(n, None) for n in range(n_max + 1)]
    counts = compute_counts(kind, k, keys, "transform", cache)
    return [(n, l, counts[(n, l)]) for n, l in keys]


def render_table(rows, fmt: str, by_isolated: bool) -> str:
    if fmt == "json":
        records = []
        for n, l, c in rows:
            rec = {"n": n}
            if by_isolated:
                rec["l"] = l
            rec["count"] = str(c)
            records.append(rec)
        return json.dumps(records, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "l", "count"] if by_isolated else ["n", "count"])
    for n, l, c in rows:
        writer.writerow([n, l, c] if by_isolated else [n, c])
    return buf.getvalue()


def cmd_table(args, out) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    rows = table_rows(args.variant, args.k, args.n_max, args.by_isolated, args.cache)
    text = render_table(rows, args.format, args.by_isolated)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
    else:
        out.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def suite_reference_tables(n_max, cache) -> Iterable:
    plain = compute_counts("plain", 3, [(n, None) for n in range(1, 16)], cache=cache)
    restricted = compute_counts("restricted", 3, [(n, None) for n in range(1, 16)],
                                cache=cache)
    for n, want in enumerate(TABLE1, start=1):
        got = plain[(n, None)]
        yield f"table1 S_3({n}) = {want}", got == want, got
    for n, want in enumerate(TABLE3, start=1):
        got = restricted[(n, None)]
        yield f"table3 S_3^r({n}) = {want}", got == want, got


def suite_routes(n_max, cache) -> Iterable:
    n_max = 16 if n_max is None else n_max
    for k in (2, 3, 4, 5):
        a = chamber_origin(k)
        for z in (True, False):
            dp = walks.chamber_walk_counts(k, n_max, z)
            refl = walks.reflection_counts(k, n_max, a, a, z)
            ser = walks.coefficient_counts(k, n_max, z)
            yield (f"routes k={k} zero_steps={z} n<={n_max}",
                   dp == refl == ser, None)


def suite_recursions(n_max, cache) -> Iterable:
    n_max = 40 if n_max is None else n_max
    for n in range(0, n_max + 1):
        ok = all(closedforms.s2_waterman(n, l) == transforms.S(2, n, l)
                 for l in range(n + 1))
        yield f"waterman n={n}", ok, None
    for n in range(3, n_max + 1):
        ok = all(closedforms.s2_recursion_check(n, l) for l in range(n + 1))
        yield f"s2 recursion n={n}", ok, None
    for n in range(7, min(n_max, 30) + 1):
        ok = all(closedforms.s3_recursion_check(n, l) for l in range(n % 2, n + 1, 2))
        yield f"s3 recursion n={n}", ok, None


def suite_bijection(n_max, cache) -> Iterable:
    n_max = 8 if n_max is None else n_max
    for n in range(n_max + 1):
        k = max(n, 2)
        round_trip = rows_ok = True
        total = 0
        by_cross: Dict[int, int] = {}
        for d in oracle.enumerate_diagrams(n):
            total += 1
            cr = bijection.crossing_number(d)
            by_cross[cr] = by_cross.get(cr, 0) + 1
            w = bijection.diagram_to_walk(k, d)
            round_trip &= bijection.walk_to_diagram(w) == d
            rows_ok &= bijection.max_shape_rows(d) == cr
        yield f"bijection round trip n={n} ({total} diagrams)", round_trip, None
        yield f"max rows = crossing number n={n}", rows_ok, None
        for kk in (2, 3, 4):
            want = walks.chamber_walk_count(kk, n, True)
            got = sum(c for cr, c in by_cross.items() if cr < kk)
            yield f"cardinality k={kk} n={n}", got == want, got


def suite_oracle(n_max, cache) -> Iterable:
    n_max = 9 if n_max is None else n_max
    for n in range(n_max + 1):
        for kind in oracle.VARIANTS:
            for k in (2, 3, 4):
                if kind == "restricted" and k == 2:
                    continue
                ok = transforms.count(kind, k, n) == oracle.oracle_count(n, k, kind)
                ok &= all(transforms.count(kind, k, n, l) == oracle.oracle_count(n, k, kind, l)
                          for l in range(n + 1))
                yield f"oracle {kind} k={k} n={n}", ok, None


SUITES = {
    "paper-tables": suite_reference_tables,
    "routes": suite_routes,
    "recursions": suite_recursions,
    "bijection": suite_bijection,
    "oracle": suite_oracle,
}


def cmd_verify(args, out) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failures = total = 0
    for name in names:
        for label, ok, got in SUITES[name](args.n_max, args.cache):
            total += 1
            if ok:
                out.write(f"PASS {label}\n")
            else:
                failures += 1
                extra = f" (got {got})" if got is not None else ""
                out.write(f"FAIL {label}{extra}\n")
    out.write(f"{total - failures}/{total} checks passed\n")
    return EXIT_OK if failures == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------
# convert
# ---------------------------------------------------------------------------

def cmd_convert(args, out, stdin) -> int:
    text = stdin.read()
    if args.source == "diagram":
        d = bijection.parse_diagram(text)
        if args.target == "diagram":
            out.write(bijection.format_diagram(d) + "\n")
            return EXIT_OK
        w = bijection.diagram_to_walk(args.k, d)
        if args.target == "walk":
            out.write(bijection.format_walk(w) + "\n")
        else:
            out.write(bijection.format_shapes(bijection.oscillating_tableau(d)) + "\n")
        return EXIT_OK
    w = bijection.parse_walk(text, args.k)
    trace, d = bijection.walk_trace(w)
    if args.target == "diagram":
        out.write(bijection.format_diagram(d) + "\n")
    elif args.target == "walk":
        out.write(bijection.format_walk(w) + "\n")
    else:
        out.write(bijection.format_shapes(trace.shapes) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pseudoknot",
        description="Exact counts of k-noncrossing RNA structures.")
    parser.add_argument("--cache-dir", help="table cache directory "
                        "(default: $PSEUDOKNOT_CACHE; unset disables caching)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--k", type=int, default=3)
        p.add_argument("--variant", choices=oracle.VARIANTS, default="plain")
        p.add_argument("--cache-dir", dest="cache_dir_sub", default=None)

    p = sub.add_parser("count", help="print a single count")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--isolated", type=int, default=None)
    p.add_argument("--route", choices=ROUTES, default="transform")

    p = sub.add_parser("table", help="print or write a table of counts")
    common(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--by-isolated", action="store_true")

    p = sub.add_parser("verify", help="run an invariant suite")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--cache-dir", dest="cache_dir_sub", default=None)

    p = sub.add_parser("convert", help="convert diagram/walk text on stdin")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--from", dest="source", choices=("diagram", "walk"), required=True)
    p.add_argument("--to", dest="target", choices=("diagram", "walk", "tableau"),
                   required=True)
    return parser


def main(argv=None, stdout=None, stdin=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stdin = stdin if stdin is not None else sys.stdin
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = resolve_cache_dir(getattr(args, "cache_dir_sub", None) or args.cache_dir)
    args.cache = TableCache(cache_dir) if cache_dir else None
    try:
        if args.command == "count":
            return cmd_count(args, stdout)
        if args.command == "table":
            return cmd_table(args, stdout)
        if args.command == "verify":
            return cmd_verify(args, stdout)
        return cmd_convert(args, stdout, stdin)
    except (UsageError, bijection.FormatError) as exc:
        print(f"pseudoknot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except bijection.DomainError as exc:
        print(f"pseudoknot: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ArithmeticError as exc:
        print(f"pseudoknot: consistency failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"pseudoknot: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    logging.basicConfig(level=logging.WARNING)
    raise SystemExit(main())
