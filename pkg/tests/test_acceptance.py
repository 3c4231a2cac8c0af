"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line with its elapsed time and
budget; run ``pytest tests/test_acceptance.py -s`` (or this file directly)
to see them.  All comparisons are exact integer equality.
"""
import io
import itertools
import json
import sys
import time

from pseudoknot import cli, closedforms, oracle, transforms
from pseudoknot.bijection import (
    crossing_number,
    diagram_to_walk,
    max_shape_rows,
    walk_to_diagram,
)
from pseudoknot.cache import TableCache
from pseudoknot.core import chamber_origin
from pseudoknot.walks import (
    chamber_walk_count,
    chamber_walk_counts,
    coefficient_counts,
    reflection_counts,
)

TABLE1 = [1, 1, 2, 5, 13, 36, 105, 321, 1018, 3334, 11216, 38635, 135835,
          486337, 1769500]
TABLE3 = [1, 1, 1, 2, 5, 14, 40, 119, 364, 1145, 3688, 12139, 40734, 139071,
          482214]


def report(number, title, ok, started, budget):
    elapsed = time.perf_counter() - started
    within = elapsed <= budget
    status = "PASS" if ok and within else "FAIL"
    print(f"\n{status} criterion {number}: {title} "
          f"[{elapsed:.2f}s of {budget:.0f}s budget]")
    assert ok, f"criterion {number} ({title}) failed"
    assert within, f"criterion {number} took {elapsed:.1f}s > {budget}s"


def test_criterion_1_table1():
    t0 = time.perf_counter()
    got = [transforms.S_total(3, n) for n in range(1, 16)]
    report(1, "S_3(n), n=1..15, equals Table 1", got == TABLE1, t0, 5)


def test_criterion_2_table3():
    t0 = time.perf_counter()
    got = [transforms.S_restricted_total(3, n) for n in range(1, 16)]
    report(2, "S_3^r(n), n=1..15, equals Table 3", got == TABLE3, t0, 5)


def test_criterion_3_three_routes():
    t0 = time.perf_counter()
    ok = True
    for k in (2, 3, 4, 5):
        a = chamber_origin(k)
        for zero in (True, False):
            dp = chamber_walk_counts(k, 16, zero)
            ok &= dp == reflection_counts(k, 16, a, a, zero)
            ok &= dp == coefficient_counts(k, 16, zero)
    report(3, "chamber DP = reflection = Bessel, k=2..5, n<=16", ok, t0, 60)


def test_criterion_4_oracle_equivalence():
    t0 = time.perf_counter()
    mismatches = []
    for n in range(12):
        for k in (2, 3, 4):
            kinds = ["plain", "circular"] + (["restricted"] if k > 2 else [])
            for kind in kinds:
                if transforms.count(kind, k, n) != oracle.oracle_count(n, k, kind):
                    mismatches.append((kind, k, n, None))
                for l in range(n + 1):
                    if transforms.count(kind, k, n, l) != oracle.oracle_count(n, k, kind, l):
                        mismatches.append((kind, k, n, l))
    report(4, "all structure counts equal brute force, n<=11", not mismatches, t0, 300)


def test_criterion_5_waterman():
    t0 = time.perf_counter()
    ok = True
    for n in range(41):
        for l in range(n + 1):
            ok &= closedforms.s2_waterman(n, l) == transforms.S(2, n, l)
            if n >= 3 and (n - l) % 2 == 0:
                ok &= closedforms.s2_recursion_check(n, l)
    report(5, "Waterman closed form and 2-term recursion, n<=40", ok, t0, 10)


def test_criterion_6_four_term_recursion():
    t0 = time.perf_counter()
    ok = all(closedforms.s3_recursion_check(n, l)
             for n in range(7, 31) for l in range(n % 2, n + 1, 2))
    report(6, "4-term recursion for S_3(n,l), 7<=n<=30", ok, t0, 30)


def test_criterion_7_bijection():
    t0 = time.perf_counter()
    ok = True
    for n in range(11):
        k = max(n, 2)
        for d in oracle.enumerate_diagrams(n):
            ok &= walk_to_diagram(diagram_to_walk(k, d)) == d
            ok &= max_shape_rows(d) == crossing_number(d)
    for n in range(13):
        for k in (2, 3, 4):
            ok &= oracle.oracle_walk_total(n, k) == chamber_walk_count(k, n, True)
    report(7, "round trip and rows = crossing (n<=10), cardinality (n<=12)", ok, t0, 180)


def test_criterion_8_lambda():
    t0 = time.perf_counter()
    ok = True
    for n in range(13):
        arcs = [(i, i + d) for d in (1, 2) for i in range(1, n - d + 1)]
        for size in range(5):
            tally = {}
            for combo in itertools.combinations(arcs, size):
                verts = {v for a in combo for v in a}
                if len(verts) == 2 * size:
                    b1 = sum(1 for i, j in combo if j - i == 1)
                    tally[b1] = tally.get(b1, 0) + 1
            for b1 in range(size + 1):
                ok &= transforms.lambda_restricted(n, b1, size - b1) == tally.get(b1, 0)
        if n >= 1:
            cycle = sorted({tuple(sorted((i, i % n + 1))) for i in range(1, n + 1)
                            if i % n + 1 != i})
            for b in range(n // 2 + 2):
                want = sum(1 for c in itertools.combinations(cycle, b)
                           if len({v for e in c for v in e}) == 2 * b)
                ok &= transforms.lambda_circular(n, b) == want
    report(8, "lambda_restricted and lambda_circular equal enumeration, n<=12", ok, t0, 10)


def _table(tmp_path, *extra):
    out = io.StringIO()
    code = cli.main(["--cache-dir", str(tmp_path), "table", "--k", "3", "--n-max", "60",
                     *extra], stdout=out)
    return code, out.getvalue()


def test_criterion_9_cli_determinism_and_cache(tmp_path, monkeypatch):
    monkeypatch.delenv("PSEUDOKNOT_CACHE", raising=False)
    t0 = time.perf_counter()
    first = _table(tmp_path, "--format", "json")
    second = _table(tmp_path, "--format", "json")
    plain_out = io.StringIO()
    cli.main(["table", "--k", "3", "--n-max", "60", "--format", "json"], stdout=plain_out)
    cached = TableCache(tmp_path).load("plain", 3)
    big = cached[(60, None)]
    recomputed = transforms.S_total(3, 60, route="series")
    ok = (first[0] == second[0] == 0 and first[1] == second[1] == plain_out.getvalue()
          and big > 2 ** 64 and len(str(big)) > 19
          and big == transforms.S_total(3, 60) == recomputed
          and json.loads(first[1])[60]["count"] == str(big))
    report(9, "table output byte-identical; cache lossless past 64 bits (k=3, n=60)",
           ok, t0, 60)


if __name__ == "__main__":
    import pytest

    sys.exit(pytest.main([__file__, "-s", "-q"]))
