"""Inclusion-exclusion from k-noncrossing diagram counts to structure counts.

Every sum here runs over all b for which the binomial or selection factor is
nonzero; out-of-range binomials vanish, so no parity bookkeeping is needed.

The raw input is the sequence f_k(m, 0) of diagrams without isolated
vertices.  ``route`` chooses how it is obtained:

    "walk"        chamber-confined dynamic program (default)
    "reflection"  signed sum of unconstrained walk counts
    "series"      Bessel-determinant coefficients
"""
from __future__ import annotations

import itertools
import threading
from functools import lru_cache
from typing import List

from . import walks
from .core import binomial, chamber_origin

ROUTES = ("walk", "reflection", "series")


_f0_cache: dict = {}
_f0_lock = threading.Lock()


def _compute_f0(k, n_max, route):
    if route == "reflection":
        a = chamber_origin(k)
        return walks.reflection_counts(k, n_max, a, a, False)
    return walks.coefficient_counts(k, n_max, False)


def f0_sequence(k: int, n_max: int, route: str = "walk") -> List[int]:
    """f_k(m, 0) for m = 0..n_max."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if route == "walk":
        return walks.chamber_walk_counts(k, n_max, False)
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    with _f0_lock:
        cached = _f0_cache.get((k, route))
    if cached is None or len(cached) <= n_max:
        # grow geometrically so repeated calls with rising n stay cheap
        size = max(n_max, 2 * (len(cached) - 1) if cached else 0)
        cached = list(_compute_f0(k, size, route))
        with _f0_lock:
            if len(_f0_cache.get((k, route), ())) < len(cached):
                _f0_cache[(k, route)] = cached
    return cached[: n_max + 1]


def f(k: int, n: int, l: int, route: str = "walk") -> int:
    """k-noncrossing diagrams on n vertices with exactly l isolated vertices."""
    if n < 0 or l < 0 or l > n or (n - l) % 2:
        return 0
    return binomial(n, l) * f0_sequence(k, n - l, route)[n - l]


def f_total(k: int, n: int, route: str = "walk") -> int:
    """All k-noncrossing diagrams on n vertices."""
    if n < 0:
        return 0
    seq = f0_sequence(k, n, route)
    return sum(binomial(n, l) * seq[n - l] for l in range(n + 1))


def lambda_linear(n: int, b: int) -> int:
    """Ways to choose b vertex-disjoint 1-arcs on 1..n."""
    return binomial(n - b, b)


def _cycle_edges(n: int):
    edges = {frozenset((i, i % n + 1)) for i in range(1, n + 1)}
    return [e for e in edges if len(e) == 2]


def _disjoint_selections(edges, b: int) -> int:
    return sum(
        1 for combo in itertools.combinations(edges, b)
        if len(set().union(*combo)) == 2 * b)


def lambda_circular(n: int, b: int) -> int:
    """Ways to choose b vertex-disjoint 1-arcs on the n-cycle, (n,1) included.

    For n < 3 the cycle degenerates (n = 2 has the single arc (1,2)), so those
    values come from direct enumeration.
    """
    if b < 0 or n < 0:
        return 0
    if n < 3:
        return _disjoint_selections(_cycle_edges(n), b)
    return binomial((n - 2) - (b - 1), b - 1) + binomial(n - b, b)


@lru_cache(maxsize=None)
def lambda_restricted(n: int, b1: int, b2: int) -> int:
    """Ways to choose b1 1-arcs and b2 2-arcs on 1..n, pairwise vertex-disjoint."""
    if n < 0 or b1 < 0 or b2 < 0 or 2 * (b1 + b2) > n:
        return 0
    if b1 == 0 and b2 == 0:
        return 1
    return (lambda_restricted(n - 2, b1 - 1, b2)
            + lambda_restricted(n - 1, b1, b2)
            + lambda_restricted(n - 4, b1, b2 - 2)
            + lambda_restricted(n - 3, b1, b2 - 1))


def _nonnegative(value: int, what: str) -> int:
    if value < 0:
        raise ArithmeticError(f"{what} came out negative ({value})")
    return value


def S(k: int, n: int, l: int, route: str = "walk") -> int:
    """k-noncrossing structures (no 1-arcs) on n vertices with l isolated."""
    total = sum((-1) ** b * lambda_linear(n, b) * f(k, n - 2 * b, l, route)
                for b in range(n // 2 + 1))
    return _nonnegative(total, f"S({k},{n},{l})")


def S_total(k: int, n: int, route: str = "walk") -> int:
    total = sum((-1) ** b * lambda_linear(n, b) * f_total(k, n - 2 * b, route)
                for b in range(n // 2 + 1))
    return _nonnegative(total, f"S_total({k},{n})")


def S_circular(k: int, n: int, l: int, route: str = "walk") -> int:
    """Circular structures: additionally no arc (1,n)."""
    total = sum((-1) ** b * lambda_circular(n, b) * f(k, n - 2 * b, l, route)
                for b in range(n // 2 + 1))
    return _nonnegative(total, f"S_circular({k},{n},{l})")


def S_circular_total(k: int, n: int, route: str = "walk") -> int:
    total = sum((-1) ** b * lambda_circular(n, b) * f_total(k, n - 2 * b, route)
                for b in range(n // 2 + 1))
    return _nonnegative(total, f"S_circular_total({k},{n})")


def _require_restricted(k: int) -> None:
    if k <= 2:
        raise ValueError("restricted structures need k > 2")


def S_restricted(k: int, n: int, l: int, route: str = "walk") -> int:
    """Restricted structures: no 1-arcs and no 2-arcs."""
    _require_restricted(k)
    total = 0
    for b1 in range(n // 2 + 1):
        for b2 in range(n // 2 + 1 - b1):
            lam = lambda_restricted(n, b1, b2)
            if lam:
                total += (-1) ** (b1 + b2) * lam * f(k, n - 2 * (b1 + b2), l, route)
    return _nonnegative(total, f"S_restricted({k},{n},{l})")


def S_restricted_total(k: int, n: int, route: str = "walk") -> int:
    _require_restricted(k)
    total = 0
    for b1 in range(n // 2 + 1):
        for b2 in range(n // 2 + 1 - b1):
            lam = lambda_restricted(n, b1, b2)
            if lam:
                total += (-1) ** (b1 + b2) * lam * f_total(k, n - 2 * (b1 + b2), route)
    return _nonnegative(total, f"S_restricted_total({k},{n})")


def count(kind: str, k: int, n: int, l: int | None = None, route: str = "walk") -> int:
    """Dispatch on variant kind; ``l=None`` sums over all isolated counts."""
    table = {
        "plain": (S, S_total),
        "circular": (S_circular, S_circular_total),
        "restricted": (S_restricted, S_restricted_total),
    }
    if kind not in table:
        raise ValueError(f"unknown variant {kind!r}")
    by_l, total = table[kind]
    return total(k, n, route) if l is None else by_l(k, n, l, route)
