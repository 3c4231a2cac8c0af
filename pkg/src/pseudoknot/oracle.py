"""Brute-force ground truth by exhaustive enumeration of partial matchings."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .bijection import crossing_number
from .core import Diagram

MAX_N = 14

VARIANTS = ("plain", "circular", "restricted")


@dataclass(frozen=True)
class VariantSpec:
    kind: str
    k: int

    def __post_init__(self):
        if self.kind not in VARIANTS:
            raise ValueError(f"unknown variant {self.kind!r}")
        if self.k < 2:
            raise ValueError("k must be >= 2")


def enumerate_diagrams(n: int) -> Iterator[Diagram]:
    """Every partial matching on 1..n, lexicographic in the sorted arc list."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the enumeration cap {MAX_N}")

    used = [False] * (n + 2)
    arcs = []

    def extend(min_origin):
        yield Diagram(n, tuple(arcs))
        for i in range(min_origin, n):
            if used[i]:
                continue
            used[i] = True
            for j in range(i + 1, n + 1):
                if used[j]:
                    continue
                used[j] = True
                arcs.append((i, j))
                yield from extend(i + 1)
                arcs.pop()
                used[j] = False
            used[i] = False

    yield from extend(1)


def involution_number(n: int) -> int:
    a, b = 1, 1  # I(0), I(1)
    if n == 0:
        return 1
    for m in range(2, n + 1):
        a, b = b, b + (m - 1) * a
    return b


def diagram_profile(d: Diagram):
    """(crossing number, has 1-arc, has 2-arc, has (1,n), isolated count)."""
    has1 = has2 = False
    for i, j in d.arcs:
        if j - i == 1:
            has1 = True
        elif j - i == 2:
            has2 = True
    wrap = d.n >= 2 and (1, d.n) in d.arcs
    return crossing_number(d), has1, has2, wrap, d.n - 2 * len(d.arcs)


def admits(profile, k: int, kind: str) -> bool:
    cr, has1, has2, wrap, _ = profile
    if cr >= k or has1:
        return False
    if kind == "restricted":
        return not has2
    if kind == "circular":
        return not wrap
    return True


@lru_cache(maxsize=None)
def profile_table(n: int) -> Counter:
    """Multiset of diagram profiles on n vertices (one enumeration per n)."""
    return Counter(diagram_profile(d) for d in enumerate_diagrams(n))


def oracle_count(n: int, k: int, variant, isolated: Optional[int] = None) -> int:
    """Count diagrams on n vertices that are structures of the given variant.

    ``variant`` is a :class:`VariantSpec` or a kind string.
    """
    kind = variant.kind if isinstance(variant, VariantSpec) else str(variant)
    if kind not in VARIANTS:
        raise ValueError(f"unknown variant {kind!r}")
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the enumeration cap {MAX_N}")
    total = 0
    for profile, count in profile_table(n).items():
        if isolated is not None and profile[4] != isolated:
            continue
        if admits(profile, k, kind):
            total += count
    return total


def oracle_walk_total(n: int, k: int) -> int:
    """Diagrams on n vertices with crossing number < k."""
    return sum(c for p, c in profile_table(n).items() if p[0] < k)
