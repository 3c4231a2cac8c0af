"""Closed forms and P-recursions for k = 2 and k = 3.

These are independent of the walk machinery and serve as cross-checks on
:mod:`pseudoknot.transforms`.
"""
from __future__ import annotations

from typing import Callable, Optional

from . import transforms
from .core import binomial, catalan


def _half(n: int, l: int) -> Optional[int]:
    if l < 0 or n < l or (n - l) % 2:
        return None
    return (n - l) // 2


def f2_closed(n: int, l: int) -> int:
    m = _half(n, l)
    if m is None:
        return 0
    return binomial(n, l) * catalan(m)


def _f3_core(m: int) -> int:
    return catalan(m) * catalan(m + 2) - catalan(m + 1) ** 2


def f3_closed(n: int, l: int) -> int:
    m = _half(n, l)
    if m is None:
        return 0
    return binomial(n, l) * _f3_core(m)


def waterman_arcs(n: int, h: int) -> int:
    """Secondary structures on n vertices with exactly h arcs (h >= 1)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    num = binomial(n - h, h + 1) * binomial(n - h - 1, h - 1)
    q, r = divmod(num, h)
    if r:
        raise ArithmeticError(f"waterman_arcs({n},{h}) is not integral")
    return q


def s2_waterman(n: int, l: int) -> int:
    """Secondary structures with l isolated vertices.

    The zero-arc case l = n is set to 1.
    """
    m = _half(n, l)
    if m is None:
        return 0
    if m == 0:
        return 1
    num = 2 * binomial((n + l) // 2, m + 1) * binomial((n + l) // 2 - 1, m - 1)
    q, r = divmod(num, n - l)
    if r:
        raise ArithmeticError(f"s2_waterman({n},{l}) is not integral")
    return q


def s2_recursion_check(n: int, l: int,
                       S: Optional[Callable[[int, int], int]] = None) -> bool:
    """(n-l)(n-l+2) S(n,l) == (n+l)(n+l-2) S(n-2,l).

    ``S`` defaults to the inclusion-exclusion count for k = 2.
    """
    if S is None:
        S = lambda m, j: transforms.S(2, m, j)  # noqa: E731
    return (n - l) * (n - l + 2) * S(n, l) - (n + l) * (n + l - 2) * S(n - 2, l) == 0


def s3_closed(n: int, l: int) -> int:
    total = 0
    for b in range(n // 2 + 1):
        m = _half(n - 2 * b, l)
        if m is None:
            continue
        total += (-1) ** b * binomial(n - b, b) * binomial(n - 2 * b, l) * _f3_core(m)
    return total


def s3_recursion_coefficients(n: int, l: int):
    """Twice p_1..p_4, so that all four are integers."""
    q1 = n * (n - 1) * (n - 10 + l) * (n - 4 + l) * (n - 8 + l)
    q2 = n * (n - 3) * (13 * n**3 - 126 * n**2 + 13 * n**2 * l - 88 * n * l
                        + 392 * n + 3 * n * l**2 + 216 * l - 384 - 42 * l**2 + 3 * l**3)
    q3 = (n - 1) * (n - 4) * (13 * n**3 - 30 * n**2 - 13 * n**2 * l + 8 * n
                              + 16 * n * l + 3 * n * l**2 + 30 * l**2 - 72 * l - 3 * l**3)
    q4 = (n - 3) * (n - 4) * (n - l) * (n - l + 6) * (n - l + 4)
    for q in (q1, q2):
        # the printed p_1, p_2 carry a factor 1/2 against n(n-1), n(n-3)
        if q % 2:
            raise ArithmeticError(f"odd doubled coefficient at n={n}, l={l}")
    return q1, q2, q3, q4


def s3_recursion_check(n: int, l: int,
                       S: Optional[Callable[[int, int], int]] = None) -> bool:
    """p1 S(n-6) - p2 S(n-4) - p3 S(n-2) + p4 S(n) == 0, all at fixed l."""
    if S is None:
        S = lambda m, j: transforms.S(3, m, j)  # noqa: E731
    q1, q2, q3, q4 = s3_recursion_coefficients(n, l)
    return q1 * S(n - 6, l) - q2 * S(n - 4, l) - q3 * S(n - 2, l) + q4 * S(n, l) == 0
