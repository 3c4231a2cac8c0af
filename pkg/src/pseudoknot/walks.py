"""Counting walks with steps 0, +-e_i in Z^(k-1) by three independent routes.

* :func:`chamber_walk_count` runs a layered dynamic program restricted to the
  open chamber x_1 > ... > x_{k-1} > 0.
* :func:`reflection_count` counts unconstrained walks and takes the signed
  sum over the hyperoctahedral group.
* :func:`coefficient_counts` extracts coefficients of the determinant of
  hyperbolic Bessel series.
"""
from __future__ import annotations

import itertools
import math
import threading
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .core import (
    Series,
    SignedPermutation,
    chamber_origin,
    in_chamber,
    series_determinant,
)

MAX_GROUP_RANK = 6


def _dtype_for(k: int, n: int, zero_steps: bool):
    # The total number of step strings bounds every entry of every layer.
    choices = 2 * (k - 1) + (1 if zero_steps else 0)
    return np.int64 if choices ** n < 2 ** 62 else object


def _step(layer: np.ndarray, zero_steps: bool) -> np.ndarray:
    """One layer of the walk DP on a zero-padded box."""
    new = layer.copy() if zero_steps else np.zeros_like(layer)
    for axis in range(layer.ndim):
        lo = [slice(None)] * layer.ndim
        hi = [slice(None)] * layer.ndim
        lo[axis] = slice(0, -1)
        hi[axis] = slice(1, None)
        new[tuple(hi)] += layer[tuple(lo)]  # +e_axis
        new[tuple(lo)] += layer[tuple(hi)]  # -e_axis
    return new


def _chamber_mask(k: int, size: int) -> np.ndarray:
    grids = np.indices((size,) * (k - 1), sparse=True)
    mask = grids[-1] > 0
    for i in range(k - 2):
        mask = mask & (grids[i] > grids[i + 1])
    return np.broadcast_to(mask, (size,) * (k - 1))


_chamber_cache: dict = {}
_chamber_lock = threading.Lock()


def chamber_walk_counts(k: int, n_max: int, allow_zero_steps: bool) -> List[int]:
    """Chamber-confined return counts from (k-1, ..., 1) for n = 0..n_max.

    Results are cached per ``(k, allow_zero_steps)`` and extended on demand.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if n_max < 0:
        return []
    key = (k, bool(allow_zero_steps))
    with _chamber_lock:
        cached = _chamber_cache.get(key)
    if cached is not None and len(cached) > n_max:
        return cached[: n_max + 1]
    values = _chamber_dp(k, n_max, allow_zero_steps)
    with _chamber_lock:
        cached = _chamber_cache.get(key)
        if cached is None or len(cached) < len(values):
            _chamber_cache[key] = values
    return values[: n_max + 1]


def _chamber_dp(k: int, n_max: int, zero_steps: bool) -> List[int]:
    # Coordinates of reachable interior points lie in 1..k-1+n_max; index 0
    # is outside the chamber, so zero padding at the low edge is exact.
    size = k + n_max
    mask = _chamber_mask(k, size)
    a = chamber_origin(k)
    layer = np.zeros((size,) * (k - 1), dtype=_dtype_for(k, n_max, zero_steps))
    layer[a] = 1
    out = [1]
    for _ in range(n_max):
        layer = _step(layer, zero_steps)
        layer[~mask] = 0
        out.append(int(layer[a]))
    return out


def chamber_walk_count(k: int, n: int, allow_zero_steps: bool) -> int:
    """Walks of length n from (k-1, ..., 1) to itself inside the open chamber.

    With zero steps this is the number of k-noncrossing diagrams on n
    vertices; without, the number of those with no isolated vertex.
    """
    if n < 0:
        return 0
    return chamber_walk_counts(k, n, allow_zero_steps)[n]


def _unconstrained_layers(k: int, n_max: int, end: Sequence[int], zero_steps: bool):
    """Yield (n, layer) where layer[c - end + n_max] counts walks c -> end."""
    size = 2 * n_max + 1
    layer = np.zeros((size,) * (k - 1), dtype=_dtype_for(k, n_max, zero_steps))
    layer[(n_max,) * (k - 1)] = 1
    yield 0, layer
    for n in range(1, n_max + 1):
        layer = _step(layer, zero_steps)
        yield n, layer


def _lookup(layer: np.ndarray, point, end, n_max: int) -> int:
    idx = tuple(p - e + n_max for p, e in zip(point, end))
    if any(i < 0 or i >= layer.shape[0] for i in idx):
        return 0
    return int(layer[idx])


def unconstrained_walk_count(k: int, n: int, start: Sequence[int], end: Sequence[int],
                             allow_zero_steps: bool) -> int:
    """Number of length-n walks from start to end with no confinement."""
    if k < 2:
        raise ValueError("k must be >= 2")
    start, end = tuple(start), tuple(end)
    if len(start) != k - 1 or len(end) != k - 1:
        raise ValueError("points must lie in Z^(k-1)")
    if n < 0:
        return 0
    if sum(abs(s - e) for s, e in zip(start, end)) > n:
        return 0
    for m, layer in _unconstrained_layers(k, n, end, allow_zero_steps):
        if m == n:
            return _lookup(layer, start, end, n)
    raise AssertionError("unreachable")


def signed_group_elements(k: int) -> List[Tuple[SignedPermutation, int]]:
    """All 2**(k-1) (k-1)! signed permutations of Z^(k-1) with their signs."""
    m = k - 1
    if m < 1:
        raise ValueError("k must be >= 2")
    if m > MAX_GROUP_RANK:
        raise ValueError(f"group rank {m} exceeds {MAX_GROUP_RANK}")
    out = []
    for perm in itertools.permutations(range(m)):
        for r in range(m + 1):
            for flips in itertools.combinations(range(1, m + 1), r):
                g = SignedPermutation(perm, frozenset(flips))
                out.append((g, g.sign))
    return out


def _check_interior(point, k, what):
    if len(point) != k - 1:
        raise ValueError(f"{what} must lie in Z^{k - 1}")
    if not in_chamber(point):
        raise ValueError(f"{what} {tuple(point)} is not strictly inside the chamber")


def reflection_counts(k: int, n_max: int, start: Sequence[int], end: Sequence[int],
                      allow_zero_steps: bool) -> List[int]:
    """Signed reflection sums for n = 0..n_max (one unconstrained DP pass)."""
    start, end = tuple(start), tuple(end)
    _check_interior(start, k, "start")
    _check_interior(end, k, "end")
    images = [(g(start), sign) for g, sign in signed_group_elements(k)]
    out = []
    for _, layer in _unconstrained_layers(k, n_max, end, allow_zero_steps):
        out.append(sum(sign * _lookup(layer, p, end, n_max) for p, sign in images))
    return out


def reflection_count(k: int, n: int, start: Sequence[int], end: Sequence[int],
                     allow_zero_steps: bool) -> int:
    if n < 0:
        return 0
    return reflection_counts(k, n, start, end, allow_zero_steps)[n]


def bessel_series(r: int, order: int) -> Series:
    """I_r(2x) = sum_j x**(r + 2j) / (j! (r + j)!), truncated at ``order``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    r = abs(r)
    coeffs = [Fraction(0)] * (order + 1)
    j = 0
    while r + 2 * j <= order:
        coeffs[r + 2 * j] = Fraction(1, math.factorial(j) * math.factorial(r + j))
        j += 1
    return Series(coeffs, order)


def bessel_determinant(k: int, order: int, start=None, end=None) -> Series:
    """det[I_{a_i - b_j}(2x) - I_{a_i + b_j}(2x)] for i, j = 1..k-1."""
    if k - 1 > MAX_GROUP_RANK:
        raise ValueError(f"matrix size {k - 1} exceeds {MAX_GROUP_RANK}")
    a = tuple(start) if start is not None else chamber_origin(k)
    b = tuple(end) if end is not None else chamber_origin(k)
    cache: dict = {}

    def bessel(r):
        if r not in cache:
            cache[r] = bessel_series(r, order)
        return cache[r]

    matrix = [[bessel(ai - bj) - bessel(ai + bj) for bj in b] for ai in a]
    return series_determinant(matrix, order)


def coefficient_counts(k: int, n_max: int, allow_zero_steps: bool) -> List[int]:
    """n! [x^n] of the Bessel determinant (times e^x with zero steps)."""
    if n_max < 0:
        return []
    det = bessel_determinant(k, n_max)
    if allow_zero_steps:
        det = det * Series.exp(n_max)
    out = []
    for n, c in enumerate(det):
        value = c * math.factorial(n)
        if value.denominator != 1:
            raise ArithmeticError(
                f"non-integral coefficient {value} at n={n}, k={k}")
        out.append(int(value))
    return out
