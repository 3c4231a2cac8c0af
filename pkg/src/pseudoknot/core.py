"""Exact-arithmetic and combinatorial value types shared across the package.

Counts are plain Python ints and rationals are :class:`fractions.Fraction`;
both are arbitrary precision, so nothing here ever touches floating point.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Shape = Tuple[int, ...]
Tableau = Tuple[Tuple[int, ...], ...]


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 whenever n < 0, k < 0 or k > n.

    The zero convention lets every inclusion-exclusion sum in the package run
    over unrestricted index ranges.
    """
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def catalan(m: int) -> int:
    if m < 0:
        return 0
    return math.comb(2 * m, m) // (m + 1)


# ---------------------------------------------------------------------------
# Truncated power series
# ---------------------------------------------------------------------------

class Series:
    """Power series in x truncated after x**order, with Fraction coefficients."""

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        coeffs = coeffs[: order + 1]
        coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self.order = order
        self.coefficients: Tuple[Fraction, ...] = tuple(coeffs)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def exp(cls, order: int) -> "Series":
        """e**x truncated at ``order``."""
        return cls([Fraction(1, math.factorial(i)) for i in range(order + 1)], order)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i <= self.order:
            return self.coefficients[i]
        return Fraction(0)

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coefficients)

    def _check(self, other: "Series") -> None:
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}")

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return Series(self.coefficients, order)

    def __add__(self, other):
        if not isinstance(other, Series):
            return self + Series([other], self.order)
        self._check(other)
        return Series([a + b for a, b in zip(self, other)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return Series([-a for a in self], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Series):
            c = Fraction(other)
            return Series([a * c for a in self], self.order)
        self._check(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] += a * b
        return Series(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Series):
            return self.order == other.order and self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def __repr__(self):
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coefficients) if c]
        return f"Series({' + '.join(terms) or '0'}; O(x^{self.order + 1}))"


def series_determinant(matrix: Sequence[Sequence[Series]], order: int) -> Series:
    """Exact determinant of a square matrix of series, truncated at ``order``.

    Laplace expansion along successive rows, memoized on the set of columns
    still available, so an m x m matrix costs O(m 2**m) series products.
    """
    m = len(matrix)
    if m == 0:
        return Series.one(order)
    if any(len(row) != m for row in matrix):
        raise ValueError("matrix must be square")
    for row in matrix:
        for entry in row:
            if entry.order < order:
                raise ValueError(
                    f"entry truncated at {entry.order}, need at least {order}")
    rows = [[entry.truncate(order) for entry in row] for row in matrix]

    memo: dict = {}

    def minor(r: int, cols: Tuple[int, ...]) -> Series:
        if r == m:
            return Series.one(order)
        if cols in memo:
            return memo[cols]
        total = Series.zero(order)
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if not any(entry.coefficients):
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(m)))


# ---------------------------------------------------------------------------
# Diagrams, walks, signed permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Diagram:
    """Partial matching on vertices 1..n; arcs are (i, j) with i < j."""

    n: int
    arcs: Tuple[Tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be >= 0")
        arcs = []
        seen = set()
        for i, j in self.arcs:
            i, j = int(i), int(j)
            if i > j:
                i, j = j, i
            if i == j or i < 1 or j > self.n:
                raise ValueError(f"invalid arc ({i},{j}) for n={self.n}")
            if i in seen or j in seen:
                raise ValueError(f"vertex reused by arc ({i},{j})")
            seen.update((i, j))
            arcs.append((i, j))
        object.__setattr__(self, "arcs", tuple(sorted(arcs)))

    def partner(self) -> dict:
        out = {}
        for i, j in self.arcs:
            out[i] = j
            out[j] = i
        return out

    def isolated(self) -> Tuple[int, ...]:
        used = self.partner()
        return tuple(v for v in range(1, self.n + 1) if v not in used)


@dataclass(frozen=True)
class Walk:
    """Lattice walk in Z^(k-1).

    Steps are encoded as signed coordinate indices: ``+i`` is +e_i, ``-i`` is
    -e_i and ``0`` is the zero step.
    """

    k: int
    steps: Tuple[int, ...]
    start: Tuple[int, ...] | None = None

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))
        for s in self.steps:
            if abs(s) > self.k - 1:
                raise ValueError(f"step {s:+d} out of range for k={self.k}")
        start = self.start if self.start is not None else chamber_origin(self.k)
        start = tuple(int(x) for x in start)
        if len(start) != self.k - 1:
            raise ValueError("start point has wrong dimension")
        object.__setattr__(self, "start", start)

    def __len__(self) -> int:
        return len(self.steps)

    def positions(self) -> list:
        """Positions after 0, 1, ..., len(steps) steps."""
        pos = list(self.start)
        out = [tuple(pos)]
        for s in self.steps:
            if s:
                pos[abs(s) - 1] += 1 if s > 0 else -1
            out.append(tuple(pos))
        return out

    def position(self, r: int) -> Tuple[int, ...]:
        return self.positions()[r]


def chamber_origin(k: int) -> Tuple[int, ...]:
    """The point (k-1, k-2, ..., 1)."""
    return tuple(range(k - 1, 0, -1))


def in_chamber(point: Sequence[int]) -> bool:
    """Strict interior test x_1 > x_2 > ... > x_{k-1} > 0."""
    prev = None
    for x in point:
        if prev is not None and not prev > x:
            return False
        prev = x
    return prev is None or prev > 0


@dataclass(frozen=True)
class SignedPermutation:
    """Element of the hyperoctahedral group acting on Z^m.

    ``apply`` permutes coordinates (output slot i takes input coordinate
    ``permutation[i]``, 0-based) and then negates the 1-based coordinates in
    ``flips``.
    """

    permutation: Tuple[int, ...]
    flips: frozenset = frozenset()

    def apply(self, point: Sequence[int]) -> Tuple[int, ...]:
        out = [point[p] for p in self.permutation]
        for f in self.flips:
            out[f - 1] = -out[f - 1]
        return tuple(out)

    __call__ = apply

    @property
    def sign(self) -> int:
        """Determinant of the linear action, +1 or -1."""
        inversions = sum(
            1 for a, b in itertools.combinations(self.permutation, 2) if a > b)
        return (-1) ** (inversions + len(self.flips))


# ---------------------------------------------------------------------------
# Shapes and tableaux
# ---------------------------------------------------------------------------

def shape_of(t: Tableau) -> Shape:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    """Rows and columns strictly increasing, entries distinct and positive."""
    entries = [v for row in t for v in row]
    if len(set(entries)) != len(entries) or any(v < 1 for v in entries):
        return False
    for r, row in enumerate(t):
        if not row:
            return False
        if r and len(row) > len(t[r - 1]):
            return False
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
        if r and any(t[r - 1][c] >= row[c] for c in range(len(row))):
            return False
    return True
