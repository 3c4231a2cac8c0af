"""Diagrams <-> oscillating tableaux <-> chamber walks.

A diagram is read right to left: at a terminus j of arc (i, j) the origin i
is row-inserted, at an origin its (necessarily largest) entry is deleted,
and isolated vertices leave the tableau unchanged.  The resulting shape
sequence, read left to right and translated by (k-1, ..., 1), is the walk.
The inverse direction reads the walk left to right, placing each new label
in the added square and recovering arcs by reverse bumping.

Text formats:
    diagram  ``n;i-j,i-j,...`` (arcs sorted by first endpoint)
    walk     ``+1,-1,0,+2,...``
"""
from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .core import Diagram, Shape, Tableau, Walk, chamber_origin, in_chamber, shape_of


class FormatError(ValueError):
    """Malformed diagram or walk text."""


class DomainError(ValueError):
    """Input outside the domain of the bijection (crossing too large, bad walk)."""


# ---------------------------------------------------------------------------
# Row insertion
# ---------------------------------------------------------------------------

def rsk_insert(t: Tableau, value: int) -> Tableau:
    """Schensted row insertion of ``value`` into a standard tableau."""
    if any(value in row for row in t):
        raise ValueError(f"value {value} already present")
    rows = [list(row) for row in t]
    x = value
    for row in rows:
        pos = bisect.bisect_right(row, x)
        if pos == len(row):
            row.append(x)
            return tuple(tuple(r) for r in rows)
        row[pos], x = x, row[pos]
    rows.append([x])
    return tuple(tuple(r) for r in rows)


def rsk_reverse(t_prev: Tableau, target_shape: Sequence[int]) -> Tuple[Tableau, int]:
    """Undo one row insertion: returns (T, j) with rsk_insert(T, j) == t_prev.

    ``target_shape`` must be the shape of ``t_prev`` with one corner removed.
    """
    shape = shape_of(t_prev)
    target = tuple(r for r in target_shape if r)
    padded = target + (0,) * (len(shape) - len(target))
    if len(padded) != len(shape):
        raise ValueError(f"shape {target} is not contained in {shape}")
    diff = [s - p for s, p in zip(shape, padded)]
    if sorted(diff) != [0] * (len(diff) - 1) + [1] or any(
            padded[r] < padded[r + 1] for r in range(len(padded) - 1)):
        raise ValueError(f"shape {target} is not {shape} minus one corner")
    r = diff.index(1)
    rows = [list(row) for row in t_prev]
    x = rows[r].pop()
    for row in reversed(rows[:r]):
        # largest entry smaller than x; exists because columns increase
        pos = bisect.bisect_left(row, x) - 1
        row[pos], x = x, row[pos]
    return tuple(tuple(row) for row in rows if row), x


# ---------------------------------------------------------------------------
# Crossing number
# ---------------------------------------------------------------------------

def crossing_number(d: Diagram) -> int:
    """Size of the largest set of mutually crossing arcs.

    Arcs i_1 < ... < i_m < j_1 < ... < j_m all straddle the gap after i_m, so
    it suffices to take, for every gap, the longest run of arcs open there
    whose termini increase with their origins.
    """
    best = 0
    for t in range(1, d.n):
        termini = [j for i, j in d.arcs if i <= t < j]  # arcs are sorted by origin
        tails: List[int] = []
        for j in termini:
            pos = bisect.bisect_left(tails, j)
            if pos == len(tails):
                tails.append(j)
            else:
                tails[pos] = j
        best = max(best, len(tails))
    return best


# ---------------------------------------------------------------------------
# Oscillating tableaux
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Trace:
    """Step-by-step record of the construction: tableaux T_0..T_n and steps."""

    tableaux: Tuple[Tableau, ...]
    steps: Tuple[int, ...]

    @property
    def shapes(self) -> Tuple[Shape, ...]:
        return tuple(shape_of(t) for t in self.tableaux)


def diagram_trace(d: Diagram) -> Trace:
    """Build T_n, T_{n-1}, ..., T_0 from the diagram, right to left."""
    partner = d.partner()
    tableaux: List[Tableau] = [()] * (d.n + 1)
    t: Tableau = ()
    for i in range(d.n, 0, -1):
        j = partner.get(i)
        if j is not None and j < i:
            t = rsk_insert(t, j)
        elif j is not None:
            # i is an origin, and the largest label still present
            rows = [list(row) for row in t]
            for row in rows:
                if row and row[-1] == i:
                    row.pop()
                    break
            else:
                raise AssertionError(f"origin {i} missing from tableau")
            t = tuple(tuple(row) for row in rows if row)
        tableaux[i - 1] = t
    if t != ():
        raise AssertionError("tableau not empty after processing")
    steps = []
    for before, after in zip(tableaux, tableaux[1:]):
        steps.append(_shape_step(shape_of(before), shape_of(after)))
    return Trace(tuple(tableaux), tuple(steps))


def _shape_step(before: Shape, after: Shape) -> int:
    m = max(len(before), len(after))
    b = before + (0,) * (m - len(before))
    a = after + (0,) * (m - len(after))
    for row, (x, y) in enumerate(zip(b, a), start=1):
        if x != y:
            return row if y > x else -row
    return 0


def oscillating_tableau(d: Diagram) -> Tuple[Shape, ...]:
    """Shapes mu^0, ..., mu^n of the oscillating tableau of ``d``."""
    return diagram_trace(d).shapes


def max_shape_rows(d: Diagram) -> int:
    return max(len(s) for s in oscillating_tableau(d))


def diagram_to_walk(k: int, d: Diagram) -> Walk:
    """Walk of length n from (k-1, ..., 1) to itself inside the chamber."""
    if k < 2:
        raise ValueError("k must be >= 2")
    cr = crossing_number(d)
    if cr >= k:
        raise DomainError(f"diagram has crossing number {cr} >= k={k}")
    return Walk(k, diagram_trace(d).steps)


def walk_trace(w: Walk) -> Tuple[Trace, Diagram]:
    """Read a chamber walk left to right, recovering tableaux and arcs."""
    a = chamber_origin(w.k)
    if tuple(w.start) != a:
        raise DomainError(f"walk must start at {a}")
    positions = w.positions()
    for r, p in enumerate(positions):
        if not in_chamber(p):
            raise DomainError(f"walk leaves the chamber at step {r}: {p}")
    if positions[-1] != a:
        raise DomainError(f"walk ends at {positions[-1]}, not {a}")
    t: Tableau = ()
    tableaux = [t]
    arcs = []
    for i, s in enumerate(w.steps, start=1):
        if s > 0:
            rows = [list(row) for row in t]
            if s - 1 == len(rows):
                rows.append([])
            rows[s - 1].append(i)
            t = tuple(tuple(row) for row in rows)
        elif s < 0:
            shape = list(shape_of(t))
            shape[-s - 1] -= 1
            t, j = rsk_reverse(t, shape)
            arcs.append((j, i))
        tableaux.append(t)
    return Trace(tuple(tableaux), tuple(w.steps)), Diagram(len(w.steps), tuple(arcs))


def walk_to_diagram(w: Walk) -> Diagram:
    return walk_trace(w)[1]


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def format_diagram(d: Diagram) -> str:
    return f"{d.n};" + ",".join(f"{i}-{j}" for i, j in d.arcs)


def parse_diagram(text: str) -> Diagram:
    text = text.strip()
    if ";" not in text:
        raise FormatError(f"missing ';' in diagram {text!r}")
    head, _, body = text.partition(";")
    try:
        n = int(head)
    except ValueError:
        raise FormatError(f"bad vertex count {head!r}") from None
    arcs = []
    for token in filter(None, (tok.strip() for tok in body.split(","))):
        parts = token.split("-")
        if len(parts) != 2:
            raise FormatError(f"bad arc token {token!r}")
        try:
            arcs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad arc token {token!r}") from None
    try:
        return Diagram(n, tuple(arcs))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_walk(w: Walk) -> str:
    return ",".join("0" if s == 0 else f"{s:+d}" for s in w.steps)


def parse_walk(text: str, k: int) -> Walk:
    text = text.strip()
    steps = []
    if text:
        for token in (tok.strip() for tok in text.split(",")):
            if token != "0" and (token[:1] not in "+-" or not token[1:].isdigit()
                                 or token[1:] == "0"):
                raise FormatError(f"bad step token {token!r}")
            s = int(token)
            if abs(s) > k - 1:
                raise FormatError(f"step token {token!r} out of range for k={k}")
            steps.append(s)
    return Walk(k, tuple(steps))


def format_shapes(shapes: Sequence[Shape]) -> str:
    return ",".join("[" + ",".join(map(str, s)) + "]" for s in shapes)
