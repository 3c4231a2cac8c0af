import itertools
from fractions import Fraction

import pytest

from pseudoknot.core import Series, chamber_origin, in_chamber
from pseudoknot.oracle import oracle_walk_total
from pseudoknot.walks import (
    bessel_series,
    chamber_walk_count,
    chamber_walk_counts,
    coefficient_counts,
    reflection_count,
    reflection_counts,
    signed_group_elements,
    unconstrained_walk_count,
)


def step_set(k, zero):
    steps = [s for i in range(1, k) for s in (i, -i)]
    return steps + [0] if zero else steps


def walk_points(start, steps):
    pos = list(start)
    out = [tuple(pos)]
    for s in steps:
        if s:
            pos[abs(s) - 1] += 1 if s > 0 else -1
        out.append(tuple(pos))
    return out


def brute_walks(k, n, start, end, zero, confined):
    total = 0
    for steps in itertools.product(step_set(k, zero), repeat=n):
        pts = walk_points(start, steps)
        if pts[-1] != tuple(end):
            continue
        if confined and not all(in_chamber(p) for p in pts):
            continue
        total += 1
    return total


@pytest.mark.parametrize("k,n_max", [(2, 10), (3, 7), (4, 5)])
@pytest.mark.parametrize("zero", [True, False])
def test_chamber_dp_matches_step_enumeration(k, n_max, zero):
    a = chamber_origin(k)
    want = [brute_walks(k, n, a, a, zero, True) for n in range(n_max + 1)]
    assert chamber_walk_counts(k, n_max, zero) == want


def test_chamber_examples():
    assert chamber_walk_count(2, 3, True) == 4
    assert chamber_walk_count(2, 4, False) == 2
    assert chamber_walk_count(3, 4, False) == 3
    for k in (2, 3, 5):
        assert chamber_walk_count(k, 0, True) == chamber_walk_count(k, 0, False) == 1


def test_unconstrained_examples():
    assert unconstrained_walk_count(2, 2, (1,), (1,), True) == 3
    assert unconstrained_walk_count(2, 2, (-1,), (1,), True) == 1
    assert unconstrained_walk_count(2, 1, (0,), (5,), True) == 0


@pytest.mark.parametrize("k,n", [(2, 6), (3, 5), (4, 4)])
def test_unconstrained_matches_enumeration(k, n):
    start = chamber_origin(k)
    for end in itertools.product(range(-1, 4), repeat=k - 1):
        for zero in (True, False):
            assert unconstrained_walk_count(k, n, start, end, zero) == \
                brute_walks(k, n, start, end, zero, False)


def test_group_elements():
    g2 = signed_group_elements(2)
    assert [(g((3,)), s) for g, s in g2] == [((3,), 1), ((-3,), -1)]
    g3 = signed_group_elements(3)
    assert len(g3) == 8
    assert sum(1 for _, s in g3 if s == 1) == 4
    assert len(signed_group_elements(4)) == 48
    images = {g((3, 2, 1)) for g, _ in signed_group_elements(4)}
    assert len(images) == 48


def test_group_signs_are_determinants():
    import numpy as np

    for g, sign in signed_group_elements(4):
        cols = [g(tuple(int(i == j) for i in range(3))) for j in range(3)]
        assert round(np.linalg.det(np.array(cols, dtype=float))) == sign


def test_reflection_examples():
    assert reflection_count(2, 2, (1,), (1,), True) == 2
    assert reflection_count(2, 0, (1,), (1,), True) == 1
    assert reflection_count(3, 4, (2, 1), (2, 1), False) == 3


def test_reflection_rejects_wall_points():
    with pytest.raises(ValueError):
        reflection_count(3, 2, (1, 1), (2, 1), True)
    with pytest.raises(ValueError):
        reflection_count(2, 2, (1,), (0,), True)


def test_reflection_general_endpoints():
    start, end = (4, 1), (3, 2)
    for n in range(7):
        assert reflection_count(3, n, start, end, True) == \
            brute_walks(3, n, start, end, True, True)


def test_bessel_examples():
    assert bessel_series(0, 4) == Series([1, 0, 1, 0, Fraction(1, 4)], 4)
    # x^2 coefficient is 1/(0! 2!); the normalization is pinned by the walk counts
    assert bessel_series(2, 4) == Series([0, 0, Fraction(1, 2), 0, Fraction(1, 6)], 4)
    assert bessel_series(5, 4) == Series.zero(4)
    assert bessel_series(-2, 6) == bessel_series(2, 6)


def test_coefficient_examples():
    c2 = coefficient_counts(2, 4, False)
    assert c2[4] == 2 and c2[3] == 0
    assert coefficient_counts(3, 4, False)[4] == 3


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("zero", [True, False])
def test_bessel_normalization_pinned_by_dp(k, zero):
    assert coefficient_counts(k, 8, zero) == chamber_walk_counts(k, 8, zero)


def test_parity_and_monotonicity():
    for k in (2, 3, 4, 5):
        seq = chamber_walk_counts(k, 14, False)
        assert all(v == 0 for v in seq[1::2])
    for z in (True, False):
        for k in (2, 3, 4):
            lo, hi = chamber_walk_counts(k, 14, z), chamber_walk_counts(k + 1, 14, z)
            assert all(b >= a for a, b in zip(lo, hi))


def test_wall_touching_lemma():
    """A walk from a that leaves the chamber first lands on a wall."""
    k, a = 3, chamber_origin(3)
    for n in range(1, 7):
        for steps in itertools.product(step_set(k, True), repeat=n):
            pts = walk_points(a, steps)
            if in_chamber(pts[-1]):
                continue
            first_out = next(p for p in pts if not in_chamber(p))
            assert first_out[1] == 0 or first_out[0] == first_out[1]


def test_walk_counts_match_diagram_oracle():
    for k in (2, 3, 4):
        for n in range(11):
            assert chamber_walk_count(k, n, True) == oracle_walk_total(n, k)


def test_reflection_counts_vector_agree_with_single():
    a = chamber_origin(4)
    vec = reflection_counts(4, 8, a, a, True)
    assert vec[8] == reflection_count(4, 8, a, a, True)


def test_int64_to_object_switch_is_exact():
    # 5**30 overflows int64, so this exercises the object-dtype path
    a = chamber_origin(3)
    big = chamber_walk_counts(3, 30, True)
    assert big[30] == coefficient_counts(3, 30, True)[30]
    assert big[30] == reflection_counts(3, 30, a, a, True)[30]
