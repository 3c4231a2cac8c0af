import pytest

from pseudoknot import transforms
from pseudoknot.closedforms import (
    f2_closed,
    f3_closed,
    s2_recursion_check,
    s2_waterman,
    s3_closed,
    s3_recursion_check,
    waterman_arcs,
)
from pseudoknot.oracle import oracle_count


def test_f_closed_examples():
    assert f2_closed(4, 0) == 2
    assert f3_closed(4, 0) == 3
    assert f2_closed(5, 0) == 0


def test_f_closed_match_transforms():
    for n in range(41):
        for l in range(n + 1):
            assert f2_closed(n, l) == transforms.f(2, n, l)
            assert f3_closed(n, l) == transforms.f(3, n, l)


def test_waterman_examples():
    assert s2_waterman(4, 2) == 3
    assert all(s2_waterman(n, n) == 1 for n in range(12))
    assert waterman_arcs(4, 1) == 3
    assert waterman_arcs(8, 1) == 21
    assert waterman_arcs(5, 3) == 0
    with pytest.raises(ValueError):
        waterman_arcs(5, 0)


def test_waterman_single_arc_by_hand():
    # one arc (i, j) with j >= i + 2 on n vertices
    for n in range(2, 15):
        arcs = sum(1 for i in range(1, n + 1) for j in range(i + 2, n + 1))
        assert waterman_arcs(n, 1) == arcs


def test_waterman_change_of_variables():
    for n in range(2, 30):
        for l in range(n % 2, n - 1, 2):
            assert s2_waterman(n, l) == waterman_arcs(n, (n - l) // 2)


def test_waterman_equals_S2():
    for n in range(41):
        for l in range(n + 1):
            assert s2_waterman(n, l) == transforms.S(2, n, l)


def test_waterman_equals_oracle():
    for n in range(10):
        for l in range(n + 1):
            assert s2_waterman(n, l) == oracle_count(n, 2, "plain", l)


def test_s2_recursion():
    for n in range(4, 31):
        for l in range(0, n - 1):
            assert s2_recursion_check(n, l)


def test_s2_recursion_negative_control():
    def corrupted(m, l):
        return transforms.S(2, m, l) + (1 if (m, l) == (10, 2) else 0)

    assert not s2_recursion_check(10, 2, corrupted)


def test_s3_closed():
    assert s3_closed(4, 4) == 1
    assert s3_closed(4, 0) == 1
    assert sum(s3_closed(7, l) for l in range(8)) == 105
    for n in range(31):
        for l in range(n + 1):
            assert s3_closed(n, l) == transforms.S(3, n, l)


def test_s3_recursion():
    for n in range(7, 31):
        for l in range(n % 2, n + 1, 2):
            assert s3_recursion_check(n, l)


def test_s3_recursion_all_isolated_rows():
    for n in range(7, 31):
        assert s3_recursion_check(n, n)


def test_s3_recursion_negative_control():
    def corrupted(m, l):
        return transforms.S(3, m, l) * (2 if (m, l) == (12, 2) else 1)

    assert not s3_recursion_check(12, 2, corrupted)
