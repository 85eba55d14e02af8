"""Tests for the exact dense linear algebra helpers."""

from fractions import Fraction
from random import Random

import pytest

from hallforge import linalg


def _frac_rows(rows):
    return [[Fraction(v) for v in row] for row in rows]


def test_rank_small_cases():
    assert linalg.rank(_frac_rows([[1, 0], [0, 1]])) == 2
    assert linalg.rank(_frac_rows([[1, 2], [2, 4]])) == 1
    assert linalg.rank(_frac_rows([[0, 0], [0, 0]])) == 0


def test_rref_pivots():
    m, pivots = linalg.rref(_frac_rows([[2, 4, 6], [1, 2, 4]]))
    assert pivots == [0, 2]
    assert m[0][:2] == [1, 2]


def test_nullspace_vectors_annihilate():
    rng = Random(21)
    for _ in range(40):
        rows = _frac_rows(
            [[rng.randint(-4, 4) for _ in range(5)] for _ in range(3)]
        )
        basis = linalg.nullspace(rows)
        assert len(basis) == 5 - linalg.rank(rows)
        for vec in basis:
            for row in rows:
                assert sum(a * v for a, v in zip(row, vec)) == 0


def test_invert_round_trip():
    rng = Random(22)
    done = 0
    while done < 20:
        rows = _frac_rows(
            [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        )
        if linalg.rank(rows) < 4:
            continue
        inv = linalg.invert(rows)
        for i in range(4):
            for j in range(4):
                prod = sum(rows[i][k] * inv[k][j] for k in range(4))
                assert prod == (1 if i == j else 0)
        done += 1


def test_invert_singular_raises():
    with pytest.raises(ValueError):
        linalg.invert(_frac_rows([[1, 2], [2, 4]]))


def test_independent_rows():
    rows = _frac_rows([[1, 0, 0], [2, 0, 0], [0, 1, 0]])
    picked = linalg.independent_rows(rows)
    assert picked == [0, 2]
