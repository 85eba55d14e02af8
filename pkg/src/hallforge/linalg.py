"""Dense exact linear algebra over the rationals.

Used for coordinate extraction, re-expanding Lie brackets in a Hall basis,
and the endomorphism-pair solver. Everything stays desk scale (tens of rows),
so plain Gaussian elimination over Fraction is exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def clone(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form. Returns (reduced rows, pivot column indices)."""
    m = clone(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        hit = next((i for i in range(r, nrows) if m[i][col]), None)
        if hit is None:
            continue
        m[r], m[hit] = m[hit], m[r]
        inv = Fraction(1) / m[r][col]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullspace(rows) -> list[list[Fraction]]:
    """Basis of the right kernel {v : rows @ v = 0}."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for free_col in range(ncols):
        if free_col in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free_col] = Fraction(1)
        for row_i, piv_col in enumerate(pivots):
            v[piv_col] = -red[row_i][free_col]
        basis.append(v)
    return basis


def invert(rows) -> Matrix:
    n = len(rows)
    aug = [
        [Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(rows)
    ]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def independent_rows(rows) -> list[int]:
    """Indices of a maximal linearly independent subset of rows (first found)."""
    if not rows:
        return []
    transpose = [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]
    return rref(transpose)[1]
