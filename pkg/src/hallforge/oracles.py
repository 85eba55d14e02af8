"""Independent cross-check implementations.

These deliberately avoid the series engine and the Hall-basis machinery:
a 3x3 integer unitriangular matrix model for the rank-2 class-2 group, and
necklace (Moebius) counting for the number of basic commutators per weight.
"""

from __future__ import annotations


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    p = 2
    m = n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def witt_dimension(rank: int, weight: int) -> int:
    """Number of weight-i basic commutators on `rank` generators (necklace count)."""
    total = 0
    for d in range(1, weight + 1):
        if weight % d == 0:
            total += _mobius(d) * rank ** (weight // d)
    return total // weight


# -- 3x3 unitriangular integer matrices ---------------------------------------


def mat_mul(a, b):
    return [
        [sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)] for i in range(3)
    ]


def mat_identity():
    return [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def mat_inv_unitriangular(m):
    """Closed-form inverse for [[1,a,c],[0,1,b],[0,0,1]]."""
    a, b, c = m[0][1], m[1][2], m[0][2]
    return [[1, -a, a * b - c], [0, 1, -b], [0, 0, 1]]


def mat_pow(m, n: int):
    if n < 0:
        return mat_pow(mat_inv_unitriangular(m), -n)
    result = mat_identity()
    base = [row[:] for row in m]
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        n >>= 1
    return result


class Ut3Oracle:
    """Rank-2 class-2 coordinates realized by integer unitriangular matrices.

    Generators map to I + E12 and I + E23; the weight-2 basis element is their
    group commutator computed inside the oracle, so the sign convention matches
    by construction rather than by fiat.
    """

    def __init__(self):
        self.a = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
        self.b = [[1, 0, 0], [0, 1, 1], [0, 0, 1]]
        inv = mat_inv_unitriangular
        # [x2, x1] = x2^-1 x1^-1 x2 x1
        self.c = mat_mul(mat_mul(inv(self.b), inv(self.a)), mat_mul(self.b, self.a))
        self._c13 = self.c[0][2]
        assert self._c13 in (1, -1)

    def from_coords(self, coords):
        a1, a2, a3 = coords
        m = mat_mul(mat_pow(self.a, a1), mat_pow(self.b, a2))
        return mat_mul(m, mat_pow(self.c, a3))

    def to_coords(self, m):
        a1, a2 = m[0][1], m[1][2]
        a3 = (m[0][2] - a1 * a2) * self._c13  # c13 is +-1
        return (a1, a2, a3)

    def mul(self, x, y):
        return self.to_coords(mat_mul(self.from_coords(x), self.from_coords(y)))

    def pow(self, x, n: int):
        return self.to_coords(mat_pow(self.from_coords(x), n))

    def inv(self, x):
        return self.to_coords(mat_inv_unitriangular(self.from_coords(x)))
