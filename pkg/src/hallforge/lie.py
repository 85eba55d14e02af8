"""Graded Lie rings attached to the group, and the bilinear-map analysis.

Two constructions of the same object: the Lazard Lie ring reads structure
constants off group commutators of basic elements (leading-weight
coordinates), and the free nilpotent Lie ring brackets the Hall Lie
elements inside the truncated associative algebra and re-expands exactly.
Both are graded by weight, and comparing them end to end is one of the
strongest convention checks in the library.

On top of a graded Lie ring sits the induced bilinear map from the
quotient by the center into the derived subalgebra, with exact fullness,
non-degeneracy, completeness and endomorphism-pair computations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import linalg
from .errors import ShapeMismatchError
from .group import FreeNilpotentGroup, _engine_tables
from .rings import ZZ, Ring


class GradedLieRing:
    """Weight-graded Lie ring with an exact sparse structure-constant table.

    table maps a pair of flat basis indices to a sparse dict over flat
    target indices; missing pairs bracket to zero. Values are exact
    rationals (integers in every shipped construction).
    """

    def __init__(self, dims, table, label=""):
        self.dims = tuple(dims)
        self.label = label
        self.total_dim = sum(self.dims)
        self.weight_of = []
        for w, n in enumerate(self.dims, start=1):
            self.weight_of.extend([w] * n)
        self._starts = [0]
        for n in self.dims:
            self._starts.append(self._starts[-1] + n)
        self.table = {
            pair: dict(targets) for pair, targets in table.items() if targets
        }

    @property
    def nclass(self):
        return len(self.dims)

    def weight_start(self, i):
        return self._starts[i - 1]

    def weight_block(self, i):
        return range(self._starts[i - 1], self._starts[i])

    def bracket_basis(self, a, b):
        """Sparse bracket of two basis elements, as a target -> coeff dict."""
        return dict(self.table.get((a, b), ()))

    def bracket(self, va, vb):
        """Bilinear extension to dense coefficient vectors."""
        if len(va) != self.total_dim or len(vb) != self.total_dim:
            raise ShapeMismatchError("vector length does not match the ring dimension")
        out = [Fraction(0)] * self.total_dim
        for a, ca in enumerate(va):
            if not ca:
                continue
            for b, cb in enumerate(vb):
                if not cb:
                    continue
                for t, c in self.table.get((a, b), {}).items():
                    out[t] += Fraction(ca) * Fraction(cb) * Fraction(c)
        return out

    def _basis_vector(self, a):
        v = [Fraction(0)] * self.total_dim
        v[a] = Fraction(1)
        return v

    def check_antisymmetry(self) -> bool:
        for a in range(self.total_dim):
            for b in range(a, self.total_dim):
                ab = self.bracket_basis(a, b)
                ba = self.bracket_basis(b, a)
                targets = set(ab) | set(ba)
                if any(Fraction(ab.get(t, 0)) + Fraction(ba.get(t, 0)) for t in targets):
                    return False
        return True

    def check_jacobi(self) -> bool:
        n = self.total_dim
        for a in range(n):
            for b in range(n):
                ab = self._bracket_dict_basis(a, b)
                for c in range(n):
                    total = self._bracket_dict_vec(ab, c)
                    for t, v in self._bracket_dict_vec(self._bracket_dict_basis(b, c), a).items():
                        total[t] = total.get(t, Fraction(0)) + v
                    for t, v in self._bracket_dict_vec(self._bracket_dict_basis(c, a), b).items():
                        total[t] = total.get(t, Fraction(0)) + v
                    if any(total.values()):
                        return False
        return True

    def _bracket_dict_basis(self, a, b):
        return {t: Fraction(c) for t, c in self.table.get((a, b), {}).items()}

    def _bracket_dict_vec(self, vec: dict, c):
        """Bracket of a sparse vector with basis element c, as [[vec, e_c]]."""
        out: dict = {}
        for a, ca in vec.items():
            for t, v in self.table.get((a, c), {}).items():
                out[t] = out.get(t, Fraction(0)) + ca * Fraction(v)
        return {t: v for t, v in out.items() if v}

    def center_basis(self):
        """Exact nullspace of all right-bracket maps, as dense vectors."""
        n = self.total_dim
        rows = []
        for b in range(n):
            for t in range(n):
                row = [Fraction(self.table.get((a, b), {}).get(t, 0)) for a in range(n)]
                if any(row):
                    rows.append(row)
        if not rows:
            return [self._basis_vector(a) for a in range(n)]
        return linalg.nullspace(rows)

    def center_is_top_block(self) -> bool:
        kernel = self.center_basis()
        top = self.weight_block(self.nclass)
        if len(kernel) != self.dims[-1]:
            return False
        return all(
            not v[i] for v in kernel for i in range(self.total_dim) if i not in top
        )

    def __repr__(self):
        return f"GradedLieRing(dims={self.dims}, label={self.label!r})"


@lru_cache(maxsize=None)
def lazard_lie_ring(rank: int, nclass: int, ring: Ring = ZZ) -> GradedLieRing:
    """Structure constants from leading coordinates of group commutators."""
    grp = FreeNilpotentGroup(rank, nclass, ring)
    basis = grp.basis
    table = {}
    for a, ea in enumerate(basis.entries):
        for b, eb in enumerate(basis.entries):
            if a == b or ea.weight + eb.weight > nclass:
                continue
            com = grp.commutator(grp.basic(ea.pair), grp.basic(eb.pair))
            w = ea.weight + eb.weight
            if grp.gamma_weight(com) < w:
                raise RuntimeError(
                    f"commutator of weights {ea.weight} and {eb.weight} has "
                    f"coordinates below weight {w}"
                )
            targets = {}
            for t in basis.weight_block(w):
                v = com.coords[t]
                if v:
                    targets[t] = int(v)
            if targets:
                table[(a, b)] = targets
    return GradedLieRing(basis.counts, table, label=f"lazard({rank},{nclass})")


@lru_cache(maxsize=None)
def free_nilpotent_lie(rank: int, nclass: int) -> GradedLieRing:
    """Structure constants by bracketing Hall Lie elements and re-expanding."""
    tables = _engine_tables(rank, nclass)
    basis = tables.basis
    table = {}
    for a, ea in enumerate(basis.entries):
        for b, eb in enumerate(basis.entries):
            if a == b or ea.weight + eb.weight > nclass:
                continue
            la = basis.lie_element(ea)
            lb = basis.lie_element(eb)
            prod = la * lb - lb * la
            w = ea.weight + eb.weight
            vals = [Fraction(prod.coeff(word)) for word in tables.pivot_words[w - 1]]
            coeffs = []
            for row in tables.solvers[w - 1]:
                coeffs.append(sum((q * v for q, v in zip(row, vals)), Fraction(0)))
            # the solver matches pivot words only; confirm the full expansion
            block = basis.weight_block(w)
            residual = prod
            for c, flat in zip(coeffs, block):
                if c:
                    residual = residual - c * basis.lie_element(basis.entries[flat])
            if residual.coeffs:
                raise RuntimeError(
                    f"bracket of {ea.pair} and {eb.pair} is not in the "
                    f"weight-{w} Hall span"
                )
            targets = {}
            for c, flat in zip(coeffs, block):
                if c:
                    if c.denominator != 1:
                        raise RuntimeError(
                            f"non-integer structure constant {c} at "
                            f"({ea.pair}, {eb.pair})"
                        )
                    targets[flat] = int(c)
            if targets:
                table[(a, b)] = targets
    return GradedLieRing(basis.counts, table, label=f"free({rank},{nclass})")


def _tables_equal(A: GradedLieRing, B: GradedLieRing, signs=None) -> bool:
    keys = set(A.table) | set(B.table)
    for a, b in keys:
        ta = A.table.get((a, b), {})
        tb = B.table.get((a, b), {})
        targets = set(ta) | set(tb)
        for t in targets:
            va = Fraction(ta.get(t, 0))
            if signs is not None:
                va *= signs[a] * signs[b] * signs[t]
            if va != Fraction(tb.get(t, 0)):
                return False
    return True


def compare_graded_lie(A: GradedLieRing, B: GradedLieRing) -> bool:
    """Exact structure-constant match, allowing a per-element sign flip.

    Both rings must carry the same Hall convention; a diagonal change of
    basis by signs is the only mismatch this will repair before reporting
    a genuine difference.
    """
    if A.dims != B.dims:
        return False
    if _tables_equal(A, B):
        return True
    n = A.total_dim
    for bits in product((1, -1), repeat=n):
        if _tables_equal(A, B, signs=bits):
            return True
    return False


# -- the induced bilinear map --------------------------------------------------


class BilinearMapData:
    """The bracket as a map (quotient by center) x (same) -> derived subring.

    Domain basis: weights below the class; codomain basis: weights 2 and up.
    tensor[(a, b)][t] gives the codomain coefficients on domain basis pairs.
    """

    def __init__(self, lie: GradedLieRing):
        if not lie.center_is_top_block():
            raise ShapeMismatchError(
                "the quotient construction needs the center to be the top block"
            )
        self.lie = lie
        c = lie.nclass
        self.domain_flats = [
            i for i in range(lie.total_dim) if lie.weight_of[i] < c
        ]
        self.codomain_flats = [
            i for i in range(lie.total_dim) if lie.weight_of[i] >= 2
        ]
        self.domain_dim = len(self.domain_flats)
        self.codomain_dim = len(self.codomain_flats)
        self._co_index = {flat: k for k, flat in enumerate(self.codomain_flats)}
        self.tensor = {}
        for a, fa in enumerate(self.domain_flats):
            for b, fb in enumerate(self.domain_flats):
                got = lie.table.get((fa, fb))
                if got:
                    self.tensor[(a, b)] = {
                        self._co_index[t]: Fraction(c) for t, c in got.items()
                    }

    def value(self, x, y):
        """f(x, y) for dense domain vectors, as a dense codomain vector."""
        if len(x) != self.domain_dim or len(y) != self.domain_dim:
            raise ShapeMismatchError("domain vector length mismatch")
        out = [Fraction(0)] * self.codomain_dim
        for a, ca in enumerate(x):
            if not ca:
                continue
            for b, cb in enumerate(y):
                if not cb:
                    continue
                for t, c in self.tensor.get((a, b), {}).items():
                    out[t] += Fraction(ca) * Fraction(cb) * c
        return out

    def is_full(self) -> bool:
        """The image values span the whole codomain (exact rank)."""
        rows = []
        for targets in self.tensor.values():
            rows.append(
                [targets.get(t, Fraction(0)) for t in range(self.codomain_dim)]
            )
        if not rows:
            return self.codomain_dim == 0
        return linalg.rank(rows) == self.codomain_dim

    def left_kernel(self):
        """Basis of {x : f(x, e_b) = 0 for all b}."""
        rows = []
        for b in range(self.domain_dim):
            for t in range(self.codomain_dim):
                row = [
                    self.tensor.get((a, b), {}).get(t, Fraction(0))
                    for a in range(self.domain_dim)
                ]
                if any(row):
                    rows.append(row)
        if not rows:
            return linalg.nullspace([[Fraction(0)] * self.domain_dim])
        return linalg.nullspace(rows)

    def right_kernel(self):
        rows = []
        for a in range(self.domain_dim):
            for t in range(self.codomain_dim):
                row = [
                    self.tensor.get((a, b), {}).get(t, Fraction(0))
                    for b in range(self.domain_dim)
                ]
                if any(row):
                    rows.append(row)
        if not rows:
            return linalg.nullspace([[Fraction(0)] * self.domain_dim])
        return linalg.nullspace(rows)

    def is_nondegenerate(self) -> bool:
        return not self.left_kernel() and not self.right_kernel()


def bilinear_from_lie(lie: GradedLieRing) -> BilinearMapData:
    return BilinearMapData(lie)


@dataclass(frozen=True)
class EndoPair:
    """A pair of matrices (on the domain, on the codomain) compatible with f."""

    phi1: tuple  # domain_dim x domain_dim, rows of Fractions
    phi0: tuple  # codomain_dim x codomain_dim

    def scalar_value(self):
        """The scalar if both matrices are the same multiple of the identity."""
        alpha = None
        for mat in (self.phi1, self.phi0):
            for i, row in enumerate(mat):
                for j, v in enumerate(row):
                    if i == j:
                        if alpha is None:
                            alpha = v
                        elif v != alpha:
                            return None
                    elif v:
                        return None
        return alpha


def endomorphism_pair_space(B: BilinearMapData) -> list:
    """Nullspace basis of the compatibility system on matrix pairs.

    The system states f(phi1 x, y) = phi0 f(x, y) = f(x, phi1 y) on all
    basis pairs. For the bilinear data of a free nilpotent Lie ring the
    space is one-dimensional and consists of the scalar pairs: every
    compatible endomorphism pair acts by a single scalar over Q.
    """
    m, n = B.domain_dim, B.codomain_dim
    nun = m * m + n * n

    def p1(i, j):
        return i * m + j

    def p0(i, j):
        return m * m + i * n + j

    def tens(a, b, t):
        return B.tensor.get((a, b), {}).get(t, Fraction(0))

    rows = []
    for a in range(m):
        for b in range(m):
            for w in range(n):
                row = [Fraction(0)] * nun
                for s in range(m):
                    row[p1(s, a)] += tens(s, b, w)
                for v in range(n):
                    row[p0(w, v)] -= tens(a, b, v)
                if any(row):
                    rows.append(row)
                row = [Fraction(0)] * nun
                for s in range(m):
                    row[p1(s, b)] += tens(a, s, w)
                for v in range(n):
                    row[p0(w, v)] -= tens(a, b, v)
                if any(row):
                    rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * nun]
    out = []
    for vec in linalg.nullspace(rows):
        phi1 = tuple(tuple(vec[p1(i, j)] for j in range(m)) for i in range(m))
        phi0 = tuple(tuple(vec[p0(i, j)] for j in range(n)) for i in range(n))
        out.append(EndoPair(phi1, phi0))
    return out


def endo_pair_satisfies(B: BilinearMapData, pair: EndoPair) -> bool:
    """Direct check of the compatibility equations on all basis pairs."""
    m, n = B.domain_dim, B.codomain_dim

    def basis_vec(k, size):
        v = [Fraction(0)] * size
        v[k] = Fraction(1)
        return v

    def apply(mat, vec):
        return [
            sum((Fraction(mat[i][j]) * vec[j] for j in range(len(vec))), Fraction(0))
            for i in range(len(mat))
        ]

    for a in range(m):
        ea = basis_vec(a, m)
        pa = apply(pair.phi1, ea)
        for b in range(m):
            eb = basis_vec(b, m)
            base = apply(pair.phi0, B.value(ea, eb))
            if B.value(pa, eb) != base:
                return False
            if B.value(ea, apply(pair.phi1, eb)) != base:
                return False
    return True


def complete_system_check(B: BilinearMapData, vectors) -> bool:
    """Whether f(x, E) = f(E, x) = 0 over the given set E forces x = 0."""
    vectors = [list(v) for v in vectors]
    rows = []
    for e in vectors:
        if len(e) != B.domain_dim:
            raise ShapeMismatchError("test vector length mismatch")
        for t in range(B.codomain_dim):
            row = [
                sum(
                    (Fraction(e[b]) * B.tensor.get((a, b), {}).get(t, Fraction(0))
                     for b in range(B.domain_dim)),
                    Fraction(0),
                )
                for a in range(B.domain_dim)
            ]
            if any(row):
                rows.append(row)
            row = [
                sum(
                    (Fraction(e[a]) * B.tensor.get((a, b), {}).get(t, Fraction(0))
                     for a in range(B.domain_dim)),
                    Fraction(0),
                )
                for b in range(B.domain_dim)
            ]
            if any(row):
                rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * B.domain_dim]
    return not linalg.nullspace(rows)


def width_probe(B: BilinearMapData, u, s: int, bound: int = 2) -> bool:
    """Bounded search for u as a sum of at most s bracket values.

    Heuristic by design: the first factor of each summand ranges over the
    integer box [-bound, bound]^m (the second is solved exactly for the
    last summand, boxed otherwise). False means not found in the box, not
    a proof of impossibility.
    """
    u = [Fraction(v) for v in u]
    if not any(u):
        return True
    if s <= 0:
        return False
    m = B.domain_dim
    box = [
        vec
        for vec in product(range(-bound, bound + 1), repeat=m)
        if any(vec)
    ]
    for x in box:
        rows = []
        rhs = []
        for t in range(B.codomain_dim):
            rows.append(
                [
                    sum(
                        (Fraction(x[a]) * B.tensor.get((a, b), {}).get(t, Fraction(0))
                         for a in range(m)),
                        Fraction(0),
                    )
                    for b in range(m)
                ]
            )
            rhs.append(u[t])
        if _consistent(rows, rhs):
            return True
    if s >= 2:
        for x in box:
            for y in product(range(-bound, bound + 1), repeat=m):
                val = B.value(list(x), list(y))
                if not any(val):
                    continue
                rest = [a - b for a, b in zip(u, val)]
                if width_probe(B, rest, s - 1, bound):
                    return True
    return False


def _consistent(rows, rhs) -> bool:
    plain = [list(r) for r in rows]
    augmented = [list(r) + [v] for r, v in zip(rows, rhs)]
    return linalg.rank(plain) == linalg.rank(augmented)


# -- centralizer kernels -------------------------------------------------------


def centralizer_weight_kernels(lie: GradedLieRing, j: int) -> list:
    """Kernels of bracketing with the weight-1 basis element j, per weight.

    Returns one kernel basis per weight w = 1..c-1, each a list of dense
    vectors over the weight-w block. The free nilpotent expectation: at
    weight 1, exactly the line of the element itself; empty at 2..c-1.
    """
    if not 1 <= j <= lie.dims[0]:
        raise ShapeMismatchError(f"no weight-1 basis element {j}")
    gen = lie.weight_start(1) + (j - 1)
    out = []
    for w in range(1, lie.nclass):
        block = list(lie.weight_block(w))
        targets = list(lie.weight_block(w + 1))
        rows = []
        for t in targets:
            row = [Fraction(lie.table.get((a, gen), {}).get(t, 0)) for a in block]
            if any(row):
                rows.append(row)
        if not rows:
            rows = [[Fraction(0)] * len(block)]
        out.append(linalg.nullspace(rows))
    return out


def centralizer_line_holds(lie: GradedLieRing, j: int) -> bool:
    """Exact coordinate statement: the centralizer is the element's own line
    plus the center."""
    kernels = centralizer_weight_kernels(lie, j)
    k1 = kernels[0]
    if len(k1) != 1:
        return False
    vec = k1[0]
    if any(vec[i] for i in range(len(vec)) if i != j - 1) or not vec[j - 1]:
        return False
    return all(not k for k in kernels[1:])
