"""Free nilpotent groups in Hall coordinates over a binomial ring.

An element is its exponent vector in the ordered basic-commutator basis:
g = u_1^(a_1) ... u_N^(a_N). All arithmetic runs through the faithful
embedding into truncated series (generators map to 1 + x_j): multiply or
power the series, then read the coordinates back.

Coordinate extraction peels one weight at a time. After the blocks below
weight i have been stripped off on the left, the degree-i component of the
remaining series is exactly sum_j a_ij * lie(u_ij): every basis factor
contributes its Lie element at its own weight and nothing else that low.
The a_ij are solved from an exact linear system that is invertible because
the weight-i Lie elements are independent; the solved block is stripped and
the next weight repeats. The final residue must be exactly 1, which makes
every extraction self-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from random import Random

from . import linalg
from .basis import HallBasis, hall_basis
from .errors import NotGroupLikeError, ShapeMismatchError
from .rings import ZZ, Ring
from .series import (
    TruncatedSeries,
    augmentation_powers,
    group_commutator_series,
    group_like_inverse,
    series_pow,
)


@dataclass(frozen=True)
class _EngineTables:
    basis: HallBasis
    images: tuple  # embedding image per basis entry
    augs: tuple  # augmentation power list per basis entry
    pivot_words: tuple  # per weight: tuple of words
    solvers: tuple  # per weight: inverse matrix rows (Fractions)


@lru_cache(maxsize=None)
def _engine_tables(rank: int, nclass: int, allow_rank_one: bool = False) -> _EngineTables:
    # ring-independent: image coefficients are integers, valid in every ring
    basis = hall_basis(rank, nclass, allow_rank_one)
    images = tuple(basis.embedding_image(e) for e in basis.entries)
    augs = tuple(augmentation_powers(img) for img in images)

    pivot_words = []
    solvers = []
    for i in range(1, nclass + 1):
        block = basis.weight_block(i)
        words = sorted(itertools.product(range(1, rank + 1), repeat=i))
        lies = [basis.lie_element(basis.entries[f]) for f in block]
        matrix = [[Fraction(lie.coeff(w)) for lie in lies] for w in words]
        rows = linalg.independent_rows(matrix)
        if len(rows) != len(lies):
            raise RuntimeError(
                f"weight-{i} Lie elements are not independent (rank {len(rows)})"
            )
        chosen = rows[: len(lies)]
        pivot_words.append(tuple(words[k] for k in chosen))
        solvers.append(tuple(tuple(r) for r in linalg.invert([matrix[k] for k in chosen])))
    return _EngineTables(basis, images, augs, tuple(pivot_words), tuple(solvers))


class GroupElement:
    __slots__ = ("group", "coords", "_series")

    def __init__(self, group, coords, series=None):
        self.group = group
        self.coords = coords
        self._series = series

    def __mul__(self, other):
        return self.group.mul(self, other)

    def __pow__(self, exponent):
        return self.group.pow(self, exponent)

    def inverse(self):
        return self.group.inv(self)

    def __eq__(self, other):
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.group == other.group and list(self.coords) == list(other.coords)

    __hash__ = None

    def __repr__(self):
        return f"GroupElement({list(self.coords)})"


class FreeNilpotentGroup:
    """N(rank, class) over a binomial ring, with exact Hall-coordinate arithmetic."""

    def __init__(self, rank: int, nclass: int, ring: Ring = ZZ, allow_rank_one=False):
        self._tables = _engine_tables(rank, nclass, allow_rank_one)
        self.rank = rank
        self.nclass = nclass
        self.ring = ring
        self.basis = self._tables.basis

    # -- identity and construction ------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, FreeNilpotentGroup)
            and self.rank == other.rank
            and self.nclass == other.nclass
            and self.ring == other.ring
        )

    __hash__ = None

    def __repr__(self):
        return f"FreeNilpotentGroup(rank={self.rank}, nclass={self.nclass}, ring={self.ring.name})"

    @property
    def dimension(self):
        return len(self.basis)

    def element(self, coords) -> GroupElement:
        coords = tuple(self.ring.coerce(a) for a in coords)
        if len(coords) != self.dimension:
            raise ShapeMismatchError(
                f"{len(coords)} coordinates for a basis of size {self.dimension}"
            )
        return GroupElement(self, coords)

    def identity(self) -> GroupElement:
        return GroupElement(self, (self.ring.zero,) * self.dimension)

    def basic(self, pair) -> GroupElement:
        flat = self.basis.flat(pair)
        coords = [self.ring.zero] * self.dimension
        coords[flat] = self.ring.one
        return GroupElement(self, tuple(coords))

    def generator(self, j) -> GroupElement:
        return self.basic((1, j))

    def generators(self):
        return [self.generator(j) for j in range(1, self.rank + 1)]

    def random_element(self, rng: Random, lo=-9, hi=9) -> GroupElement:
        return self.element(
            [self.ring.random_element(rng, lo, hi) for _ in range(self.dimension)]
        )

    def _own(self, g: GroupElement):
        if not isinstance(g, GroupElement) or g.group != self:
            raise ShapeMismatchError("element does not belong to this group")
        return g

    # -- series round trip ----------------------------------------------------

    def series_from_coords(self, coords) -> TruncatedSeries:
        t = self._tables
        s = TruncatedSeries.one(self.rank, self.nclass)
        for flat, a in enumerate(coords):
            if not a:
                continue
            s = s * series_pow(t.images[flat], a, self.ring, aug_powers=t.augs[flat])
        return s

    def to_series(self, g: GroupElement) -> TruncatedSeries:
        self._own(g)
        if g._series is None:
            g._series = self.series_from_coords(g.coords)
        return g._series

    def coords_from_series(self, s: TruncatedSeries):
        if s.rank != self.rank or s.cutoff != self.nclass:
            raise ShapeMismatchError("series shape does not match the group")
        if not s.is_group_like():
            raise NotGroupLikeError("series has constant coefficient != 1")
        t = self._tables
        ring = self.ring
        coords = []
        for i in range(1, self.nclass + 1):
            comp = s.degree_component(i)
            vals = [comp.get(w, 0) for w in t.pivot_words[i - 1]]
            block = []
            for row in t.solvers[i - 1]:
                acc = 0
                for q, v in zip(row, vals):
                    if v:
                        acc = acc + q * v
                block.append(ring.coerce(acc))
            start = self.basis.weight_start(i)
            for j, a in enumerate(block):
                if not a:
                    continue
                flat = start + j
                s = series_pow(t.images[flat], -a, ring, aug_powers=t.augs[flat]) * s
            coords.extend(block)
        if s != TruncatedSeries.one(self.rank, self.nclass):
            raise NotGroupLikeError("series is not a coordinate image over this ring")
        return tuple(coords)

    def from_series(self, s: TruncatedSeries) -> GroupElement:
        return GroupElement(self, self.coords_from_series(s), series=s)

    # -- arithmetic -----------------------------------------------------------

    def mul_coords(self, a, b):
        s = self.series_from_coords(a) * self.series_from_coords(b)
        return self.coords_from_series(s)

    def pow_coords(self, a, exponent):
        s = series_pow(self.series_from_coords(a), exponent, self.ring)
        return self.coords_from_series(s)

    def inv_coords(self, a):
        return self.coords_from_series(group_like_inverse(self.series_from_coords(a)))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._own(g)
        self._own(h)
        s = self.to_series(g) * self.to_series(h)
        return self.from_series(s)

    def pow(self, g: GroupElement, exponent) -> GroupElement:
        self._own(g)
        exponent = self.ring.coerce(exponent)
        s = series_pow(self.to_series(g), exponent, self.ring)
        return self.from_series(s)

    def inv(self, g: GroupElement) -> GroupElement:
        self._own(g)
        return self.from_series(group_like_inverse(self.to_series(g)))

    def commutator(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """[g, h] = g^-1 h^-1 g h."""
        self._own(g)
        self._own(h)
        s = group_commutator_series(self.to_series(g), self.to_series(h))
        return self.from_series(s)

    def conjugate(self, g: GroupElement, h: GroupElement) -> GroupElement:
        """h^-1 g h."""
        s = group_like_inverse(self.to_series(h)) * self.to_series(g) * self.to_series(h)
        return self.from_series(s)

    # -- structure ------------------------------------------------------------

    def gamma_weight(self, g: GroupElement) -> int:
        """Least weight with a nonzero coordinate; class + 1 for the identity."""
        self._own(g)
        for i in range(1, self.nclass + 1):
            if any(g.coords[f] for f in self.basis.weight_block(i)):
                return i
        return self.nclass + 1

    def is_central(self, g: GroupElement) -> bool:
        return self.gamma_weight(g) >= self.nclass

    def weight_block_coords(self, g: GroupElement, i):
        return tuple(g.coords[f] for f in self.basis.weight_block(i))

    def centralizer_structure_check(self, j: int, rng: Random | None = None, samples=40):
        """Sampled checks that the centralizer of u_1j is {u_1j^a * central}.

        Verifies: built centralizer elements commute; every sampled element
        either fails to commute or decomposes exactly as u_1j^a * z with z in
        the weight-class block; and the center is exactly that block.
        """
        rng = rng or Random(0)
        u = self.generator(j)
        one = self.identity()
        n_c = self.basis.counts[-1]
        start_c = self.basis.weight_start(self.nclass)
        report = {
            "built_elements_commute": True,
            "decomposition_exact": True,
            "rejects_noncommuting": 0,
            "center_is_weight_c_block": True,
        }

        for _ in range(samples):
            a = self.ring.random_element(rng)
            z = [self.ring.zero] * self.dimension
            for s in range(n_c):
                z[start_c + s] = self.ring.random_element(rng)
            x = self.mul(self.pow(u, a), self.element(z))
            if self.commutator(x, u) != one:
                report["built_elements_commute"] = False

        for _ in range(samples):
            x = self.random_element(rng)
            if self.commutator(x, u) != one:
                report["rejects_noncommuting"] += 1
                continue
            a = x.coords[self.basis.flat((1, j))]
            z = self.mul(self.pow(u, -a), x)
            if not self.is_central(z) or self.mul(self.pow(u, a), z) != x:
                report["decomposition_exact"] = False

        gens = self.generators()
        for _ in range(samples):
            z = [self.ring.zero] * self.dimension
            for s in range(n_c):
                z[start_c + s] = self.ring.random_element(rng)
            zc = self.element(z)
            if any(self.commutator(zc, g) != one for g in gens):
                report["center_is_weight_c_block"] = False
            x = self.random_element(rng)
            if not self.is_central(x):
                if all(self.commutator(x, g) == one for g in gens):
                    report["center_is_weight_c_block"] = False

        report["ok"] = (
            report["built_elements_commute"]
            and report["decomposition_exact"]
            and report["center_is_weight_c_block"]
        )
        return report
