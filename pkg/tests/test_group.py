"""Tests for coordinate arithmetic in the free nilpotent group engine."""

from random import Random

import pytest

from hallforge.errors import NotGroupLikeError, ShapeMismatchError
from hallforge.group import FreeNilpotentGroup
from hallforge.oracles import Ut3Oracle
from hallforge.rings import QQ, ZZ, PolyRing
from hallforge.series import TruncatedSeries


def test_frozen_products_rank2_class2():
    g = FreeNilpotentGroup(2, 2)
    x1, x2 = g.generator(1), g.generator(2)
    assert g.mul(x1, x2).coords == (1, 1, 0)
    assert g.mul(x2, x1).coords == (1, 1, 1)
    assert g.commutator(x1, x2).coords == (0, 0, -1)
    assert g.commutator(x2, x1).coords == (0, 0, 1)
    assert g.inv(x1).coords == (-1, 0, 0)


def test_pow_frozen_weight2_coordinate():
    g = FreeNilpotentGroup(2, 2)
    e = g.element([1, 1, 0])
    for n in range(-6, 7):
        assert g.pow(e, n).coords == (n, n, ZZ.binom(n, 2))


def test_matrix_oracle_agreement():
    g = FreeNilpotentGroup(2, 2)
    ut = Ut3Oracle()
    rng = Random(51)
    for _ in range(300):
        a = [rng.randint(-9, 9) for _ in range(3)]
        b = [rng.randint(-9, 9) for _ in range(3)]
        assert g.mul(g.element(a), g.element(b)).coords == ut.mul(a, b)
        n = rng.randint(-9, 9)
        assert g.pow(g.element(a), n).coords == ut.pow(a, n)
        assert g.inv(g.element(a)).coords == ut.inv(a)


def test_group_axioms_sampled():
    rng = Random(52)
    for rank, nclass in ((2, 3), (3, 2)):
        g = FreeNilpotentGroup(rank, nclass)
        e = g.identity()
        for _ in range(100):
            a = g.random_element(rng)
            b = g.random_element(rng)
            c = g.random_element(rng)
            assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
            assert g.mul(a, e) == a and g.mul(e, a) == a
            ai = g.inv(a)
            assert g.mul(a, ai) == e and g.mul(ai, a) == e


def test_extraction_round_trip():
    rng = Random(53)
    g = FreeNilpotentGroup(2, 4)
    for _ in range(60):
        a = g.random_element(rng)
        assert g.from_series(g.to_series(a)) == a
        assert g.coords_from_series(g.series_from_coords(a.coords)) == a.coords


def test_extraction_rejects_non_group_like():
    g = FreeNilpotentGroup(2, 2)
    bad = TruncatedSeries(2, 2, {(): 1, (1, 2): 1, (2, 1): 1})
    # symmetric weight-2 part cannot come from a coordinate image: after
    # stripping the weight-1 letters nothing in the span of [x2,x1] remains
    with pytest.raises(NotGroupLikeError):
        g.coords_from_series(bad)


def test_rational_ring_coordinates():
    g = FreeNilpotentGroup(2, 3, QQ)
    rng = Random(54)
    for _ in range(50):
        a = g.random_element(rng)
        b = g.random_element(rng)
        ab = g.mul(a, b)
        assert g.mul(g.inv(ab), ab) == g.identity()
        t = QQ.random_element(rng)
        s = QQ.random_element(rng)
        x = g.pow(a, t)
        assert g.mul(x, g.pow(a, s)) == g.pow(a, t + s)


def test_polynomial_ring_coordinates():
    ring = PolyRing(("s", "t"))
    s = ring.variable("s")
    t = ring.variable("t")
    g = FreeNilpotentGroup(2, 2, ring)
    x1 = g.element([s, ring.zero, ring.zero])
    x2 = g.element([ring.zero, t, ring.zero])
    # symbolic generators commute up to the predicted weight-2 tail
    assert g.commutator(x1, x2).coords == (ring.zero, ring.zero, -(s * t))


def test_gamma_weight_and_center():
    g = FreeNilpotentGroup(2, 3)
    assert g.gamma_weight(g.identity()) == 4
    assert g.gamma_weight(g.generator(1)) == 1
    c = g.commutator(g.generator(1), g.generator(2))
    assert g.gamma_weight(c) == 2
    deep = g.commutator(c, g.generator(1))
    assert g.gamma_weight(deep) == 3
    assert g.is_central(deep)
    assert not g.is_central(c)


def test_filtration_under_products():
    rng = Random(55)
    g = FreeNilpotentGroup(2, 4)
    for _ in range(60):
        a = g.random_element(rng, -3, 3)
        b = g.random_element(rng, -3, 3)
        wa, wb = g.gamma_weight(a), g.gamma_weight(b)
        assert g.gamma_weight(g.mul(a, b)) >= min(wa, wb)
        assert g.gamma_weight(g.commutator(a, b)) >= min(5, wa + wb)


def test_weight_block_coords():
    g = FreeNilpotentGroup(2, 3)
    a = g.element([1, 2, 3, 4, 5])
    assert g.weight_block_coords(a, 1) == (1, 2)
    assert g.weight_block_coords(a, 2) == (3,)
    assert g.weight_block_coords(a, 3) == (4, 5)


def test_element_shape_validation():
    g = FreeNilpotentGroup(2, 2)
    with pytest.raises(ShapeMismatchError):
        g.element([1, 2])
    with pytest.raises(ShapeMismatchError):
        g.element([1, 2, 3, 4])


def test_conjugate_definition():
    rng = Random(56)
    g = FreeNilpotentGroup(2, 3)
    for _ in range(30):
        a = g.random_element(rng)
        h = g.random_element(rng)
        assert g.conjugate(a, h) == g.mul(g.mul(g.inv(h), a), h)


def test_centralizer_structure_reports():
    rng = Random(57)
    for rank, nclass in ((2, 2), (2, 3), (3, 2)):
        g = FreeNilpotentGroup(rank, nclass)
        for j in range(1, rank + 1):
            report = g.centralizer_structure_check(j, rng, samples=25)
            assert report["ok"], report
