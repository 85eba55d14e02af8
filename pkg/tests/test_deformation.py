"""Tests for cocycle checks, deformed multiplication, and splittings."""

from fractions import Fraction
from random import Random

import pytest

from hallforge.deformation import (
    DeformedGroup,
    PolynomialCocycle,
    SampledCocycle,
    assemble_extension_cocycle,
    centralizer_extension_check,
    check_cocycle,
    coboundary_split_integers,
    iso_from_splittings,
    product_cocycle,
    zero_cocycle,
)
from hallforge.errors import (
    CocycleViolationError,
    NotInRingError,
    ShapeMismatchError,
)
from hallforge.group import FreeNilpotentGroup
from hallforge.rings import ZZ


def _mixed_cocycle(n_components):
    # 3ab plus the coboundary of binom(., 3), in component 0
    tables = [{} for _ in range(n_components)]
    tables[0] = {(1, 1): 3, (1, 2): 1, (2, 1): 1}
    return PolynomialCocycle.from_tables(tables)


def _family(base):
    n_c = base.basis.counts[-1]
    fam = [product_cocycle(n_c, 0), _mixed_cocycle(n_c)]
    return fam[: base.rank] + [zero_cocycle(n_c)] * (base.rank - 2)


def test_symbolic_cocycle_check_passes():
    assert check_cocycle(product_cocycle(1, 0)).ok
    assert check_cocycle(_mixed_cocycle(2)).ok
    assert check_cocycle(zero_cocycle(3)).ok


def test_asymmetric_map_rejected():
    # a^2 b = (2 binom(a,2) + binom(a,1)) binom(b,1) is not symmetric
    bad = PolynomialCocycle.from_tables([{(2, 1): 2, (1, 1): 1}])
    report = check_cocycle(bad)
    assert not report.ok
    assert report.mode == "symbolic"


def test_non_cocycle_rejected():
    # binom(a,2) b alone fails the cocycle identity at x = y = z = 1
    bad = PolynomialCocycle.from_tables([{(2, 1): 1}])
    assert not check_cocycle(bad).ok


def test_sampled_cocycle_check():
    f = SampledCocycle(lambda a, b: (a * b,), 1)
    assert check_cocycle(f, ZZ, budget=100, rng=Random(81)).ok
    g = SampledCocycle(lambda a, b: (a * a * b,), 1)
    assert not check_cocycle(g, ZZ, budget=100, rng=Random(82)).ok


def test_deformed_group_validates_cocycles():
    base = FreeNilpotentGroup(2, 2)
    bad = PolynomialCocycle.from_tables([{(2, 1): 1}])
    with pytest.raises(CocycleViolationError):
        DeformedGroup(base, [bad, zero_cocycle(1)])
    with pytest.raises(ShapeMismatchError):
        DeformedGroup(base, [zero_cocycle(1)])
    with pytest.raises(ShapeMismatchError):
        DeformedGroup(base, [zero_cocycle(2), zero_cocycle(2)])


def test_deformed_axioms_sampled():
    rng = Random(83)
    for rank, nclass in ((2, 2), (2, 3), (3, 2)):
        base = FreeNilpotentGroup(rank, nclass)
        dgrp = DeformedGroup(base, _family(base))
        e = dgrp.identity()
        for _ in range(150):
            g = dgrp.random_element(rng)
            h = dgrp.random_element(rng)
            k = dgrp.random_element(rng)
            assert dgrp.mul(dgrp.mul(g, h), k) == dgrp.mul(g, dgrp.mul(h, k))
            assert dgrp.mul(g, e) == g and dgrp.mul(e, g) == g
            gi = dgrp.inv(g)
            assert dgrp.mul(g, gi) == e and dgrp.mul(gi, g) == e


def test_deformation_only_touches_top_weight():
    rng = Random(84)
    base = FreeNilpotentGroup(2, 3)
    dgrp = DeformedGroup(base, _family(base))
    top = base.basis.weight_start(3)
    for _ in range(80):
        g = dgrp.random_element(rng)
        h = dgrp.random_element(rng)
        plain = base.mul_coords(g.coords, h.coords)
        deformed = dgrp.mul(g, h).coords
        assert deformed[:top] == plain[:top]
        assert deformed != plain or all(
            f.value(g.coords[k], h.coords[k], ZZ)
            == tuple([0] * base.basis.counts[-1])
            for k, f in enumerate(dgrp.cocycles)
        )


def test_zero_cocycles_reproduce_base_exactly():
    rng = Random(85)
    base = FreeNilpotentGroup(2, 3)
    n_c = base.basis.counts[-1]
    dgrp = DeformedGroup(base, [zero_cocycle(n_c)] * 2)
    for _ in range(60):
        g = dgrp.random_element(rng)
        h = dgrp.random_element(rng)
        assert dgrp.mul(g, h).coords == base.mul_coords(g.coords, h.coords)
        assert dgrp.inv(g).coords == base.inv_coords(g.coords)
        n = rng.randint(-6, 6)
        assert dgrp.pow(g, n).coords == base.pow_coords(g.coords, n)


def test_deformed_pow_integer_exponents_only():
    base = FreeNilpotentGroup(2, 2)
    dgrp = DeformedGroup(base, _family(base))
    g = dgrp.random_element(Random(86))
    assert dgrp.pow(g, 3) == dgrp.mul(dgrp.mul(g, g), g)
    with pytest.raises(NotInRingError):
        dgrp.pow(g, Fraction(1, 2))


def test_product_cocycle_splits_exactly():
    psi = coboundary_split_integers(product_cocycle(1, 0))
    for a in range(-15, 16):
        assert psi(a) == (ZZ.binom(a, 2),)


def test_mixed_cocycle_splitting_value():
    psi = coboundary_split_integers(_mixed_cocycle(1))
    for a in range(-12, 13):
        assert psi(a) == (3 * ZZ.binom(a, 2) + ZZ.binom(a, 3),)


def test_splitting_satisfies_coboundary_equation():
    psi = coboundary_split_integers(_mixed_cocycle(2))
    f = _mixed_cocycle(2)
    for a in range(-8, 9):
        for b in range(-8, 9):
            lhs = tuple(
                pa + pb + fv
                for pa, pb, fv in zip(psi(a), psi(b), f.value(a, b, ZZ))
            )
            assert lhs == psi(a + b)


def test_iso_round_trips_and_verifies():
    rng = Random(87)
    for rank, nclass in ((2, 2), (2, 3)):
        base = FreeNilpotentGroup(rank, nclass)
        dgrp = DeformedGroup(base, _family(base))
        splittings = [coboundary_split_integers(f) for f in dgrp.cocycles]
        iso = iso_from_splittings(dgrp, splittings)
        iso.verify(rng, samples=100)
        for _ in range(50):
            g = dgrp.random_element(rng)
            assert iso.to_deformed(iso.to_base(g)) == g
            x = base.random_element(rng)
            assert iso.to_base(iso.to_deformed(x)) == x


def test_iso_is_a_homomorphism_pointwise():
    rng = Random(88)
    base = FreeNilpotentGroup(2, 2)
    dgrp = DeformedGroup(base, _family(base))
    splittings = [coboundary_split_integers(f) for f in dgrp.cocycles]
    iso = iso_from_splittings(dgrp, splittings)
    for _ in range(80):
        g = dgrp.random_element(rng)
        h = dgrp.random_element(rng)
        image = iso.to_base(dgrp.mul(g, h))
        expected = base.mul(iso.to_base(g), iso.to_base(h))
        assert image == expected


def test_extension_cocycle_properties():
    rng = Random(89)
    base = FreeNilpotentGroup(2, 2)
    dgrp = DeformedGroup(base, _family(base))
    ext = assemble_extension_cocycle(dgrp)
    for _ in range(100):
        a = dgrp.random_element(rng).coords
        b = dgrp.random_element(rng).coords
        c = dgrp.random_element(rng).coords
        assert ext.cocycle_identity_holds(a, b, c)
        assert ext.is_normalized_at(a)
    assert ext.matches_deformed_mul(rng, samples=60)


def test_centralizer_extension_reports():
    rng = Random(90)
    for rank, nclass in ((2, 2), (2, 3), (3, 2)):
        base = FreeNilpotentGroup(rank, nclass)
        dgrp = DeformedGroup(base, _family(base))
        for j in range(1, rank + 1):
            report = centralizer_extension_check(dgrp, j, rng, samples=20)
            assert report["ok"], (rank, nclass, j, report)
