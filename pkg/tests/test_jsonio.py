"""Tests for canonical JSON encoding of every exchangeable object."""

import json
from fractions import Fraction
from random import Random

import pytest

from hallforge.basis import hall_basis
from hallforge.canonical import derive_hall_polynomials
from hallforge.deformation import PolynomialCocycle, product_cocycle, zero_cocycle
from hallforge.errors import NotInRingError, ShapeMismatchError
from hallforge.group import FreeNilpotentGroup
from hallforge.jsonio import (
    basis_from_obj,
    basis_to_obj,
    canonical_dumps,
    canonical_polys_parse_check,
    canonical_polys_to_obj,
    cocycle_family_from_obj,
    cocycle_family_to_obj,
    element_from_obj,
    element_to_obj,
    lie_from_obj,
    lie_to_obj,
    word_from_obj,
    word_to_obj,
)
from hallforge.lie import compare_graded_lie, free_nilpotent_lie, lazard_lie_ring
from hallforge.rings import QQ


def test_canonical_dumps_is_sorted_and_compact():
    s = canonical_dumps({"b": 1, "a": [1, 2]})
    assert s == '{"a":[1,2],"b":1}'


def test_element_round_trip_integer():
    g = FreeNilpotentGroup(2, 3)
    rng = Random(91)
    for _ in range(40):
        el = g.random_element(rng)
        obj = element_to_obj(g, el)
        assert obj["r"] == 2 and obj["c"] == 3
        assert all(isinstance(s, str) for s in obj["coords"])
        assert element_from_obj(g, obj) == el
        # canonical text survives a JSON round trip byte for byte
        text = canonical_dumps(obj)
        assert canonical_dumps(json.loads(text)) == text


def test_element_round_trip_rational():
    g = FreeNilpotentGroup(2, 2, QQ)
    el = g.element([Fraction(1, 2), Fraction(-3, 4), Fraction(5)])
    obj = element_to_obj(g, el)
    assert obj["coords"] == ["1/2", "-3/4", "5"]
    assert element_from_obj(g, obj) == el


def test_element_from_obj_validates():
    g = FreeNilpotentGroup(2, 2)
    with pytest.raises(ShapeMismatchError):
        element_from_obj(g, {"r": 3, "c": 2, "coords": ["0"] * 6})
    with pytest.raises(ShapeMismatchError):
        element_from_obj(g, {"r": 2, "c": 2, "coords": ["0", "0"]})


def test_basis_round_trip():
    for rank, nclass in ((2, 3), (3, 2), (2, 5)):
        basis = hall_basis(rank, nclass)
        obj = basis_to_obj(basis)
        assert basis_from_obj(obj) is hall_basis(rank, nclass)
    bad = basis_to_obj(hall_basis(2, 2))
    bad["entries"][2]["tree"] = [1, 2]
    with pytest.raises(ShapeMismatchError):
        basis_from_obj(bad)


def test_word_round_trip():
    g = FreeNilpotentGroup(2, 3)
    word = [((1, 1), 2), ((2, 1), -3), ((1, 2), 1)]
    obj = word_to_obj(g, word)
    assert word_from_obj(g, obj) == word


def test_cocycle_family_round_trip():
    fam = (product_cocycle(2, 1, scale=3), zero_cocycle(2))
    obj = cocycle_family_to_obj(2, 3, fam)
    back = cocycle_family_from_obj(obj)
    assert back == fam
    assert isinstance(back[0], PolynomialCocycle)


def test_canonical_polys_obj_checks_out():
    for rank, nclass in ((2, 2), (2, 3)):
        obj = canonical_polys_to_obj(derive_hall_polynomials(rank, nclass))
        assert canonical_polys_parse_check(obj)
        assert obj["convention"]["rank"] == rank
        text = canonical_dumps(obj)
        assert canonical_dumps(json.loads(text)) == text


def test_lie_round_trip():
    for rank, nclass in ((2, 2), (2, 3), (3, 2)):
        lie = lazard_lie_ring(rank, nclass)
        back = lie_from_obj(lie_to_obj(lie))
        assert back.dims == lie.dims
        assert back.table == lie.table
        assert compare_graded_lie(back, free_nilpotent_lie(rank, nclass))


def test_float_coordinates_rejected():
    g = FreeNilpotentGroup(2, 2)
    with pytest.raises(NotInRingError):
        element_from_obj(g, {"r": 2, "c": 2, "coords": ["0.5", "0", "0"]})
