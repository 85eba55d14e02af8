"""Tests for graded Lie rings, bilinear data, and endomorphism pairs."""

from fractions import Fraction

import pytest

from hallforge.errors import ShapeMismatchError
from hallforge.lie import (
    EndoPair,
    GradedLieRing,
    bilinear_from_lie,
    centralizer_line_holds,
    centralizer_weight_kernels,
    compare_graded_lie,
    complete_system_check,
    endo_pair_satisfies,
    endomorphism_pair_space,
    free_nilpotent_lie,
    lazard_lie_ring,
    width_probe,
)
from hallforge.oracles import witt_dimension


def test_frozen_rank2_class2_brackets():
    lie = lazard_lie_ring(2, 2)
    assert lie.dims == (2, 1)
    assert lie.bracket_basis(1, 0) == {2: 1}
    assert lie.bracket_basis(0, 1) == {2: -1}
    assert lie.bracket_basis(0, 0) == {}


def test_dims_match_necklace_counts():
    for rank, nclass in ((2, 3), (3, 2), (2, 4)):
        lie = free_nilpotent_lie(rank, nclass)
        assert list(lie.dims) == [
            witt_dimension(rank, w) for w in range(1, nclass + 1)
        ]


def test_axioms_both_constructions():
    for rank, nclass in ((2, 2), (2, 3), (3, 2), (2, 4)):
        for lie in (lazard_lie_ring(rank, nclass), free_nilpotent_lie(rank, nclass)):
            assert lie.check_antisymmetry()
            assert lie.check_jacobi()


def test_group_and_algebra_sides_agree():
    for rank, nclass in ((2, 2), (2, 3), (3, 2), (2, 4)):
        assert compare_graded_lie(
            lazard_lie_ring(rank, nclass), free_nilpotent_lie(rank, nclass)
        )


def test_compare_tolerates_diagonal_sign_flips():
    base = free_nilpotent_lie(2, 2)
    flipped_table = {}
    signs = [1, -1, -1]
    for (a, b), row in base.table.items():
        flipped_table[(a, b)] = {
            t: c * signs[a] * signs[b] * signs[t] for t, c in row.items()
        }
    flipped = GradedLieRing(base.dims, flipped_table)
    assert compare_graded_lie(base, flipped)


def test_compare_detects_wrong_constants():
    base = free_nilpotent_lie(2, 2)
    wrong_table = {k: dict(v) for k, v in base.table.items()}
    wrong_table[(1, 0)] = {2: 2}
    wrong_table[(0, 1)] = {2: -2}
    wrong = GradedLieRing(base.dims, wrong_table)
    assert not compare_graded_lie(base, wrong)


def test_center_is_top_block():
    for rank, nclass in ((2, 2), (2, 3), (3, 2), (2, 4)):
        assert free_nilpotent_lie(rank, nclass).center_is_top_block()


def test_bracket_of_vectors():
    lie = free_nilpotent_lie(2, 2)
    x = [Fraction(2), Fraction(0), Fraction(0)]
    y = [Fraction(0), Fraction(3), Fraction(0)]
    assert lie.bracket(x, y) == [Fraction(0), Fraction(0), Fraction(-6)]


def test_bilinear_data_shape_rank2_class2():
    bil = bilinear_from_lie(free_nilpotent_lie(2, 2))
    assert bil.domain_dim == 2
    assert bil.codomain_dim == 1
    assert bil.value([Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]) == [
        Fraction(-1)
    ]
    assert bil.is_full()
    assert bil.is_nondegenerate()


def test_bilinear_full_and_nondegenerate():
    for rank, nclass in ((2, 3), (3, 2)):
        bil = bilinear_from_lie(free_nilpotent_lie(rank, nclass))
        assert bil.is_full()
        assert bil.is_nondegenerate()


def test_endomorphism_pairs_are_the_scalar_line():
    for rank, nclass in ((2, 2), (2, 3), (3, 2)):
        bil = bilinear_from_lie(free_nilpotent_lie(rank, nclass))
        pairs = endomorphism_pair_space(bil)
        assert len(pairs) == 1
        assert pairs[0].scalar_value() is not None


def test_identity_pair_satisfies_compatibility():
    bil = bilinear_from_lie(free_nilpotent_lie(2, 3))
    m, n = bil.domain_dim, bil.codomain_dim
    ident = EndoPair(
        tuple(tuple(Fraction(int(i == j)) for j in range(m)) for i in range(m)),
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
    )
    assert endo_pair_satisfies(bil, ident)
    doubled = EndoPair(
        tuple(tuple(Fraction(2 * int(i == j)) for j in range(m)) for i in range(m)),
        tuple(tuple(Fraction(2 * int(i == j)) for j in range(n)) for i in range(n)),
    )
    assert endo_pair_satisfies(bil, doubled)
    skew = EndoPair(
        tuple(tuple(Fraction(int(i == j) + int(i < j)) for j in range(m)) for i in range(m)),
        tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
    )
    assert not endo_pair_satisfies(bil, skew)


def test_complete_system_needs_two_vectors_at_rank2():
    bil = bilinear_from_lie(free_nilpotent_lie(2, 2))
    e0 = [Fraction(1), Fraction(0)]
    e1 = [Fraction(0), Fraction(1)]
    # a single vector cannot detect degeneracy of an alternating map
    assert not complete_system_check(bil, [e0])
    assert complete_system_check(bil, [e0, e1])


def test_full_basis_is_complete():
    for rank, nclass in ((2, 3), (3, 2)):
        bil = bilinear_from_lie(free_nilpotent_lie(rank, nclass))
        vectors = [
            [Fraction(int(i == a)) for i in range(bil.domain_dim)]
            for a in range(bil.domain_dim)
        ]
        assert complete_system_check(bil, vectors)


def test_width_probe_on_image_values():
    bil = bilinear_from_lie(free_nilpotent_lie(2, 2))
    u = bil.value([Fraction(2), Fraction(0)], [Fraction(0), Fraction(3)])
    assert width_probe(bil, u, 1)
    assert width_probe(bil, [Fraction(0)], 1)


def test_width_probe_widens():
    bil = bilinear_from_lie(free_nilpotent_lie(2, 3))
    u = bil.value(
        [Fraction(1), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(1), Fraction(0)],
    )
    assert width_probe(bil, u, 2)


def test_bilinear_requires_central_top_block():
    # zero brackets on two weights: the center is everything, not the top block
    lie = GradedLieRing((1, 1), {})
    assert not lie.center_is_top_block()
    with pytest.raises(ShapeMismatchError):
        bilinear_from_lie(lie)


def test_centralizer_weight_kernels_rank2_class3():
    lie = free_nilpotent_lie(2, 3)
    kernels = centralizer_weight_kernels(lie, 1)
    assert len(kernels) == 2
    weight1 = kernels[0]
    assert len(weight1) == 1
    vec = weight1[0]
    assert vec[0] != 0 and all(v == 0 for v in vec[1:])
    assert kernels[1] == []


def test_centralizer_line_holds_small_configs():
    for rank, nclass in ((2, 2), (2, 3), (3, 2)):
        lie = free_nilpotent_lie(rank, nclass)
        for j in range(1, rank + 1):
            assert centralizer_line_holds(lie, j)
