"""Tests for the aggregated property-check runner."""

from random import Random

from hallforge.rings import QQ, ZZ
from hallforge.verify import (
    CheckResult,
    deformation_suite,
    group_suite,
    lie_suite,
    ring_suite,
    run_all,
    series_suite,
)


def test_run_all_passes_small_config():
    results = run_all(2, 2, ZZ, seed=3, samples=25)
    assert results
    failing = [r for r in results if not r.ok]
    assert failing == []
    names = [r.name for r in results]
    assert len(names) == len(set(names))


def test_run_all_rational_ring_skips_integer_only_suites():
    results = run_all(2, 2, QQ, seed=4, samples=20)
    assert all(r.ok for r in results)
    assert not any(r.name.startswith("deform") for r in results)


def test_individual_suites_return_results():
    rng = Random(5)
    assert all(r.ok for r in ring_suite(rng, samples=30))
    assert all(r.ok for r in series_suite(2, 2, ZZ, rng, samples=30))
    assert all(r.ok for r in group_suite(2, 2, ZZ, rng, samples=30))
    assert all(r.ok for r in deformation_suite(2, 2, rng, samples=30))
    assert all(r.ok for r in lie_suite(2, 2))


def test_check_result_fields():
    r = CheckResult("sample", True)
    assert r.name == "sample"
    assert r.ok
    assert r.detail == ""


def test_run_all_deterministic_for_fixed_seed():
    a = run_all(2, 2, ZZ, seed=9, samples=15)
    b = run_all(2, 2, ZZ, seed=9, samples=15)
    assert a == b
