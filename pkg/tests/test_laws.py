# tests/test_laws.py

import random

import pytest

from poly_ldc_lib.laws import SUITES, check, run_suite, sample_hom, summarize
from poly_ldc_lib.models import LawReport
from poly_ldc_lib.polycore import Polynomial, Y, hom_count, linear, representable


def test_suite_names(logger):
    assert sorted(SUITES) == ["algebra", "closure", "cores", "duality", "monoidal", "polycore"], "Every module has a suite."
    with pytest.raises(KeyError):
        run_suite("pentagons")


def test_sampled_maps_are_valid(logger):
    rng = random.Random(7)
    for p, q in [(representable(2), linear(2)), (Polynomial((1, 0)), Y), (Y, Polynomial(()))]:
        f = sample_hom(rng, p, q)
        if hom_count(p, q) == 0:
            assert f is None, f"No map {p} -> {q} exists."
        else:
            assert f.dom == p and f.cod == q, f"Sampled map should run {p} -> {q}."


def test_summaries_keep_only_failures(logger):
    reports = [check("a", True), check("b", False, "1", "2"), check("c", True)]
    summary = summarize("family", reports)
    assert not summary.passed, "One failing instance fails the family."
    assert [child.law for child in summary.children] == ["b"], "Only failing instances are kept."
    assert summary.stats["checked"] == 3 and summary.stats["failed"] == 1, "Counts cover every instance."


def test_polycore_suite(logger):
    report = run_suite("polycore", seed=0)
    assert report.passed, f"polycore suite failed: {[str(f) for f in report.failures()]}"
    assert report.stats["seed"] == 0, "The seed is recorded."


def test_cores_suite(logger):
    report = run_suite("cores", seed=0)
    assert report.passed, f"cores suite failed: {[str(f) for f in report.failures()]}"


def test_suites_are_deterministic_per_seed(logger):
    first = run_suite("polycore", seed=3).to_json()
    second = run_suite("polycore", seed=3).to_json()
    assert first == second, "Same seed, same report."


@pytest.mark.slow
@pytest.mark.parametrize("name", ["monoidal", "closure", "duality", "algebra"])
def test_heavy_suites(name, logger):
    report = run_suite(name, seed=1)
    assert isinstance(report, LawReport), "Suites return a LawReport."
    assert report.passed, f"{name} suite failed: {[str(f) for f in report.failures()]}"
