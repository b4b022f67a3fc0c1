# tests/test_duality.py

from itertools import permutations, product

import pytest

from poly_ldc_lib.closure import close, coclose
from poly_ldc_lib.duality import (
    DualityWitness,
    canonical_dual,
    comate,
    cyclic_pairs,
    decide_left_dualable,
    decide_right_dualable,
    hom_retraction_composite,
    coclose_section_composite,
    mate,
    phi,
    phi_retractions,
    psi,
    psi_sections,
    search_duals,
    search_pair,
    substitute_dual,
    tensor_dual,
    unit_dual,
    verify_dual_pair,
    verify_linear_dual,
    verify_mate_equations,
    verify_mix_eta_epsilon,
    verify_retract_section,
)
from poly_ldc_lib.errors import DomainMismatch, NotRepresentable
from poly_ldc_lib.polycore import (
    ONE,
    ZERO,
    PolyMap,
    Polynomial,
    Y,
    bounded_polynomials,
    identity,
    inverse,
    is_iso,
    linear,
    linear_map,
    representable,
    representable_map,
)


def test_canonical_dualities_pass_every_law(logger):
    for n in range(5):
        w = canonical_dual(n)
        logger.info(f"Checking {w.left} -| {w.right}")
        assert w.left == linear(n) and w.right == representable(n), "Canonical legs are Ay and y^A."
        assert verify_dual_pair(w).passed, f"Snake laws should hold for A = {n}."
        assert verify_mix_eta_epsilon(w).passed, f"Mix square should hold for A = {n}."
        assert verify_retract_section(w).passed, f"Retract and section laws should hold for A = {n}."


def test_snake_report_names_both_equations(logger):
    report = verify_dual_pair(canonical_dual(2))
    assert [child.law for child in report.children] == ["dual.1", "dual.2"], "Both snakes are reported."


def test_mutated_counit_breaks_the_snakes_only(logger):
    w = canonical_dual(2)
    swapped = PolyMap(w.epsilon.dom, Y, w.epsilon.on_positions, ((1,), (0,)))
    assert swapped != w.epsilon, "The mutant should differ from the canonical counit."
    mutant = DualityWitness(w.left, w.right, w.eta, swapped)

    report = verify_dual_pair(mutant)
    assert not report.passed, "Swapping the evaluation should break the snakes."
    assert report.failures()[0].law == "dual.1", "The first broken snake is the one on y^A."
    assert verify_mix_eta_epsilon(mutant).passed, "The mix square holds for any unit and counit."


def test_witness_rejects_wrong_types(logger):
    w = canonical_dual(2)
    with pytest.raises(DomainMismatch):
        DualityWitness(w.left, w.right, identity(Y), w.epsilon)
    with pytest.raises(DomainMismatch):
        DualityWitness(w.right, w.left, w.eta, w.epsilon)


def test_composite_dualities(logger):
    for n, m in product(range(3), repeat=2):
        d1, d2 = canonical_dual(n).linear_dual(), canonical_dual(m).linear_dual()
        assert verify_linear_dual(tensor_dual(d1, d2)).passed, f"{n}y ⊗ {m}y -| y^{n} ◁ y^{m} should hold."
        assert verify_linear_dual(substitute_dual(d1, d2)).passed, f"{n}y ◁ {m}y -| y^{n} ⊗ y^{m} should hold."
    assert verify_linear_dual(unit_dual()).passed, "y -| y with unitors."


def test_double_dual_maps(logger):
    for p in bounded_polynomials(2, 2):
        assert (phi(p) == identity(p)) == p.is_representable(), f"Φ at {p} is the identity exactly for representables."
        assert is_iso(psi(p)) == p.is_linear(), f"Ψ at {p} is an iso exactly for linear polynomials."
        assert phi(p).cod == coclose(Y, close(p, Y)), "Φ lands in the double dual."


def test_dualability_decisions_agree_with_retractions(logger):
    for p in bounded_polynomials(2, 2):
        right = decide_right_dualable(p)
        left = decide_left_dualable(p)
        assert (right is not None) == bool(phi_retractions(p)), f"Right dualability of {p} should match Φ retractions."
        assert (left is not None) == bool(psi_sections(p)), f"Left dualability of {p} should match Ψ sections."
    assert decide_right_dualable(representable(3)).size == 3, "y^3 is dual to 3y."
    assert decide_left_dualable(linear(2)).size == 2, "2y is dual to y^2."


def test_identity_composites(logger):
    for n in range(4):
        p, q = representable(n), linear(n)
        assert hom_retraction_composite(p) == identity(close(p, Y)), f"Composite on [y^{n}, y] should be the identity."
        assert coclose_section_composite(q) == identity(coclose(Y, q)), f"Composite on y over {n}y should be the identity."
    with pytest.raises(NotRepresentable):
        hom_retraction_composite(linear(2))
    with pytest.raises(NotRepresentable):
        coclose_section_composite(representable(2))


def test_search_small_bounds(logger):
    results = search_duals(1, 1)
    assert [(r.left, r.right) for r in results] == [(ZERO, ONE), (Y, Y)], "Only 0 -| 1 and y -| y fit in (1, 1)."
    assert [(r.left, r.right) for r in cyclic_pairs(results)] == [(Y, Y)], "Only y -| y is cyclic."
    assert search_pair(representable(2), linear(2)) is None, "y^2 has no right dual."


def test_search_two_by_two(logger):
    results = search_duals(2, 2)
    assert [(r.left, r.right) for r in results] == [(linear(n), representable(n)) for n in range(3)], (
        "Dual pairs within (2, 2) are exactly Ay -| y^A."
    )
    for r in results:
        assert r.witnesses, "Every reported pair carries witnesses."
        assert all(verify_dual_pair(w).passed for w in r.witnesses), "Every witness passes the snakes."
        assert r.to_json()["witnesses"] == len(r.witnesses), "JSON reports the witness count."


def test_mates_follow_functions(logger):
    for n, m in product(range(3), repeat=2):
        w, w2 = canonical_dual(n), canonical_dual(m)
        for t in product(range(m), repeat=n):
            f = linear_map(t, m)
            g = mate(f, w, w2)
            assert g == representable_map(t, m), f"Mate of {t} should be y^t."
            assert comate(g, w, w2) == f, f"comate should undo mate for {t}."
            assert verify_mate_equations(f, g, w, w2).passed, f"{t} and its mate form a morphism of duals."


def test_mates_of_isos_are_isos(logger):
    for n in range(4):
        w = canonical_dual(n)
        for t in permutations(range(n)):
            f = linear_map(t, n)
            assert is_iso(f), f"A permutation {t} is an iso."
            g = mate(f, w, w)
            assert is_iso(g), f"The mate of the iso {t} should be an iso."
            assert mate(inverse(f), w, w) == inverse(g), f"Mates of inverses are inverse for {t}."
        for t in product(range(n), repeat=n):
            if len(set(t)) < n:
                assert not is_iso(mate(linear_map(t, n), w, w)), f"The mate of the non-bijection {t} is not an iso."


def test_mate_rejects_wrong_maps(logger):
    with pytest.raises(DomainMismatch):
        mate(identity(Y), canonical_dual(2), canonical_dual(2))
    with pytest.raises(DomainMismatch):
        comate(identity(Y), canonical_dual(2), canonical_dual(2))


@pytest.mark.slow
def test_double_dual_maps_three_by_three(logger):
    for p in bounded_polynomials(3, 3):
        assert (phi(p) == identity(p)) == p.is_representable(), f"Φ at {p}."
        assert is_iso(psi(p)) == p.is_linear(), f"Ψ at {p}."


@pytest.mark.slow
def test_search_three_by_three(logger):
    results = search_duals(3, 3, workers=2)
    assert [(r.left, r.right) for r in results] == [(linear(n), representable(n)) for n in range(4)], (
        "Dual pairs within (3, 3) are exactly Ay -| y^A."
    )
    assert [(r.left, r.right) for r in cyclic_pairs(results)] == [(Y, Y)], "Only y -| y is cyclic."
