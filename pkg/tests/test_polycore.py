# tests/test_polycore.py

from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from poly_ldc_lib.closure import close
from poly_ldc_lib.config import size_cap
from poly_ldc_lib.cores import in_left_core, in_right_core
from poly_ldc_lib.duality import decide_left_dualable, decide_right_dualable
from poly_ldc_lib.errors import DomainMismatch, SizeCap
from poly_ldc_lib.monoidal import substitute, tensor
from poly_ldc_lib.polycore import (
    ONE,
    ZERO,
    FiniteSet,
    PolyMap,
    Polynomial,
    Y,
    bounded_polynomials,
    compose,
    constant,
    coproduct,
    enumerate_homs,
    equal_maps,
    evaluate,
    evaluate_elements,
    evaluate_map,
    format_forest,
    format_polynomial,
    gamma,
    gamma_elements,
    hom_count,
    identity,
    inverse,
    is_cartesian,
    is_iso,
    is_shape_isomorphic,
    linear,
    linear_map,
    monomial,
    representable,
    representable_map,
)

small_polynomials = st.lists(st.integers(0, 2), max_size=2).map(lambda cards: Polynomial(tuple(cards)))


def test_homcount_of_worked_example(logger):
    """
    y^3 + y^2 into y + y^2 has (3 + 9) * (2 + 4) maps, all distinct.
    """
    p = Polynomial((3, 2))
    q = Polynomial((1, 2))
    logger.info(f"Counting maps {p} -> {q}")

    assert hom_count(p, q) == 72, "Closed-form count should be 72."
    homs = enumerate_homs(p, q)
    assert len(homs) == 72, "Enumeration should produce 72 maps."
    assert len(set(homs)) == 72, "Enumerated maps should be pairwise distinct."


def test_hom_count_matches_enumeration_on_small_family(logger):
    for p in bounded_polynomials(2, 2):
        for q in bounded_polynomials(2, 2):
            assert hom_count(p, q) == len(enumerate_homs(p, q)), f"Count mismatch for {p} -> {q}."


def test_zero_to_the_zero_is_one(logger):
    assert hom_count(ZERO, ZERO) == 1, "The empty polynomial has exactly one endomap."
    assert hom_count(ONE, ZERO) == 0, "No map from a position into the empty polynomial."
    assert hom_count(ONE, ONE) == 1, "0^0 should count as 1."
    assert evaluate(constant(2), 0).size == 2, "Constants keep their positions at the empty set."
    assert evaluate(Y, 0).size == 0, "y at the empty set is empty."


def test_enumeration_respects_size_cap(logger):
    with size_cap(10):
        with pytest.raises(SizeCap) as excinfo:
            enumerate_homs(Polynomial((3, 2)), Polynomial((1, 2)))
    assert excinfo.value.requested == 72, "SizeCap should carry the requested size."
    assert excinfo.value.cap == 10, "SizeCap should carry the cap in force."


def test_literal_formatting(logger):
    p = Polynomial((2, 2, 2, 1, 0, 0))
    assert format_polynomial(p) == "3y^2 + y + 2", "Runs of equal cards should be grouped."
    assert format_polynomial(p, unicode=True) == "3y² + y + 2", "Unicode output should use superscripts."
    assert format_polynomial(ZERO) == "0", "The empty polynomial prints as 0."
    assert str(Y) == "y", "y prints as y."
    assert str(linear(3)) == "3y", "Linear polynomials print as Ay."


def test_forest_has_one_line_per_position(logger):
    lines = format_forest(Polynomial((2, 0)))
    assert lines == ["0 o-||", "1 o"], f"Unexpected corollas: {lines}"


def test_constructors(logger):
    assert linear(2) == Polynomial((1, 1)), "linear(2) is 2y."
    assert representable(3) == Polynomial((3,)), "representable(3) is y^3."
    assert constant(2) == Polynomial((0, 0)), "constant(2) is 2."
    assert monomial(2, 3) == Polynomial((3, 3)), "monomial(2, 3) is 2y^3."
    assert coproduct(Y, ONE) == Polynomial((1, 0)), "Coproducts concatenate positions."
    assert linear(2).is_linear() and not representable(2).is_linear(), "Linearity is the all-ones shape."
    assert representable(0).is_representable() and not linear(2).is_representable(), "Representables have one position."


def test_shape_isomorphism_ignores_order(logger):
    assert is_shape_isomorphic(Polynomial((2, 1)), Polynomial((1, 2))), "Reordered positions are isomorphic."
    assert not is_shape_isomorphic(Polynomial((2, 1)), Polynomial((2, 2))), "Different cards are not isomorphic."


def relabel(p: Polynomial) -> Polynomial:
    return Polynomial(
        p.cards,
        position_labels=tuple(f"P{i}" for i in p.positions()),
        direction_labels=tuple(tuple(f"d{i}.{j}" for j in p.directions(i)) for i in p.positions()),
    )


def test_labels_never_change_answers(logger):
    family = bounded_polynomials(2, 2)
    for p in family:
        lp = relabel(p)
        assert lp == p and hash(lp) == hash(p), f"Labels are not part of the identity of {p}."
        assert in_left_core(lp) == in_left_core(p) and in_right_core(lp) == in_right_core(p), f"Core membership of {p}."
        assert decide_right_dualable(lp) == decide_right_dualable(p), f"Right dualability of {p}."
        assert decide_left_dualable(lp) == decide_left_dualable(p), f"Left dualability of {p}."
    for p, q in product(family, repeat=2):
        lp, lq = relabel(p), relabel(q)
        assert hom_count(lp, lq) == hom_count(p, q), f"Hom count {p} -> {q}."
        plain, labelled = enumerate_homs(p, q), enumerate_homs(lp, lq)
        assert len(plain) == len(labelled), f"Enumeration {p} -> {q}."
        for f, g in zip(plain, labelled):
            assert equal_maps(f, g), f"Enumeration order of {p} -> {q} depends on labels."
            assert is_iso(f) == is_iso(g) and is_cartesian(f) == is_cartesian(g), f"Map properties of {f}."
        assert tensor(lp, lq) == tensor(p, q) and substitute(lp, lq) == substitute(p, q), f"Products of {p}, {q}."
        assert close(lp, lq) == close(p, q), f"Closure of {p}, {q}."


def test_polynomial_json(logger):
    p = Polynomial((2, 0), position_labels=("a", "b"), direction_labels=(("u", "v"), ()))
    data = p.to_json()
    assert data == {"positions": [2, 0], "labels": {"positions": ["a", "b"], "directions": [["u", "v"], []]}}, data
    loaded = Polynomial.from_json(data)
    assert loaded == p, "The cardinalities survive a round trip."
    assert loaded.position_labels == ("a", "b") and loaded.direction_labels == (("u", "v"), ()), "So do the labels."
    assert Polynomial.from_json({"positions": [1]}) == Y, "Labels are optional."
    assert Y.to_json() == {"positions": [1]}, "Unlabelled polynomials serialize without labels."
    assert format_forest(p) == ["a o-||", "b o"], format_forest(p)
    with pytest.raises(ValueError):
        Polynomial.from_json({"labels": {}})
    with pytest.raises(ValueError):
        Polynomial.from_json({"positions": [1], "labels": {"positions": ["a", "b"]}})


def test_finite_set_labels(logger):
    named = FiniteSet(2, ("x", "y"))
    assert named.label(1) == "y" and FiniteSet(2).label(1) == "1", "Labels fall back to the index."
    assert named == FiniteSet(2) and len(named) == 2, "Labels do not affect equality."
    with pytest.raises(ValueError):
        FiniteSet(2, ("x",))


def test_polymap_validation(logger):
    with pytest.raises(DomainMismatch):
        PolyMap(Y, Y, (1,), ((0,),))
    with pytest.raises(DomainMismatch):
        PolyMap(Y, representable(2), (0,), ((0,),))
    with pytest.raises(DomainMismatch):
        PolyMap(ONE, Y, (0,), ((0,),))


def test_compose_rejects_mismatched_ends(logger):
    with pytest.raises(DomainMismatch):
        compose(identity(Y), identity(ONE))


def test_iso_and_inverse(logger):
    swap = PolyMap(Polynomial((2, 1)), Polynomial((1, 2)), (1, 0), ((1, 0), (0,)))
    assert is_iso(swap), "Swapping positions with a bijective backward table is an iso."
    back = inverse(swap)
    assert compose(swap, back) == identity(swap.dom), "inverse should undo the map."
    assert compose(back, swap) == identity(swap.cod), "inverse should be two-sided."


def test_cartesian_but_not_iso(logger):
    folded = PolyMap(Polynomial((1, 1)), Y, (0, 0), ((0,), (0,)))
    assert is_cartesian(folded), "Every backward table is a bijection."
    assert not is_iso(folded), "Two positions land on one."
    with pytest.raises(DomainMismatch):
        inverse(folded)


def test_evaluate_and_elements(logger):
    p = Polynomial((2, 0))
    assert evaluate(p, 3).size == 10, "y^2 + 1 at 3 has 9 + 1 elements."
    elements = evaluate_elements(p, 2)
    assert elements[0] == (0, (0, 0)), "Elements start at the first position with the zero tuple."
    assert elements[-1] == (1, ()), "The constant position contributes one element."


def test_global_sections(logger):
    p = Polynomial((2, 3))
    assert gamma(p).size == 6, "One direction per position gives 2 * 3 choices."
    assert len(gamma_elements(p)) == 6, "gamma_elements lists every section."
    assert gamma(ZERO).size == 1, "The empty product is 1."
    assert hom_count(p, Y) == gamma(p).size, "Global sections are maps into y."


def test_function_images(logger):
    f = linear_map((1, 0, 1), 2)
    assert f.dom == linear(3) and f.cod == linear(2), "linear_map runs between linear polynomials."
    assert f.on_positions == (1, 0, 1), "The forward table is the function."
    g = representable_map((1, 0, 1), 2)
    assert g.dom == representable(2) and g.cod == representable(3), "representable_map reverses direction."
    assert g.on_directions == ((1, 0, 1),), "The backward table is the function."
    with pytest.raises(DomainMismatch):
        linear_map((2,), 2)


@settings(max_examples=60, deadline=None)
@given(p=small_polynomials, q=small_polynomials, r=small_polynomials, data=st.data())
def test_category_laws(p, q, r, data):
    assume(hom_count(p, q) > 0 and hom_count(q, r) > 0)
    f = data.draw(st.sampled_from(enumerate_homs(p, q)))
    g = data.draw(st.sampled_from(enumerate_homs(q, r)))
    assert compose(identity(p), f) == f, "Left unit law."
    assert compose(f, identity(q)) == f, "Right unit law."
    h = data.draw(st.sampled_from(enumerate_homs(r, r)))
    assert compose(compose(f, g), h) == compose(f, compose(g, h)), "Associativity."


@settings(max_examples=40, deadline=None)
@given(p=small_polynomials, q=small_polynomials, r=small_polynomials, data=st.data())
def test_functor_action_preserves_composition(p, q, r, data):
    assume(hom_count(p, q) > 0 and hom_count(q, r) > 0)
    f = data.draw(st.sampled_from(enumerate_homs(p, q)))
    g = data.draw(st.sampled_from(enumerate_homs(q, r)))
    ff, gg = evaluate_map(f, 2), evaluate_map(g, 2)
    assert evaluate_map(compose(f, g), 2) == tuple(gg[i] for i in ff), "p(X) -> r(X) should factor through q(X)."
    assert evaluate_map(identity(p), 2) == tuple(range(evaluate(p, 2).size)), "Identities act as identities."
