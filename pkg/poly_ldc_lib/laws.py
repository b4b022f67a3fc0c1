# poly_ldc_lib/laws.py
"""
Named law suites.

Each suite checks one family of laws on bounded families of polynomials and
returns a LawReport per law. Only failing instances are kept as children;
`stats` records how many instances were checked. Sampled checks draw maps
from a `random.Random(seed)` so a suite is reproducible for a given seed.
"""

import random
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from .algebra import (
    enumerate_monoids,
    left_linear_monoid,
    linear_bialgebra,
    right_linear_comonoid,
    verify_cyclic_coincidence,
    verify_linear_bialgebra,
)
from .closure import close, close_map, coclose, cocurry, coeval_map, curry, eval_map, uncocurry, uncurry
from .cores import in_left_core, in_right_core, star_map, verify_core_membership
from .duality import (
    canonical_dual,
    cyclic_pairs,
    decide_left_dualable,
    decide_right_dualable,
    hom_retraction_composite,
    coclose_section_composite,
    mate,
    phi,
    psi,
    search_duals,
    verify_dual_pair,
    verify_mate_equations,
    verify_mix_eta_epsilon,
    verify_retract_section,
)
from .logger import logger
from .models import Counterexample, LawReport
from .monoidal import (
    day_map,
    dist_l,
    dist_r,
    duoidal,
    indep,
    indep_via_mix,
    normality_map,
    perm_dist_lr,
    perm_dist_rl,
    substitute,
    substitute_map,
    tensor,
    tensor_assoc,
    tensor_map,
    tensor_sym,
    tensor_unit_l,
    tensor_unit_r,
    tri_assoc,
    tri_unit_l,
    tri_unit_r,
)
from .polycore import (
    PolyMap,
    Polynomial,
    Y,
    bounded_polynomials,
    compare_maps,
    compose,
    enumerate_homs,
    evaluate,
    evaluate_map,
    hom_count,
    identity,
    is_cartesian,
    is_iso,
    iter_homs,
    linear,
    linear_map,
    representable,
    representable_map,
)

SMALL = bounded_polynomials(2, 2)


def sample_hom(rng: random.Random, p: Polynomial, q: Polynomial) -> Optional[PolyMap]:
    """A uniformly chosen forward table with uniformly chosen backward tables, or None if there is no map."""
    if hom_count(p, q) == 0:
        return None
    while True:
        forward = tuple(rng.randrange(q.num_positions) for _ in p.positions()) if q.num_positions else ()
        if all(p.card(P) > 0 or q.card(Q) == 0 for P, Q in enumerate(forward)):
            break
    backward = tuple(tuple(rng.randrange(p.card(P)) for _ in q.directions(Q)) for P, Q in enumerate(forward))
    return PolyMap(p, q, forward, backward)


def sample_maps(rng: random.Random, family: Sequence[Polynomial], count: int) -> List[PolyMap]:
    """`count` maps between random members of the family, skipping empty hom-sets."""
    maps = []
    attempts = 0
    while len(maps) < count and attempts < count * 20:
        attempts += 1
        f = sample_hom(rng, rng.choice(family), rng.choice(family))
        if f is not None:
            maps.append(f)
    return maps


def summarize(law: str, reports: Iterable[LawReport], stats: Optional[Dict] = None) -> LawReport:
    """Combine instance checks, keeping only the failing ones as children."""
    reports = list(reports)
    failing = [r for r in reports if not r.passed]
    merged = {"checked": len(reports), "failed": len(failing)}
    merged.update(stats or {})
    return LawReport.combine(law, failing, stats=merged)


def check(law: str, condition: bool, lhs: str = "", rhs: str = "") -> LawReport:
    """A yes/no law instance."""
    if condition:
        return LawReport(law, True)
    return LawReport(law, False, Counterexample((), (), lhs, rhs))


# polycore


def polycore_suite(rng: random.Random) -> List[LawReport]:
    pairs = list(product(SMALL, repeat=2))
    counts = summarize(
        "hom_count_matches_enumeration",
        (
            check(f"homs {p} -> {q}", hom_count(p, q) == len(enumerate_homs(p, q)), str(hom_count(p, q)), "enumerated")
            for p, q in pairs
        ),
    )
    positions = summarize(
        "evaluate_at_one_counts_positions",
        (check(f"evaluate {p}", evaluate(p, 1).size == p.num_positions) for p in SMALL),
    )
    category = []
    for f in sample_maps(rng, SMALL, 40):
        category.append(compare_maps(f"unit_l {f.dom} -> {f.cod}", compose(identity(f.dom), f), f))
        category.append(compare_maps(f"unit_r {f.dom} -> {f.cod}", compose(f, identity(f.cod)), f))
        g = sample_hom(rng, f.cod, rng.choice(SMALL))
        h = sample_hom(rng, g.cod, rng.choice(SMALL)) if g is not None else None
        if g is not None and h is not None:
            category.append(compare_maps(f"assoc {f.dom} -> {h.cod}", compose(compose(f, g), h), compose(f, compose(g, h))))
    iso_cartesian = []
    for p, q in pairs:
        for f in iter_homs(p, q):
            if is_iso(f):
                iso_cartesian.append(check(f"iso is cartesian {p} -> {q}", is_cartesian(f)))
    folded = PolyMap(Polynomial((1, 1)), Y, (0, 0), ((0,), (0,)))
    return [
        counts,
        positions,
        summarize("category_laws", category),
        summarize("iso_implies_cartesian", iso_cartesian),
        check("cartesian_not_iso_witness", is_cartesian(folded) and not is_iso(folded)),
    ]


# monoidal


def monoidal_suite(rng: random.Random) -> List[LawReport]:
    narrow = [p for p in bounded_polynomials(2, 1) + bounded_polynomials(1, 2)]
    pentagon, tri_pentagon, triangle = [], [], []
    for _ in range(12):
        a, b, c, d = (rng.choice(SMALL) for _ in range(4))
        pentagon.append(
            compare_maps(
                f"pentagon {a}, {b}, {c}, {d}",
                compose(tensor_assoc(tensor(a, b), c, d), tensor_assoc(a, b, tensor(c, d))),
                compose(
                    tensor_map(tensor_assoc(a, b, c), identity(d)),
                    tensor_assoc(a, tensor(b, c), d),
                    tensor_map(identity(a), tensor_assoc(b, c, d)),
                ),
            )
        )
        a, b, c, d = (rng.choice(narrow) for _ in range(4))
        tri_pentagon.append(
            compare_maps(
                f"tri_pentagon {a}, {b}, {c}, {d}",
                compose(tri_assoc(substitute(a, b), c, d), tri_assoc(a, b, substitute(c, d))),
                compose(
                    substitute_map(tri_assoc(a, b, c), identity(d)),
                    tri_assoc(a, substitute(b, c), d),
                    substitute_map(identity(a), tri_assoc(b, c, d)),
                ),
            )
        )
    for a, b in product(SMALL, repeat=2):
        triangle.append(
            compare_maps(
                f"triangle {a}, {b}",
                compose(tensor_assoc(a, Y, b), tensor_map(identity(a), tensor_unit_l(b))),
                tensor_map(tensor_unit_r(a), identity(b)),
            )
        )
        triangle.append(
            compare_maps(
                f"tri_triangle {a}, {b}",
                compose(tri_assoc(a, Y, b), substitute_map(identity(a), tri_unit_l(b))),
                substitute_map(tri_unit_r(a), identity(b)),
            )
        )

    mix, cartesian, symmetry = [], [], []
    for p, q in product(SMALL, repeat=2):
        direct = indep(p, q)
        mix.append(compare_maps(f"mix left leg {p}, {q}", indep_via_mix(p, q, "left"), direct))
        mix.append(compare_maps(f"mix right leg {p}, {q}", indep_via_mix(p, q, "right"), direct))
        cartesian.append(check(f"indep cartesian {p}, {q}", is_cartesian(direct)))
    for a, b, c in (tuple(rng.choice(SMALL) for _ in range(3)) for _ in range(12)):
        symmetry.append(
            compare_maps(
                f"dist symmetry {a}, {b}, {c}",
                compose(tensor_sym(a, substitute(b, c)), perm_dist_rl(b, c, a)),
                compose(dist_l(a, b, c), substitute_map(tensor_sym(a, b), identity(c))),
            )
        )
        symmetry.append(
            compare_maps(
                f"perm_dist at unit {b}, {c}",
                compose(perm_dist_lr(Y, b, c), substitute_map(identity(b), tensor_unit_l(c))),
                tensor_unit_l(substitute(b, c)),
            )
        )

    naturality = []
    for _ in range(10):
        f, g, h = sample_maps(rng, SMALL, 3)
        naturality.append(
            compare_maps(
                "indep natural",
                compose(tensor_map(f, g), indep(f.cod, g.cod)),
                compose(indep(f.dom, g.dom), substitute_map(f, g)),
            )
        )
        naturality.append(
            compare_maps(
                "dist_l natural",
                compose(tensor_map(f, substitute_map(g, h)), dist_l(f.cod, g.cod, h.cod)),
                compose(dist_l(f.dom, g.dom, h.dom), substitute_map(tensor_map(f, g), h)),
            )
        )
        naturality.append(
            compare_maps(
                "dist_r natural",
                compose(tensor_map(substitute_map(g, h), f), dist_r(g.cod, h.cod, f.cod)),
                compose(dist_r(g.dom, h.dom, f.dom), substitute_map(g, tensor_map(h, f))),
            )
        )
        k = sample_maps(rng, SMALL, 1)[0]
        naturality.append(
            compare_maps(
                "duoidal natural",
                compose(tensor_map(substitute_map(f, g), substitute_map(h, k)), duoidal(f.cod, g.cod, h.cod, k.cod)),
                compose(duoidal(f.dom, g.dom, h.dom, k.dom), substitute_map(tensor_map(f, h), tensor_map(g, k))),
            )
        )

    day = []
    for p, q in product(bounded_polynomials(2, 2), repeat=2):
        if p.num_positions == 0 or q.num_positions == 0:
            continue
        day.append(check_day_uniqueness(p, q, Y))
        day.append(check_day_uniqueness(p, q, Polynomial((1, 2))))

    return [
        summarize("tensor_pentagon", pentagon),
        summarize("tri_pentagon", tri_pentagon),
        summarize("triangles", triangle),
        summarize("mix_coherence", mix),
        compare_maps("normality", normality_map(), identity(Y)),
        summarize("indep_cartesian", cartesian),
        summarize("distributor_symmetry", symmetry),
        summarize("naturality", naturality),
        summarize("day_uniqueness", day),
    ]


def check_day_uniqueness(p: Polynomial, q: Polynomial, r: Polynomial) -> LawReport:
    """
    Distinct maps p ⊗ q → r restrict to distinct families p(A) × q(B) → r(A × B).

    A and B are as large as the largest direction sets of p and q, which
    is enough to tell backward tables apart.
    """
    a = max(max(p.cards, default=0), 1)
    b = max(max(q.cards, default=0), 1)
    comparison = day_map(p, q, a, b)
    restricted = set()
    homs = enumerate_homs(tensor(p, q), r)
    for h in homs:
        table = evaluate_map(h, a * b)
        restricted.add(tuple(table[i] for i in comparison))
    return check(f"day {p}, {q} into {r}", len(restricted) == len(homs), f"{len(restricted)} families", f"{len(homs)} maps")


# closure


def closure_suite(rng: random.Random) -> List[LawReport]:
    lemmas = []
    for n in range(6):
        lemmas.append(check(f"[{n}y, y] = y^{n}", close(linear(n), Y) == representable(n)))
        lemmas.append(check(f"[y^{n}, y] = {n}y", close(representable(n), Y) == linear(n)))
    for p in bounded_polynomials(3, 3):
        lemmas.append(check(f"coclose(y, {p})", coclose(Y, p) == representable(p.num_positions)))

    closes = {(p, q): close(p, q) for p, q in product(SMALL, repeat=2)}
    counts = []
    for p, q, r in product(SMALL, repeat=3):
        counts.append(check(f"tensor-hom {p}, {q}, {r}", hom_count(tensor(p, r), q) == hom_count(r, closes[(p, q)])))
        counts.append(check(f"coclose-sub {p}, {q}, {r}", hom_count(coclose(p, q), r) == hom_count(p, substitute(r, q))))

    transposes, triangles = [], []
    tiny = bounded_polynomials(2, 1) + [representable(2)]
    for _ in range(15):
        p, r, b = (rng.choice(tiny) for _ in range(3))
        f = sample_hom(rng, tensor(p, r), b)
        if f is not None:
            transposes.append(compare_maps(f"uncurry curry {p}, {r}, {b}", uncurry(curry(f, p, r), p, b), f))
        p, q, r = (rng.choice(tiny) for _ in range(3))
        g = sample_hom(rng, p, substitute(r, q))
        if g is not None:
            transposes.append(compare_maps(f"uncocurry cocurry {p}, {q}, {r}", uncocurry(cocurry(g, r, q), p, q), g))
    for p, q in product(tiny, repeat=2):
        hom, co = close(p, q), coclose(p, q)
        triangles.append(compare_maps(f"curry ev {p}, {q}", curry(eval_map(p, q), p, hom), identity(hom)))
        triangles.append(compare_maps(f"cocurry coev {p}, {q}", cocurry(coeval_map(p, q), co, q), identity(co)))
        triangles.append(compare_maps(f"close_map id {p}, {q}", close_map(identity(p), identity(q)), identity(hom)))
    return [
        summarize("closure_lemmas", lemmas),
        summarize("adjunction_counts", counts),
        summarize("transposes", transposes),
        summarize("adjunction_triangles", triangles),
    ]


# duality


def duality_suite(rng: random.Random) -> List[LawReport]:
    canonical = []
    for n in range(5):
        w = canonical_dual(n)
        canonical.append(verify_dual_pair(w))
        canonical.append(verify_mix_eta_epsilon(w))
        canonical.append(verify_retract_section(w))
    composites = []
    for n in range(4):
        p, q = representable(n), linear(n)
        composites.append(compare_maps(f"hom retraction y^{n}", hom_retraction_composite(p), identity(close(p, Y))))
        composites.append(compare_maps(f"coclose section {n}y", coclose_section_composite(q), identity(coclose(Y, q))))
    double = []
    for p in SMALL:
        double.append(check(f"phi {p}", (phi(p) == identity(p)) == p.is_representable()))
        double.append(check(f"psi {p}", is_iso(psi(p)) == p.is_linear()))
        double.append(check(f"dualable {p}", (decide_right_dualable(p) is not None) == p.is_representable()))
        double.append(check(f"co-dualable {p}", (decide_left_dualable(p) is not None) == p.is_linear()))
    results = search_duals(2, 2)
    found = [(r.left, r.right) for r in results]
    expected = [(linear(n), representable(n)) for n in range(3)]
    search = [
        check("search_duals (2, 2)", found == expected, str([f"{b} -| {a}" for b, a in found]), str(expected)),
        check("cyclic pairs", [(r.left, r.right) for r in cyclic_pairs(results)] == [(Y, Y)]),
    ]
    mates = []
    for n, m in product(range(3), repeat=2):
        w, w2 = canonical_dual(n), canonical_dual(m)
        for t in product(range(m), repeat=n):
            f = PolyMap(linear(n), linear(m), t, ((0,),) * n)
            g = mate(f, w, w2)
            mates.append(check(f"mate {t}", g.on_directions[0] == t))
            mates.append(verify_mate_equations(f, g, w, w2))
    return [
        summarize("canonical_dualities", canonical),
        summarize("identity_composites", composites),
        summarize("double_duals", double),
        summarize("dual_search", search),
        summarize("mates", mates),
    ]


# cores


def cores_suite(rng: random.Random) -> List[LawReport]:
    agreement = []
    for p in SMALL:
        agreement.append(verify_core_membership(p, max_probe=2, side="left"))
        agreement.append(verify_core_membership(p, max_probe=2, side="right"))
    duals = [
        check(f"legs in cores {r.left} -| {r.right}", in_left_core(r.left) and in_right_core(r.right))
        for r in search_duals(2, 2)
    ]
    star = []
    for a, b, c in product(range(3), repeat=3):
        for phi_map in iter_homs(representable(b), representable(a)):
            for psi_map in iter_homs(representable(c), representable(b)):
                star.append(
                    compare_maps(
                        f"star {c} -> {b} -> {a}",
                        star_map(compose(psi_map, phi_map)),
                        compose(star_map(phi_map), star_map(psi_map)),
                    )
                )
        star.append(
            check(
                f"star hom count {a}, {b}",
                hom_count(representable(b), representable(a)) == hom_count(linear(a), linear(b)),
            )
        )
    return [
        summarize("core_agreement", agreement),
        summarize("duals_in_cores", duals),
        summarize("star_functor", star),
    ]


# algebra


def algebra_suite(rng: random.Random) -> List[LawReport]:
    bialgebras, transport = [], []
    for n in range(1, 4):
        for m in enumerate_monoids(n):
            for side in ("left", "right"):
                bialgebras.append(verify_linear_bialgebra(linear_bialgebra(m, side)))
            transport.append(
                compare_maps(f"left monoid transport {m.table}", left_linear_monoid(m).mult, linear_map(m.flat_table(), n))
            )
            transport.append(
                compare_maps(
                    f"right comonoid transport {m.table}",
                    right_linear_comonoid(m).comult,
                    representable_map(m.flat_table(), n),
                )
            )
    return [
        summarize("linear_bialgebras", bialgebras),
        summarize("strong_monoidal_transport", transport),
        verify_cyclic_coincidence(),
    ]


SUITES: Dict[str, Callable[[random.Random], List[LawReport]]] = {
    "polycore": polycore_suite,
    "monoidal": monoidal_suite,
    "closure": closure_suite,
    "duality": duality_suite,
    "cores": cores_suite,
    "algebra": algebra_suite,
}


def run_suite(name: str, seed: int = 0) -> LawReport:
    """
    Run one named suite.

    Raises:
        KeyError: for an unknown suite name.
    """
    if name not in SUITES:
        raise KeyError(name)
    logger.info(f"Running law suite '{name}' with seed {seed}")
    children = SUITES[name](random.Random(seed))
    report = LawReport.combine(name, children, stats={"seed": seed})
    for failure in report.failures():
        logger.warning(f"Law failed in suite '{name}': {failure}")
    return report
