# poly_ldc_lib/duality.py
"""
Linear duals b ⊣⊣ a: unit η: y → a ◁ b and counit ε: b ⊗ a → y.

Snake composites, the double-dual maps Φ and Ψ, the retraction/section
laws, the canonical dualities Ay ⊣⊣ y^A, brute-force dual search, and mates
of maps between dual pairs.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from . import config
from .closure import coeval_arrow, coeval_map, cocurry, curry, eval_arrow, eval_map
from .errors import DomainMismatch, NotRepresentable
from .layout import (
    UNIT,
    Arrow,
    CloseLayout,
    CocloseLayout,
    Layout,
    PlainLayout,
    SubstituteLayout,
    TensorLayout,
    identity_arrow,
    lift,
    to_plain,
)
from .logger import logger
from .models import LawReport
from .monoidal import (
    dist_l_arrow,
    dist_r_arrow,
    duoidal_arrow,
    indep_arrow,
    mix_arrow,
    perm_dist_lr_arrow,
    perm_dist_rl_arrow,
    substitute,
    substitute_arrow,
    substitute_map,
    tensor,
    tensor_arrow,
    tensor_assoc_arrow,
    tensor_assoc_inv_arrow,
    tensor_map,
    tensor_sym,
    tensor_sym_arrow,
    tensor_unit_l_arrow,
    tensor_unit_l_inv_arrow,
    tensor_unit_r_arrow,
    tensor_unit_r_inv_arrow,
    tri_assoc_inv_arrow,
    tri_unit_l_arrow,
    tri_unit_l_inv_arrow,
    tri_unit_r_arrow,
    tri_unit_r_inv_arrow,
)
from .polycore import (
    FiniteSet,
    PolyMap,
    Polynomial,
    SetLike,
    Y,
    as_size,
    bounded_polynomials,
    compare_maps,
    compose,
    hom_count,
    identity,
    iter_homs,
    linear,
    representable,
)


@dataclass(frozen=True)
class LinearDual:
    """
    A duality between layouts, kept as arrows.

    Dualities between composite objects (b ⊗ b' ⊣⊣ a ◁ a', ...) have units
    whose codomains are far too large to tabulate, so they only exist here.
    """

    left: Layout
    right: Layout
    unit: Arrow
    counit: Arrow

    def __post_init__(self):
        if self.unit.dom != UNIT or self.unit.cod != SubstituteLayout(self.right, self.left):
            raise DomainMismatch(f"Unit of a duality must be y -> {SubstituteLayout(self.right, self.left).describe()}")
        if self.counit.dom != TensorLayout(self.left, self.right) or self.counit.cod != UNIT:
            raise DomainMismatch(f"Counit of a duality must be {TensorLayout(self.left, self.right).describe()} -> y")


@dataclass(frozen=True)
class DualityWitness:
    """left ⊣⊣ right, witnessed by tabulated η: y → right ◁ left and ε: left ⊗ right → y."""

    left: Polynomial
    right: Polynomial
    eta: PolyMap
    epsilon: PolyMap

    def __post_init__(self):
        if self.eta.dom != Y or self.eta.cod != substitute(self.right, self.left):
            raise DomainMismatch(
                f"eta must be y -> {substitute(self.right, self.left)}, got {self.eta.dom} -> {self.eta.cod}",
                self.eta.dom, self.eta.cod,
            )
        if self.epsilon.dom != tensor(self.left, self.right) or self.epsilon.cod != Y:
            raise DomainMismatch(
                f"epsilon must be {tensor(self.left, self.right)} -> y, got {self.epsilon.dom} -> {self.epsilon.cod}",
                self.epsilon.dom, self.epsilon.cod,
            )

    def linear_dual(self) -> LinearDual:
        b, a = PlainLayout(self.left), PlainLayout(self.right)
        return LinearDual(
            b,
            a,
            lift(self.eta, dom=UNIT, cod=SubstituteLayout(a, b), name="eta"),
            lift(self.epsilon, dom=TensorLayout(b, a), cod=UNIT, name="epsilon"),
        )

    def to_json(self) -> Dict[str, Any]:
        return {
            "left": self.left.to_json(),
            "right": self.right.to_json(),
            "eta": self.eta.to_json(),
            "epsilon": self.epsilon.to_json(),
        }


# Snakes


def snake_right_arrow(d: LinearDual) -> Arrow:
    """a → y ⊗ a → (a ◁ b) ⊗ a → a ◁ (b ⊗ a) → a ◁ y → a."""
    a, b = d.right, d.left
    return (
        tensor_unit_l_inv_arrow(a)
        .then(tensor_arrow(d.unit, identity_arrow(a)))
        .then(dist_r_arrow(a, b, a))
        .then(_along_inner(a, d.counit))
        .then(tri_unit_r_arrow(a))
    )


def snake_left_arrow(d: LinearDual) -> Arrow:
    """b → b ⊗ y → b ⊗ (a ◁ b) → (b ⊗ a) ◁ b → y ◁ b → b."""
    a, b = d.right, d.left
    return (
        tensor_unit_r_inv_arrow(b)
        .then(tensor_arrow(identity_arrow(b), d.unit))
        .then(dist_l_arrow(b, a, b))
        .then(_along_outer(d.counit, b))
        .then(tri_unit_l_arrow(b))
    )


def _along_inner(outer: Layout, g: Arrow) -> Arrow:
    return substitute_arrow(identity_arrow(outer), g)


def _along_outer(f: Arrow, inner: Layout) -> Arrow:
    return substitute_arrow(f, identity_arrow(inner))


def verify_linear_dual(d: LinearDual, law: str = "dual") -> LawReport:
    """Tabulate both snakes and compare them with identities."""
    a, b = d.right.polynomial(), d.left.polynomial()
    children = [
        compare_maps(f"{law}.1", snake_right_arrow(d).tabulate(), identity(a)),
        compare_maps(f"{law}.2", snake_left_arrow(d).tabulate(), identity(b)),
    ]
    return LawReport.combine(law, children)


def verify_dual_pair(w: DualityWitness) -> LawReport:
    report = verify_linear_dual(w.linear_dual())
    if not report.passed:
        logger.debug(f"Snake laws fail for {w.left} -| {w.right}: {report.failures()[0]}")
    return report


def _forward_is_identity(arrow: Arrow) -> bool:
    return all(arrow.forward(x) == x for x in arrow.dom.positions())


# Canonical dualities


def canonical_dual(carrier: SetLike) -> DualityWitness:
    """
    Ay ⊣⊣ y^A with η = coev and ε = ev.

    coclose(y, Ay) is y^A, so η is coev at (y, Ay). ε evaluates y^A against
    [y^A, y] = Ay after a symmetry; at position x it picks direction x.
    """
    n = as_size(carrier)
    b, a = linear(n), representable(n)
    eta = coeval_map(Y, b)
    epsilon = compose(tensor_sym(b, a), eval_map(a, Y))
    return DualityWitness(b, a, eta, epsilon)


def unit_dual() -> LinearDual:
    """y ⊣⊣ y with unitors for η and ε."""
    return LinearDual(UNIT, UNIT, tri_unit_l_inv_arrow(UNIT), tensor_unit_l_arrow(UNIT))


def tensor_dual(d1: LinearDual, d2: LinearDual) -> LinearDual:
    """
    b1 ⊗ b2 ⊣⊣ a1 ◁ a2, pairing b1 with the outer a1 and b2 with the inner a2.
    """
    b1, a1, b2, a2 = d1.left, d1.right, d2.left, d2.right
    left, right = TensorLayout(b1, b2), SubstituteLayout(a1, a2)
    unit = (
        d1.unit
        .then(_along_inner(a1, tensor_unit_r_inv_arrow(b1)))
        .then(_along_inner(a1, tensor_arrow(identity_arrow(b1), d2.unit)))
        .then(_along_inner(a1, perm_dist_lr_arrow(b1, a2, b2)))
        .then(tri_assoc_inv_arrow(a1, a2, left))
    )
    inner = perm_dist_lr_arrow(b2, a1, a2).then(_along_inner(a1, d2.counit)).then(tri_unit_r_arrow(a1))
    counit = (
        tensor_assoc_arrow(b1, b2, right)
        .then(tensor_arrow(identity_arrow(b1), inner))
        .then(d1.counit)
    )
    return LinearDual(left, right, unit, counit)


def substitute_dual(d1: LinearDual, d2: LinearDual) -> LinearDual:
    """
    b1 ◁ b2 ⊣⊣ a1 ⊗ a2, pairing the outer b1 with a1 and the inner b2 with a2.

    The unit passes through indep on b1 ⊗ b2, so this is a duality when b1
    is in the left core.
    """
    b1, a1, b2, a2 = d1.left, d1.right, d2.left, d2.right
    left, right = SubstituteLayout(b1, b2), TensorLayout(a1, a2)
    unit = (
        tensor_unit_l_inv_arrow(UNIT)
        .then(tensor_arrow(d1.unit, d2.unit))
        .then(duoidal_arrow(a1, b1, a2, b2))
        .then(_along_inner(right, indep_arrow(b1, b2)))
    )
    outer = perm_dist_rl_arrow(b1, b2, a1).then(_along_outer(d1.counit, b2)).then(tri_unit_l_arrow(b2))
    counit = (
        tensor_assoc_inv_arrow(left, a1, a2)
        .then(tensor_arrow(outer, identity_arrow(a2)))
        .then(d2.counit)
    )
    return LinearDual(left, right, unit, counit)


# Double duals


def phi_arrow(p: Layout) -> Arrow:
    """Φ_p: p → coclose(y, [p, y]), as coev ; distR ; ev."""
    hom = CloseLayout(p, UNIT)
    target = CocloseLayout(UNIT, hom)
    return (
        tensor_unit_l_inv_arrow(p)
        .then(tensor_arrow(coeval_arrow(UNIT, hom), identity_arrow(p)))
        .then(dist_r_arrow(target, hom, p))
        .then(_along_inner(target, tensor_sym_arrow(hom, p).then(eval_arrow(p, UNIT))))
        .then(tri_unit_r_arrow(target))
    )


def psi_arrow(q: Layout) -> Arrow:
    """Ψ_q: [coclose(y, q), y] → q, as coev ; distL ; ev."""
    source = CocloseLayout(UNIT, q)
    hom = CloseLayout(source, UNIT)
    return (
        tensor_unit_r_inv_arrow(hom)
        .then(tensor_arrow(identity_arrow(hom), coeval_arrow(UNIT, q)))
        .then(dist_l_arrow(hom, source, q))
        .then(_along_outer(tensor_sym_arrow(hom, source).then(eval_arrow(source, UNIT)), q))
        .then(tri_unit_l_arrow(q))
    )


def phi(p: Polynomial) -> PolyMap:
    return phi_arrow(PlainLayout(p)).tabulate()


def psi(q: Polynomial) -> PolyMap:
    return psi_arrow(PlainLayout(q)).tabulate()


def phi_retractions(p: Polynomial) -> List[PolyMap]:
    """Every r with Φ_p ; r = id_p."""
    double_dual = phi(p)
    config.check_size(hom_count(double_dual.cod, p), f"retraction candidates for phi at {p}")
    target = identity(p)
    return [r for r in iter_homs(double_dual.cod, p) if compose(double_dual, r) == target]


def psi_sections(q: Polynomial) -> List[PolyMap]:
    """Every s with s ; Ψ_q = id_q."""
    double_dual = psi(q)
    config.check_size(hom_count(q, double_dual.dom), f"section candidates for psi at {q}")
    target = identity(q)
    return [s for s in iter_homs(q, double_dual.dom) if compose(s, double_dual) == target]


def decide_right_dualable(p: Polynomial) -> Optional[FiniteSet]:
    """A with p = y^A when p has a left dual, else None."""
    return FiniteSet(p.cards[0]) if p.is_representable() else None


def decide_left_dualable(q: Polynomial) -> Optional[FiniteSet]:
    """A with q = Ay when q has a right dual, else None."""
    return FiniteSet(q.num_positions) if q.is_linear() else None


def hom_retraction_composite(p: Polynomial) -> PolyMap:
    """
    [p, y] → [p, y] through coev, distL and ev, using a retraction χ of Φ_p.

    Equals the identity when p is representable.

    Raises:
        NotRepresentable: when Φ_p has no retraction.
    """
    retractions = phi_retractions(p)
    if not retractions:
        raise NotRepresentable(f"phi at {p} has no retraction")
    source = PlainLayout(p)
    hom = CloseLayout(source, UNIT)
    double = CocloseLayout(UNIT, hom)
    chi = to_plain(double).then(lift(retractions[0], name="chi"))
    pairing = tensor_arrow(identity_arrow(hom), chi).then(tensor_sym_arrow(hom, source)).then(eval_arrow(source, UNIT))
    return (
        tensor_unit_r_inv_arrow(hom)
        .then(tensor_arrow(identity_arrow(hom), coeval_arrow(UNIT, hom)))
        .then(dist_l_arrow(hom, double, hom))
        .then(_along_outer(pairing, hom))
        .then(tri_unit_l_arrow(hom))
        .tabulate()
    )


def coclose_section_composite(q: Polynomial) -> PolyMap:
    """
    coclose(y, q) → coclose(y, q) through coev, distR and ev, using a section Ω of Ψ_q.

    Equals the identity when q is linear.

    Raises:
        NotRepresentable: when Ψ_q has no section.
    """
    sections = psi_sections(q)
    if not sections:
        raise NotRepresentable(f"psi at {q} has no section")
    target = PlainLayout(q)
    double = CocloseLayout(UNIT, target)
    hom = CloseLayout(double, UNIT)
    omega = lift(sections[0], cod=hom, name="omega")
    pairing = tensor_arrow(omega, identity_arrow(double)).then(tensor_sym_arrow(hom, double)).then(eval_arrow(double, UNIT))
    return (
        tensor_unit_l_inv_arrow(double)
        .then(tensor_arrow(coeval_arrow(UNIT, target), identity_arrow(double)))
        .then(dist_r_arrow(double, target, double))
        .then(_along_inner(double, pairing))
        .then(tri_unit_r_arrow(double))
        .tabulate()
    )


def verify_retract_section(w: DualityWitness) -> LawReport:
    """
    φ ; η′ = id_a and ε′ ; ψ = id_b, where η′ and ε′ transpose η and ε.

    φ: a → coclose(y, b) and ψ: [a, y] → b are built from coev, ev, the
    distributors and the witness itself.
    """
    a, b = w.right, w.left
    d = w.linear_dual()
    A, B = d.right, d.left

    eta_t = cocurry(w.eta, a, b)
    epsilon_t = curry(compose(tensor_sym(a, b), w.epsilon), a, b)

    double = CocloseLayout(UNIT, B)
    retract = (
        tensor_unit_l_inv_arrow(A)
        .then(tensor_arrow(coeval_arrow(UNIT, B), identity_arrow(A)))
        .then(dist_r_arrow(double, B, A))
        .then(_along_inner(double, d.counit))
        .then(tri_unit_r_arrow(double))
        .tabulate()
    )
    hom = CloseLayout(A, UNIT)
    section = (
        tensor_unit_r_inv_arrow(hom)
        .then(tensor_arrow(identity_arrow(hom), d.unit))
        .then(dist_l_arrow(hom, A, B))
        .then(_along_outer(tensor_sym_arrow(hom, A).then(eval_arrow(A, UNIT)), B))
        .then(tri_unit_l_arrow(B))
        .tabulate()
    )
    children = [
        compare_maps("retract", compose(retract, eta_t), identity(a)),
        compare_maps("section", compose(epsilon_t, section), identity(b)),
    ]
    return LawReport.combine("retract-section", children)


def verify_mix_eta_epsilon(w: DualityWitness) -> LawReport:
    """
    Both ways of turning ε then η into a map b ⊗ a → a ◁ b through the mix map agree.

    (i) pairs η with ε on the right of y ⊗ -, (ii) on the left of - ⊗ y.
    """
    d = w.linear_dual()
    A, B = d.right, d.left
    T = TensorLayout(B, A)
    S = SubstituteLayout(A, B)
    direct = d.counit.then(mix_arrow()).then(d.unit).tabulate()
    first = (
        tensor_unit_l_inv_arrow(T)
        .then(tensor_arrow(d.unit, identity_arrow(T)))
        .then(tensor_arrow(identity_arrow(S), d.counit))
        .then(tensor_arrow(identity_arrow(S), mix_arrow()))
        .then(tensor_unit_r_arrow(S))
        .tabulate()
    )
    second = (
        tensor_unit_r_inv_arrow(T)
        .then(tensor_arrow(identity_arrow(T), d.unit))
        .then(tensor_arrow(d.counit, identity_arrow(S)))
        .then(tensor_arrow(mix_arrow(), identity_arrow(S)))
        .then(tensor_unit_l_arrow(S))
        .tabulate()
    )
    return LawReport.combine(
        "mix-eta-epsilon",
        [compare_maps("mix-eta-epsilon.i", first, direct), compare_maps("mix-eta-epsilon.ii", second, direct)],
    )


# Search


@dataclass(frozen=True)
class DualSearchResult:
    left: Polynomial
    right: Polynomial
    witnesses: Tuple[DualityWitness, ...] = field(default=())

    def sort_key(self):
        return (self.left.num_positions, self.left.cards, self.right.num_positions, self.right.cards)

    def to_json(self) -> Dict[str, Any]:
        return {
            "left": str(self.left),
            "right": str(self.right),
            "witnesses": len(self.witnesses),
            "first_witness": self.witnesses[0].to_json() if self.witnesses else None,
        }


def search_pair(left: Polynomial, right: Polynomial) -> Optional[DualSearchResult]:
    """
    Every verified (η, ε) making left ⊣⊣ right, or None.

    The forward part of the snake on `right` does not depend on ε, so η is
    pruned with any ε first; ε is then pruned on the forward part of the
    snake on `left` before the full check.
    """
    pair = tensor(left, right)
    first_counit = next(iter_homs(pair, Y), None)
    if first_counit is None:
        return None
    B, A = PlainLayout(left), PlainLayout(right)
    unit_cod = SubstituteLayout(A, B)
    counit_dom = TensorLayout(B, A)
    witnesses = []
    for eta in iter_homs(Y, substitute(right, left)):
        unit = lift(eta, dom=UNIT, cod=unit_cod, name="eta")
        probe = LinearDual(B, A, unit, lift(first_counit, dom=counit_dom, cod=UNIT))
        if not _forward_is_identity(snake_right_arrow(probe)):
            continue
        config.check_size(hom_count(pair, Y), f"counit candidates for {left} -| {right}")
        for epsilon in iter_homs(pair, Y):
            candidate = LinearDual(B, A, unit, lift(epsilon, dom=counit_dom, cod=UNIT, name="epsilon"))
            if not _forward_is_identity(snake_left_arrow(candidate)):
                continue
            witness = DualityWitness(left, right, eta, epsilon)
            if verify_dual_pair(witness).passed:
                witnesses.append(witness)
    if not witnesses:
        return None
    logger.debug(f"Found {len(witnesses)} witnesses for {left} -| {right}")
    return DualSearchResult(left, right, tuple(witnesses))


def _search_pair_job(job: Tuple[Polynomial, Polynomial, int]) -> Optional[DualSearchResult]:
    left, right, cap = job
    with config.size_cap(cap):
        return search_pair(left, right)


def search_duals(max_positions: int, max_directions: int, workers: Optional[int] = None) -> List[DualSearchResult]:
    """
    Every dual pair left ⊣⊣ right with both legs inside the bounds.

    Args:
        max_positions (int): Bound on positions of both legs.
        max_directions (int): Bound on directions at every position.
        workers (int, optional): Process pool size; defaults to POLY_LDC_WORKERS.

    Returns:
        List[DualSearchResult]: Sorted by the shape of the left leg, then the right.
    """
    family = bounded_polynomials(max_positions, max_directions)
    jobs = [(left, right, config.get_cap()) for left in family for right in family]
    workers = workers if workers is not None else config.get_settings().workers
    logger.info(f"Searching {len(jobs)} candidate pairs with {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            found = list(executor.map(_search_pair_job, jobs, chunksize=max(1, len(jobs) // (workers * 8))))
    else:
        found = [_search_pair_job(job) for job in jobs]
    results = sorted((result for result in found if result is not None), key=DualSearchResult.sort_key)
    logger.info(f"Dual search found {len(results)} pairs")
    return results


def cyclic_pairs(results: Iterable[DualSearchResult]) -> List[DualSearchResult]:
    """Pairs that are duals in both orientations."""
    results = list(results)
    shapes = {(r.left, r.right) for r in results}
    return [r for r in results if (r.right, r.left) in shapes]


# Mates


def mate_arrow(f: Arrow, d: LinearDual, d2: LinearDual) -> Arrow:
    """f: d.left → d2.left gives d2.right → d.right."""
    a, b, a2 = d.right, d.left, d2.right
    return (
        tensor_unit_l_inv_arrow(a2)
        .then(tensor_arrow(d.unit, identity_arrow(a2)))
        .then(dist_r_arrow(a, b, a2))
        .then(_along_inner(a, tensor_arrow(f, identity_arrow(a2)).then(d2.counit)))
        .then(tri_unit_r_arrow(a))
    )


def comate_arrow(g: Arrow, d: LinearDual, d2: LinearDual) -> Arrow:
    """g: d2.right → d.right gives d.left → d2.left."""
    b, a2, b2 = d.left, d2.right, d2.left
    return (
        tensor_unit_r_inv_arrow(b)
        .then(tensor_arrow(identity_arrow(b), d2.unit))
        .then(dist_l_arrow(b, a2, b2))
        .then(_along_outer(tensor_arrow(identity_arrow(b), g).then(d.counit), b2))
        .then(tri_unit_l_arrow(b2))
    )


def mate(f: PolyMap, w: DualityWitness, w2: DualityWitness) -> PolyMap:
    """
    The map w2.right → w.right matching f: w.left → w2.left.

    Raises:
        DomainMismatch: when f does not run between the left legs.
    """
    if f.dom != w.left or f.cod != w2.left:
        raise DomainMismatch(f"mate expects a map {w.left} -> {w2.left}, got {f.dom} -> {f.cod}", f.dom, f.cod)
    return mate_arrow(lift(f, name="f"), w.linear_dual(), w2.linear_dual()).tabulate()


def comate(g: PolyMap, w: DualityWitness, w2: DualityWitness) -> PolyMap:
    """Inverse of mate: g: w2.right → w.right gives w.left → w2.left."""
    if g.dom != w2.right or g.cod != w.right:
        raise DomainMismatch(f"comate expects a map {w2.right} -> {w.right}, got {g.dom} -> {g.cod}", g.dom, g.cod)
    return comate_arrow(lift(g, name="g"), w.linear_dual(), w2.linear_dual()).tabulate()


def verify_mate_equations(f: PolyMap, g: PolyMap, w: DualityWitness, w2: DualityWitness) -> LawReport:
    """
    f: b → b2 and g: a2 → a form a morphism of duals.

    (i) η_2 ; (g ◁ id) = η ; (id ◁ f), (ii) (f ⊗ id) ; ε_2 = (id ⊗ g) ; ε.
    """
    a, b, a2, b2 = w.right, w.left, w2.right, w2.left
    children = [
        compare_maps(
            "mate.unit",
            compose(w2.eta, substitute_map(g, identity(b2))),
            compose(w.eta, substitute_map(identity(a), f)),
        ),
        compare_maps(
            "mate.counit",
            compose(tensor_map(f, identity(a2)), w2.epsilon),
            compose(tensor_map(identity(b), g), w.epsilon),
        ),
    ]
    return LawReport.combine("mate", children)
