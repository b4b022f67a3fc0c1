# poly_ldc_lib/monoidal.py
"""
The Dirichlet product ⊗ and the substitution product ◁ with their structural
isomorphisms, the duoidal interchange, the linear distributors, the mix map
and indep.

Every structure map exists twice: an `*_arrow` builder working on layouts
(used inside long composites) and a tabulated PolyMap version on plain
polynomials.
"""

from typing import Tuple

from .layout import (
    UNIT,
    Arrow,
    Layout,
    PlainLayout,
    SubstituteLayout,
    TensorLayout,
    identity_arrow,
    lift,
)
from .logger import logger
from .polycore import (
    PolyMap,
    Polynomial,
    SetLike,
    Y,
    as_size,
    evaluate_elements,
)


def tensor(p: Polynomial, q: Polynomial) -> Polynomial:
    return TensorLayout(PlainLayout(p), PlainLayout(q)).polynomial()


def substitute(p: Polynomial, q: Polynomial) -> Polynomial:
    return SubstituteLayout(PlainLayout(p), PlainLayout(q)).polynomial()


# Functoriality


def tensor_arrow(f: Arrow, g: Arrow) -> Arrow:
    def forward(position):
        x, z = position
        return (f.forward(x), g.forward(z))

    def backward(position, direction):
        (x, z), (d, e) = position, direction
        return (f.backward(x, d), g.backward(z, e))

    return Arrow(TensorLayout(f.dom, g.dom), TensorLayout(f.cod, g.cod), forward, backward, name=f"({f.name} @ {g.name})")


def substitute_arrow(f: Arrow, g: Arrow) -> Arrow:
    """f ◁ g: the outer position moves along f, each chosen inner position along g."""

    def forward(position):
        x, w = position
        index = f.dom.direction_index(x)
        target = f.forward(x)
        return (target, tuple(g.forward(w[index[f.backward(x, d)]]) for d in f.cod.directions(target)))

    def backward(position, direction):
        (x, w), (d2, e2) = position, direction
        d = f.backward(x, d2)
        return (d, g.backward(w[f.dom.direction_index(x)[d]], e2))

    return Arrow(
        SubstituteLayout(f.dom, g.dom), SubstituteLayout(f.cod, g.cod), forward, backward, name=f"({f.name} <| {g.name})"
    )


def tensor_map(f: PolyMap, g: PolyMap) -> PolyMap:
    return tensor_arrow(lift(f), lift(g)).tabulate()


def substitute_map(f: PolyMap, g: PolyMap) -> PolyMap:
    return substitute_arrow(lift(f), lift(g)).tabulate()


# Structural isomorphisms of ⊗


def tensor_unit_l_arrow(a: Layout) -> Arrow:
    return Arrow(TensorLayout(UNIT, a), a, lambda p: p[1], lambda p, e: (0, e), name="unitL")


def tensor_unit_l_inv_arrow(a: Layout) -> Arrow:
    return Arrow(a, TensorLayout(UNIT, a), lambda x: (0, x), lambda x, e: e[1], name="unitL^-1")


def tensor_unit_r_arrow(a: Layout) -> Arrow:
    return Arrow(TensorLayout(a, UNIT), a, lambda p: p[0], lambda p, d: (d, 0), name="unitR")


def tensor_unit_r_inv_arrow(a: Layout) -> Arrow:
    return Arrow(a, TensorLayout(a, UNIT), lambda x: (x, 0), lambda x, d: d[0], name="unitR^-1")


def tensor_sym_arrow(a: Layout, b: Layout) -> Arrow:
    return Arrow(
        TensorLayout(a, b),
        TensorLayout(b, a),
        lambda p: (p[1], p[0]),
        lambda p, e: (e[1], e[0]),
        name="sym",
    )


def tensor_assoc_arrow(a: Layout, b: Layout, c: Layout) -> Arrow:
    """(a ⊗ b) ⊗ c → a ⊗ (b ⊗ c)."""
    return Arrow(
        TensorLayout(TensorLayout(a, b), c),
        TensorLayout(a, TensorLayout(b, c)),
        lambda p: (p[0][0], (p[0][1], p[1])),
        lambda p, d: ((d[0], d[1][0]), d[1][1]),
        name="assoc",
    )


def tensor_assoc_inv_arrow(a: Layout, b: Layout, c: Layout) -> Arrow:
    return Arrow(
        TensorLayout(a, TensorLayout(b, c)),
        TensorLayout(TensorLayout(a, b), c),
        lambda p: ((p[0], p[1][0]), p[1][1]),
        lambda p, d: (d[0][0], (d[0][1], d[1])),
        name="assoc^-1",
    )


# Structural isomorphisms of ◁


def tri_unit_l_arrow(a: Layout) -> Arrow:
    """y ◁ a → a."""
    return Arrow(SubstituteLayout(UNIT, a), a, lambda p: p[1][0], lambda p, e: (0, e), name="triUnitL")


def tri_unit_l_inv_arrow(a: Layout) -> Arrow:
    return Arrow(a, SubstituteLayout(UNIT, a), lambda x: (0, (x,)), lambda x, d: d[1], name="triUnitL^-1")


def tri_unit_r_arrow(a: Layout) -> Arrow:
    """a ◁ y → a."""
    return Arrow(SubstituteLayout(a, UNIT), a, lambda p: p[0], lambda p, d: (d, 0), name="triUnitR")


def tri_unit_r_inv_arrow(a: Layout) -> Arrow:
    return Arrow(
        a,
        SubstituteLayout(a, UNIT),
        lambda x: (x, (0,) * a.card(x)),
        lambda x, d: d[0],
        name="triUnitR^-1",
    )


def tri_assoc_arrow(a: Layout, b: Layout, c: Layout) -> Arrow:
    """(a ◁ b) ◁ c → a ◁ (b ◁ c)."""

    def forward(position):
        (x, w), v = position
        grouped = []
        offset = 0
        for wd in w:
            width = b.card(wd)
            grouped.append((wd, v[offset:offset + width]))
            offset += width
        return (x, tuple(grouped))

    def backward(position, direction):
        d, (e, f) = direction
        return ((d, e), f)

    return Arrow(
        SubstituteLayout(SubstituteLayout(a, b), c),
        SubstituteLayout(a, SubstituteLayout(b, c)),
        forward,
        backward,
        name="triAssoc",
    )


def tri_assoc_inv_arrow(a: Layout, b: Layout, c: Layout) -> Arrow:
    def forward(position):
        x, u = position
        return ((x, tuple(inner for inner, _ in u)), tuple(z for _, v in u for z in v))

    def backward(position, direction):
        (d, e), f = direction
        return (d, (e, f))

    return Arrow(
        SubstituteLayout(a, SubstituteLayout(b, c)),
        SubstituteLayout(SubstituteLayout(a, b), c),
        forward,
        backward,
        name="triAssoc^-1",
    )


def _plain(*polys: Polynomial) -> Tuple[PlainLayout, ...]:
    return tuple(PlainLayout(p) for p in polys)


def tensor_unit_l(p: Polynomial) -> PolyMap:
    return tensor_unit_l_arrow(PlainLayout(p)).tabulate()


def tensor_unit_r(p: Polynomial) -> PolyMap:
    return tensor_unit_r_arrow(PlainLayout(p)).tabulate()


def tensor_sym(p: Polynomial, q: Polynomial) -> PolyMap:
    return tensor_sym_arrow(*_plain(p, q)).tabulate()


def tensor_assoc(p: Polynomial, q: Polynomial, r: Polynomial) -> PolyMap:
    return tensor_assoc_arrow(*_plain(p, q, r)).tabulate()


def tri_unit_l(p: Polynomial) -> PolyMap:
    return tri_unit_l_arrow(PlainLayout(p)).tabulate()


def tri_unit_r(p: Polynomial) -> PolyMap:
    return tri_unit_r_arrow(PlainLayout(p)).tabulate()


def tri_assoc(p: Polynomial, q: Polynomial, r: Polynomial) -> PolyMap:
    return tri_assoc_arrow(*_plain(p, q, r)).tabulate()


# Duoidal interchange and the distributors


def duoidal_arrow(p1: Layout, p2: Layout, q1: Layout, q2: Layout) -> Arrow:
    """
    (p1 ◁ p2) ⊗ (q1 ◁ q2) → (p1 ⊗ q1) ◁ (p2 ⊗ q2).

    ((P1, w1), (Q1, w2)) goes to ((P1, Q1), (d, e) ↦ (w1(d), w2(e))).
    """

    def forward(position):
        (x1, w1), (z1, w2) = position
        return ((x1, z1), tuple((a, b) for a in w1 for b in w2))

    def backward(position, direction):
        (d, e), (s, t) = direction
        return ((d, s), (e, t))

    return Arrow(
        TensorLayout(SubstituteLayout(p1, p2), SubstituteLayout(q1, q2)),
        SubstituteLayout(TensorLayout(p1, q1), TensorLayout(p2, q2)),
        forward,
        backward,
        name="duoidal",
    )


def dist_l_arrow(a: Layout, b: Layout, c: Layout) -> Arrow:
    """a ⊗ (b ◁ c) → (a ⊗ b) ◁ c, as unit-intro ; duoidal ; unit-elim."""
    return (
        tensor_arrow(tri_unit_r_inv_arrow(a), identity_arrow(SubstituteLayout(b, c)))
        .then(duoidal_arrow(a, UNIT, b, c))
        .then(substitute_arrow(identity_arrow(TensorLayout(a, b)), tensor_unit_l_arrow(c)))
    )


def dist_r_arrow(b: Layout, c: Layout, a: Layout) -> Arrow:
    """(b ◁ c) ⊗ a → b ◁ (c ⊗ a), mirror of dist_l_arrow."""
    return (
        tensor_arrow(identity_arrow(SubstituteLayout(b, c)), tri_unit_l_inv_arrow(a))
        .then(duoidal_arrow(b, c, UNIT, a))
        .then(substitute_arrow(tensor_unit_r_arrow(b), identity_arrow(TensorLayout(c, a))))
    )


def perm_dist_lr_arrow(a: Layout, b: Layout, c: Layout) -> Arrow:
    """a ⊗ (b ◁ c) → b ◁ (a ⊗ c), as sym ; dist_r ; b ◁ sym."""
    return (
        tensor_sym_arrow(a, SubstituteLayout(b, c))
        .then(dist_r_arrow(b, c, a))
        .then(substitute_arrow(identity_arrow(b), tensor_sym_arrow(c, a)))
    )


def perm_dist_rl_arrow(b: Layout, c: Layout, a: Layout) -> Arrow:
    """(b ◁ c) ⊗ a → (b ⊗ a) ◁ c, as sym ; dist_l ; sym ◁ c."""
    return (
        tensor_sym_arrow(SubstituteLayout(b, c), a)
        .then(dist_l_arrow(a, b, c))
        .then(substitute_arrow(tensor_sym_arrow(a, b), identity_arrow(c)))
    )


def duoidal(p1: Polynomial, p2: Polynomial, q1: Polynomial, q2: Polynomial) -> PolyMap:
    return duoidal_arrow(*_plain(p1, p2, q1, q2)).tabulate()


def dist_l(a: Polynomial, b: Polynomial, c: Polynomial) -> PolyMap:
    return dist_l_arrow(*_plain(a, b, c)).tabulate()


def dist_r(b: Polynomial, c: Polynomial, a: Polynomial) -> PolyMap:
    return dist_r_arrow(*_plain(b, c, a)).tabulate()


def perm_dist_lr(a: Polynomial, b: Polynomial, c: Polynomial) -> PolyMap:
    return perm_dist_lr_arrow(*_plain(a, b, c)).tabulate()


def perm_dist_rl(b: Polynomial, c: Polynomial, a: Polynomial) -> PolyMap:
    return perm_dist_rl_arrow(*_plain(b, c, a)).tabulate()


# Mix and indep


def mix_arrow() -> Arrow:
    return identity_arrow(UNIT)


def mix_map() -> PolyMap:
    """The mix map y → y is the identity."""
    return mix_arrow().tabulate()


def indep_arrow(a: Layout, b: Layout) -> Arrow:
    """a ⊗ b → a ◁ b: (P, Q) ↦ (P, constant Q), directions unchanged."""
    return Arrow(
        TensorLayout(a, b),
        SubstituteLayout(a, b),
        lambda p: (p[0], (p[1],) * a.card(p[0])),
        lambda p, d: d,
        name="indep",
    )


def indep(p: Polynomial, q: Polynomial) -> PolyMap:
    return indep_arrow(*_plain(p, q)).tabulate()


def indep_via_mix_arrow(a: Layout, b: Layout, leg: str = "left") -> Arrow:
    """
    One of the two composites through the mix map that must agree with indep.

    The left leg inserts y ◁ b and uses dist_l; the right leg inserts a ◁ y
    and uses dist_r.
    """
    if leg == "left":
        return (
            tensor_arrow(identity_arrow(a), tri_unit_l_inv_arrow(b))
            .then(tensor_arrow(identity_arrow(a), substitute_arrow(mix_arrow(), identity_arrow(b))))
            .then(dist_l_arrow(a, UNIT, b))
            .then(substitute_arrow(tensor_unit_r_arrow(a), identity_arrow(b)))
        )
    if leg == "right":
        return (
            tensor_arrow(tri_unit_r_inv_arrow(a), identity_arrow(b))
            .then(dist_r_arrow(a, UNIT, b))
            .then(substitute_arrow(identity_arrow(a), tensor_arrow(mix_arrow(), identity_arrow(b))))
            .then(substitute_arrow(identity_arrow(a), tensor_unit_l_arrow(b)))
        )
    raise ValueError(f"Unknown leg '{leg}', expected 'left' or 'right'")


def indep_via_mix(p: Polynomial, q: Polynomial, leg: str = "left") -> PolyMap:
    return indep_via_mix_arrow(PlainLayout(p), PlainLayout(q), leg).tabulate()


def normality_arrow() -> Arrow:
    """k: y → y ⊗ y → (y ◁ y) ⊗ (y ◁ y) → (y ⊗ y) ◁ (y ⊗ y) → y ◁ y → y."""
    return (
        tensor_unit_l_inv_arrow(UNIT)
        .then(tensor_arrow(tri_unit_r_inv_arrow(UNIT), tri_unit_l_inv_arrow(UNIT)))
        .then(duoidal_arrow(UNIT, UNIT, UNIT, UNIT))
        .then(substitute_arrow(tensor_unit_r_arrow(UNIT), tensor_unit_l_arrow(UNIT)))
        .then(tri_unit_l_arrow(UNIT))
    )


def normality_map() -> PolyMap:
    return normality_arrow().tabulate()


def middle_swap_arrow(c: Layout) -> Arrow:
    """(c ⊗ c) ⊗ (c ⊗ c) → (c ⊗ c) ⊗ (c ⊗ c) exchanging the two middle factors."""
    cc = TensorLayout(c, c)
    return (
        tensor_assoc_inv_arrow(cc, c, c)
        .then(tensor_arrow(tensor_assoc_arrow(c, c, c), identity_arrow(c)))
        .then(tensor_arrow(tensor_arrow(identity_arrow(c), tensor_sym_arrow(c, c)), identity_arrow(c)))
        .then(tensor_arrow(tensor_assoc_inv_arrow(c, c, c), identity_arrow(c)))
        .then(tensor_assoc_arrow(cc, c, c))
    )


def middle_swap(c: Polynomial) -> PolyMap:
    return middle_swap_arrow(PlainLayout(c)).tabulate()


# Day convolution


def day_map(p: Polynomial, q: Polynomial, left: SetLike, right: SetLike) -> Tuple[int, ...]:
    """
    The comparison p(A) × q(B) → (p ⊗ q)(A × B).

    Pairs are indexed i * |q(B)| + j and elements of A × B as a * |B| + b.
    """
    a, b = as_size(left), as_size(right)
    target = {element: index for index, element in enumerate(evaluate_elements(tensor(p, q), a * b))}
    table = []
    for P, xs in evaluate_elements(p, a):
        for Q, zs in evaluate_elements(q, b):
            values = tuple(x * b + z for x in xs for z in zs)
            table.append(target[(P * q.num_positions + Q, values)])
    logger.debug(f"Day map for {p} and {q} at sizes {a}, {b} has {len(table)} entries")
    return tuple(table)
