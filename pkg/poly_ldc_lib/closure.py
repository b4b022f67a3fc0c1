# poly_ldc_lib/closure.py
"""
Internal hom [p, q] for ⊗ and the coclosure of p over q for ◁, with the
eval/coeval maps and both adjunction transposes.
"""

from .errors import DomainMismatch
from .layout import (
    Arrow,
    CloseLayout,
    CocloseLayout,
    Layout,
    PlainLayout,
    SubstituteLayout,
    TensorLayout,
    identity_arrow,
    lift,
)
from .monoidal import substitute, substitute_arrow, substitute_map, tensor, tensor_arrow, tensor_map
from .polycore import PolyMap, Polynomial, compose, identity


def close(p: Polynomial, q: Polynomial) -> Polynomial:
    """[p, q]: positions assign to each P a pair (Q, f: q[Q] → p[P])."""
    return CloseLayout(PlainLayout(p), PlainLayout(q)).polynomial()


def coclose(p: Polynomial, q: Polynomial) -> Polynomial:
    """p over q: the positions of p, with directions q evaluated at p[P]."""
    return CocloseLayout(PlainLayout(p), PlainLayout(q)).polynomial()


def eval_arrow(p: Layout, b: Layout) -> Arrow:
    """
    ev: p ⊗ [p, b] → b.

    (P, φ) goes to the Q chosen by φ at P; a direction e of b[Q] goes back
    to (f(e), (P, e)) where f is the direction map φ chose at P.
    """
    index = p.position_index()

    def forward(position):
        x, phi = position
        return phi[index[x]][0]

    def backward(position, e):
        x, phi = position
        z, f = phi[index[x]]
        return (f[b.direction_index(z)[e]], (x, e))

    return Arrow(TensorLayout(p, CloseLayout(p, b)), b, forward, backward, name="ev")


def coeval_arrow(p: Layout, q: Layout) -> Arrow:
    """
    coev: p → (p over q) ◁ q.

    P goes to (P, (Q, f) ↦ Q); a direction ((Q, f), e) goes back to f(e).
    """
    coclosure = CocloseLayout(p, q)

    def forward(x):
        return (x, tuple(z for z, _ in coclosure.directions(x)))

    def backward(x, direction):
        (z, f), e = direction
        return f[q.direction_index(z)[e]]

    return Arrow(p, SubstituteLayout(coclosure, q), forward, backward, name="coev")


def eval_map(p: Polynomial, b: Polynomial) -> PolyMap:
    return eval_arrow(PlainLayout(p), PlainLayout(b)).tabulate()


def coeval_map(p: Polynomial, q: Polynomial) -> PolyMap:
    return coeval_arrow(PlainLayout(p), PlainLayout(q)).tabulate()


def curry(f: PolyMap, p: Polynomial, r: Polynomial) -> PolyMap:
    """
    Transpose f: p ⊗ r → b into r → [p, b].

    Args:
        f (PolyMap): A map out of tensor(p, r).
        p (Polynomial): The factor that moves into the closure.
        r (Polynomial): The remaining factor.

    Returns:
        PolyMap: The unique g with uncurry(g, p, b) == f.
    """
    if f.dom != tensor(p, r):
        raise DomainMismatch(f"curry expects a map out of {tensor(p, r)}, got one out of {f.dom}", f.dom, tensor(p, r))
    source, rest, target = PlainLayout(p), PlainLayout(r), PlainLayout(f.cod)
    arrow = lift(f, dom=TensorLayout(source, rest))

    def forward(z):
        choices = []
        for x in source.positions():
            image = arrow.forward((x, z))
            choices.append((image, tuple(arrow.backward((x, z), e)[0] for e in target.directions(image))))
        return tuple(choices)

    def backward(z, direction):
        x, e = direction
        return arrow.backward((x, z), e)[1]

    return Arrow(rest, CloseLayout(source, target), forward, backward, name="curry").tabulate()


def uncurry(g: PolyMap, p: Polynomial, b: Polynomial) -> PolyMap:
    """(id_p ⊗ g) ; ev."""
    if g.cod != close(p, b):
        raise DomainMismatch(f"uncurry expects a map into {close(p, b)}, got one into {g.cod}", g.cod, close(p, b))
    source, target = PlainLayout(p), PlainLayout(b)
    g_arrow = lift(g, cod=CloseLayout(source, target))
    return tensor_arrow(identity_arrow(source), g_arrow).then(eval_arrow(source, target)).tabulate()


def cocurry(g: PolyMap, r: Polynomial, q: Polynomial) -> PolyMap:
    """
    Transpose g: p → r ◁ q into (p over q) → r.

    A direction s of r at the image goes to (Q, f) where Q is the inner
    position g picked for s and f collects g's backward map on (s, -).
    """
    if g.cod != substitute(r, q):
        raise DomainMismatch(f"cocurry expects a map into {substitute(r, q)}, got one into {g.cod}", g.cod, substitute(r, q))
    source, outer, inner = PlainLayout(g.dom), PlainLayout(r), PlainLayout(q)
    arrow = lift(g, cod=SubstituteLayout(outer, inner))

    def forward(x):
        return arrow.forward(x)[0]

    def backward(x, s):
        _, w = arrow.forward(x)
        z = w[s]
        return (z, tuple(arrow.backward(x, (s, e)) for e in inner.directions(z)))

    return Arrow(CocloseLayout(source, inner), outer, forward, backward, name="cocurry").tabulate()


def uncocurry(h: PolyMap, p: Polynomial, q: Polynomial) -> PolyMap:
    """coev ; (h ◁ id_q)."""
    if h.dom != coclose(p, q):
        raise DomainMismatch(f"uncocurry expects a map out of {coclose(p, q)}, got one out of {h.dom}", h.dom, coclose(p, q))
    source, inner = PlainLayout(p), PlainLayout(q)
    h_arrow = lift(h, dom=CocloseLayout(source, inner))
    return coeval_arrow(source, inner).then(substitute_arrow(h_arrow, identity_arrow(inner))).tabulate()


def close_map(f: PolyMap, g: PolyMap) -> PolyMap:
    """
    [f, g]: [p, q] → [p', q'] for f: p' → p and g: q → q'.

    Contravariant in the first argument.
    """
    p, p2 = f.cod, f.dom
    q = g.dom
    hom = close(p, q)
    transposed = compose(tensor_map(f, identity(hom)), eval_map(p, q), g)
    return curry(transposed, p2, hom)


def coclose_map(f: PolyMap, g: PolyMap) -> PolyMap:
    """
    (f over g): (p over q) → (p' over q') for f: p → p' and g: q' → q.

    Contravariant in the second argument.
    """
    p2 = f.cod
    q, q2 = g.cod, g.dom
    target = coclose(p2, q2)
    transposed = compose(f, coeval_map(p2, q2), substitute_map(identity(target), g))
    return cocurry(transposed, target, q)
