# poly_ldc_lib/polycore.py

from dataclasses import dataclass, field
from itertools import product
from math import prod
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .config import check_size
from .errors import DomainMismatch
from .logger import logger
from .models import Counterexample, LawReport

SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


@dataclass(frozen=True)
class FiniteSet:
    """A finite set {0, ..., size-1}, optionally with display labels."""

    size: int
    labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.size < 0:
            raise ValueError(f"FiniteSet size must be non-negative, got {self.size}")
        if self.labels is not None and len(self.labels) != self.size:
            raise ValueError(f"FiniteSet of size {self.size} got {len(self.labels)} labels")

    def __len__(self) -> int:
        return self.size

    def elements(self) -> range:
        return range(self.size)

    def label(self, element: int) -> str:
        return self.labels[element] if self.labels is not None else str(element)


SetLike = Union[int, FiniteSet]


def as_size(carrier: SetLike) -> int:
    if isinstance(carrier, FiniteSet):
        return carrier.size
    if carrier < 0:
        raise ValueError(f"Set size must be non-negative, got {carrier}")
    return int(carrier)


@dataclass(frozen=True)
class Polynomial:
    """
    A finite polynomial functor Σ_P y^{p[P]}.

    Positions are 0..n-1 in order and the directions at P are 0..card(P)-1.
    Two polynomials are equal exactly when their ordered cardinality lists
    agree; labels are for display only.
    """

    cards: Tuple[int, ...]
    position_labels: Optional[Tuple[str, ...]] = field(default=None, compare=False)
    direction_labels: Optional[Tuple[Tuple[str, ...], ...]] = field(default=None, compare=False)

    def __post_init__(self):
        cards = tuple(int(card) for card in self.cards)
        if any(card < 0 for card in cards):
            raise ValueError(f"Direction counts must be non-negative, got {list(cards)}")
        object.__setattr__(self, "cards", cards)
        if self.position_labels is not None and len(self.position_labels) != len(cards):
            raise ValueError(f"Expected {len(cards)} position labels, got {len(self.position_labels)}")
        if self.direction_labels is not None:
            if [len(labels) for labels in self.direction_labels] != list(cards):
                raise ValueError("Direction labels do not match the direction counts")

    @property
    def num_positions(self) -> int:
        return len(self.cards)

    def card(self, position: int) -> int:
        return self.cards[position]

    def positions(self) -> range:
        return range(len(self.cards))

    def directions(self, position: int) -> range:
        return range(self.cards[position])

    def is_linear(self) -> bool:
        return all(card == 1 for card in self.cards)

    def is_representable(self) -> bool:
        return len(self.cards) == 1

    def position_label(self, position: int) -> str:
        if self.position_labels is not None:
            return self.position_labels[position]
        return str(position)

    def __str__(self) -> str:
        return format_polynomial(self)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"positions": list(self.cards)}
        if self.position_labels is not None or self.direction_labels is not None:
            labels: Dict[str, Any] = {}
            if self.position_labels is not None:
                labels["positions"] = list(self.position_labels)
            if self.direction_labels is not None:
                labels["directions"] = [list(names) for names in self.direction_labels]
            data["labels"] = labels
        return data

    @staticmethod
    def from_json(data: Dict[str, Any]) -> "Polynomial":
        if "positions" not in data:
            raise ValueError("Polynomial JSON needs a 'positions' list")
        labels = data.get("labels") or {}
        position_labels = labels.get("positions")
        direction_labels = labels.get("directions")
        return Polynomial(
            tuple(data["positions"]),
            position_labels=tuple(position_labels) if position_labels is not None else None,
            direction_labels=tuple(tuple(names) for names in direction_labels) if direction_labels is not None else None,
        )


def _format_term(count: int, exponent: int, unicode: bool) -> str:
    if exponent == 0:
        return str(count)
    power = "y" if exponent == 1 else ("y" + str(exponent).translate(SUPERSCRIPTS) if unicode else f"y^{exponent}")
    return power if count == 1 else f"{count}{power}"


def format_polynomial(p: Polynomial, unicode: bool = False) -> str:
    """
    Literal notation, grouping runs of equal direction counts.

    [2, 2, 2, 1, 0, 0] prints as `3y^2 + y + 2`; the empty polynomial prints as `0`.
    """
    if not p.cards:
        return "0"
    terms = []
    run_card, run_length = p.cards[0], 0
    for card in p.cards:
        if card == run_card:
            run_length += 1
        else:
            terms.append(_format_term(run_length, run_card, unicode))
            run_card, run_length = card, 1
    terms.append(_format_term(run_length, run_card, unicode))
    return " + ".join(terms)


def format_forest(p: Polynomial) -> List[str]:
    """ASCII corollas: one line per position, one tick per direction."""
    width = len(str(max(p.num_positions - 1, 0)))
    return [f"{p.position_label(P).rjust(width)} o{'-' if card else ''}{'|' * card}" for P, card in enumerate(p.cards)]


Y = Polynomial((1,))
ZERO = Polynomial(())
ONE = Polynomial((0,))


def linear(carrier: SetLike) -> Polynomial:
    return Polynomial((1,) * as_size(carrier))


def representable(carrier: SetLike) -> Polynomial:
    return Polynomial((as_size(carrier),))


def constant(carrier: SetLike) -> Polynomial:
    return Polynomial((0,) * as_size(carrier))


def monomial(count: int, exponent: int) -> Polynomial:
    return Polynomial((exponent,) * count)


def coproduct(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(p.cards + q.cards)


def is_shape_isomorphic(p: Polynomial, q: Polynomial) -> bool:
    """Isomorphic as functors: same multiset of direction counts."""
    return sorted(p.cards) == sorted(q.cards)


def bounded_polynomials(max_positions: int, max_directions: int) -> List[Polynomial]:
    """Every polynomial with at most the given numbers of positions and directions, fewest positions first."""
    family = []
    for n in range(max_positions + 1):
        for cards in product(range(max_directions + 1), repeat=n):
            family.append(Polynomial(cards))
    return family


@dataclass(frozen=True)
class PolyMap:
    """
    A map of polynomials p → q.

    `on_positions[P]` is the image of position P; `on_directions[P][e]` sends
    a direction e of q at that image back to a direction of p at P.
    """

    dom: Polynomial
    cod: Polynomial
    on_positions: Tuple[int, ...]
    on_directions: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "on_positions", tuple(self.on_positions))
        object.__setattr__(self, "on_directions", tuple(tuple(table) for table in self.on_directions))
        if len(self.on_positions) != self.dom.num_positions:
            raise DomainMismatch(
                f"Forward table has {len(self.on_positions)} entries for {self.dom.num_positions} positions of {self.dom}",
                self.dom, self.cod,
            )
        if len(self.on_directions) != self.dom.num_positions:
            raise DomainMismatch(f"Expected {self.dom.num_positions} backward tables, got {len(self.on_directions)}", self.dom, self.cod)
        for P, (Q, table) in enumerate(zip(self.on_positions, self.on_directions)):
            if not 0 <= Q < self.cod.num_positions:
                raise DomainMismatch(f"Position {P} is sent to {Q}, not a position of {self.cod}", self.dom, self.cod)
            if len(table) != self.cod.card(Q):
                raise DomainMismatch(
                    f"Backward table at {P} has {len(table)} entries, position {Q} of {self.cod} has {self.cod.card(Q)} directions",
                    self.dom, self.cod,
                )
            if any(not 0 <= d < self.dom.card(P) for d in table):
                raise DomainMismatch(f"Backward table at {P} leaves the {self.dom.card(P)} directions of {self.dom}", self.dom, self.cod)

    def forward(self, position: int) -> int:
        return self.on_positions[position]

    def backward(self, position: int, direction: int) -> int:
        return self.on_directions[position][direction]

    def to_json(self) -> Dict[str, Any]:
        return {
            "dom": self.dom.to_json(),
            "cod": self.cod.to_json(),
            "forward": list(self.on_positions),
            "backward": [list(table) for table in self.on_directions],
        }

    def __str__(self) -> str:
        rows = [f"{self.dom} -> {self.cod}"]
        for P, (Q, table) in enumerate(zip(self.on_positions, self.on_directions)):
            rows.append(f"  {P} |-> {Q}  back {list(table)}")
        return "\n".join(rows)


def identity(p: Polynomial) -> PolyMap:
    return PolyMap(p, p, tuple(p.positions()), tuple(tuple(p.directions(P)) for P in p.positions()))


def compose(first: PolyMap, *rest: PolyMap) -> PolyMap:
    """
    Diagrammatic composite: compose(f, g) is f followed by g.

    Raises:
        DomainMismatch: when a codomain differs from the next domain.
    """
    result = first
    for g in rest:
        f = result
        if f.cod != g.dom:
            raise DomainMismatch(f"Cannot compose {f.dom} -> {f.cod} with {g.dom} -> {g.cod}", f.cod, g.dom)
        forward = tuple(g.on_positions[Q] for Q in f.on_positions)
        backward = tuple(
            tuple(f.on_directions[P][d] for d in g.on_directions[Q])
            for P, Q in enumerate(f.on_positions)
        )
        result = PolyMap(f.dom, g.cod, forward, backward)
    return result


def equal_maps(f: PolyMap, g: PolyMap) -> bool:
    return f == g


def first_difference(lhs: PolyMap, rhs: PolyMap) -> Optional[Counterexample]:
    """The first (position, direction) where two maps disagree, or None."""
    if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
        return Counterexample((), (), f"{lhs.dom} -> {lhs.cod}", f"{rhs.dom} -> {rhs.cod}")
    for P in lhs.dom.positions():
        if lhs.on_positions[P] != rhs.on_positions[P]:
            return Counterexample((P,), (), f"position {lhs.on_positions[P]}", f"position {rhs.on_positions[P]}")
        for e, (d1, d2) in enumerate(zip(lhs.on_directions[P], rhs.on_directions[P])):
            if d1 != d2:
                return Counterexample((P,), (e,), f"direction {d1}", f"direction {d2}")
    return None


def compare_maps(law: str, lhs: PolyMap, rhs: PolyMap) -> LawReport:
    """Check an equation between two maps, recording the first disagreement."""
    counterexample = first_difference(lhs, rhs)
    stats = {
        "positions": lhs.dom.num_positions,
        "directions": sum(len(table) for table in lhs.on_directions),
    }
    if counterexample is not None:
        logger.debug(f"Law {law} fails at {counterexample}")
    return LawReport(law, counterexample is None, counterexample, stats)


def _is_bijection(table: Sequence[int], size: int) -> bool:
    return len(table) == size and sorted(table) == list(range(size))


def is_cartesian(f: PolyMap) -> bool:
    return all(_is_bijection(table, f.dom.card(P)) for P, table in enumerate(f.on_directions))


def is_iso(f: PolyMap) -> bool:
    return _is_bijection(f.on_positions, f.cod.num_positions) and is_cartesian(f)


def inverse(f: PolyMap) -> PolyMap:
    if not is_iso(f):
        raise DomainMismatch(f"Map {f.dom} -> {f.cod} is not an isomorphism", f.dom, f.cod)
    preimage = {Q: P for P, Q in enumerate(f.on_positions)}
    forward = tuple(preimage[Q] for Q in f.cod.positions())
    backward = []
    for Q in f.cod.positions():
        table = f.on_directions[preimage[Q]]
        undo = {d: e for e, d in enumerate(table)}
        backward.append(tuple(undo[d] for d in range(len(table))))
    return PolyMap(f.cod, f.dom, forward, tuple(backward))


def evaluate(p: Polynomial, carrier: SetLike) -> FiniteSet:
    """Cardinality of p(X) = Σ_P X^{p[P]}, with 0^0 = 1."""
    k = as_size(carrier)
    total = sum(k ** card for card in p.cards)
    check_size(total, f"{p} evaluated at a set of size {k}")
    return FiniteSet(total)


def evaluate_elements(p: Polynomial, carrier: SetLike) -> List[Tuple[int, Tuple[int, ...]]]:
    """Elements (P, x) of p(X), position-major and then mixed-radix over x: p[P] → X."""
    k = as_size(carrier)
    evaluate(p, k)
    return [(P, values) for P, card in enumerate(p.cards) for values in product(range(k), repeat=card)]


def evaluate_map(f: PolyMap, carrier: SetLike) -> Tuple[int, ...]:
    """
    The function p(X) → q(X) induced by f, as a table over the canonical element indices.

    An element (P, x) goes to (f(P), x ∘ f^♯_P).
    """
    k = as_size(carrier)
    target = {element: index for index, element in enumerate(evaluate_elements(f.cod, k))}
    table = []
    for P, values in evaluate_elements(f.dom, k):
        Q = f.on_positions[P]
        table.append(target[(Q, tuple(values[d] for d in f.on_directions[P]))])
    return tuple(table)


def gamma(p: Polynomial) -> FiniteSet:
    """Global sections: one direction chosen at every position."""
    total = prod(p.cards)
    check_size(total, f"global sections of {p}")
    return FiniteSet(total)


def gamma_elements(p: Polynomial) -> List[Tuple[int, ...]]:
    gamma(p)
    return list(product(*(range(card) for card in p.cards)))


def hom_count(p: Polynomial, q: Polynomial) -> int:
    """Closed form Π_P Σ_Q p[P]^{q[Q]} for the number of maps p → q."""
    return prod(sum(card_p ** card_q for card_q in q.cards) for card_p in p.cards)


def iter_homs(p: Polynomial, q: Polynomial) -> Iterator[PolyMap]:
    """Maps p → q in lexicographic order of (forward table, backward tables), lazily."""
    for forward in product(range(q.num_positions), repeat=p.num_positions):
        choices = [list(product(range(p.card(P)), repeat=q.card(Q))) for P, Q in enumerate(forward)]
        for backward in product(*choices):
            yield PolyMap(p, q, forward, backward)


def enumerate_homs(p: Polynomial, q: Polynomial) -> List[PolyMap]:
    total = hom_count(p, q)
    check_size(total, f"hom-set from {p} to {q}")
    homs = list(iter_homs(p, q))
    logger.debug(f"Enumerated {len(homs)} maps {p} -> {q}")
    return homs


def linear_map(function: Sequence[int], cod_size: int) -> PolyMap:
    """Image of a function A → B under A ↦ Ay."""
    for value in function:
        if not 0 <= value < cod_size:
            raise DomainMismatch(f"Function value {value} outside a set of size {cod_size}")
    return PolyMap(linear(len(function)), linear(cod_size), tuple(function), ((0,),) * len(function))


def representable_map(function: Sequence[int], cod_size: int) -> PolyMap:
    """Image of a function A → B under the contravariant A ↦ y^A, a map y^B → y^A."""
    for value in function:
        if not 0 <= value < cod_size:
            raise DomainMismatch(f"Function value {value} outside a set of size {cod_size}")
    return PolyMap(representable(cod_size), representable(len(function)), (0,), (tuple(function),))
