# poly_ldc_lib/layout.py
"""
Structured elements of constructed polynomials, and maps between them.

A Layout enumerates the positions of a polynomial built from other
polynomials (pairs for the Dirichlet product, dependent functions for
substitution and the closures) in canonical order, and lists the directions
at any single position without listing every position. Integer indices of
the built polynomial are the places of these elements in that order.

An Arrow is a map between layouts given by forward and backward functions on
structured elements. Composites of arrows are evaluated pointwise, so a long
chain can pass through objects far too large to tabulate; only the domain and
codomain are enumerated when the chain is turned into a PolyMap.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Hashable, Iterator, Optional, Tuple

from .config import bounded_power, bounded_product, check_size
from .errors import DomainMismatch
from .polycore import PolyMap, Polynomial, Y

Element = Hashable


class Layout:
    """Base class; concrete layouts are frozen dataclasses."""

    def count(self) -> int:
        raise NotImplementedError

    def _iter_positions(self) -> Iterator[Element]:
        raise NotImplementedError

    def _iter_directions(self, position: Element) -> Iterator[Element]:
        raise NotImplementedError

    def card(self, position: Element) -> int:
        """Number of directions at a position, computed without listing them."""
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def _cache(self, name: str) -> Dict:
        return self.__dict__.setdefault(name, {})

    def positions(self) -> Tuple[Element, ...]:
        cache = self._cache("_memo")
        if "positions" not in cache:
            check_size(self.count(), f"positions of {self.describe()}")
            cache["positions"] = tuple(self._iter_positions())
        return cache["positions"]

    def position_index(self) -> Dict[Element, int]:
        cache = self._cache("_memo")
        if "position_index" not in cache:
            cache["position_index"] = {x: i for i, x in enumerate(self.positions())}
        return cache["position_index"]

    def directions(self, position: Element) -> Tuple[Element, ...]:
        cache = self._cache("_directions")
        if position not in cache:
            check_size(self.card(position), f"directions of {self.describe()}")
            cache[position] = tuple(self._iter_directions(position))
        return cache[position]

    def direction_index(self, position: Element) -> Dict[Element, int]:
        cache = self._cache("_direction_index")
        if position not in cache:
            cache[position] = {d: i for i, d in enumerate(self.directions(position))}
        return cache[position]

    def polynomial(self) -> Polynomial:
        cache = self._cache("_memo")
        if "polynomial" not in cache:
            cards = []
            total = 0
            for x in self.positions():
                cards.append(self.card(x))
                total += cards[-1]
                check_size(total, f"directions of {self.describe()}")
            cards = tuple(cards)
            cache["polynomial"] = Polynomial(cards)
        return cache["polynomial"]


@dataclass(frozen=True)
class PlainLayout(Layout):
    poly: Polynomial

    def count(self) -> int:
        return self.poly.num_positions

    def _iter_positions(self) -> Iterator[int]:
        return iter(self.poly.positions())

    def _iter_directions(self, position: int) -> Iterator[int]:
        return iter(self.poly.directions(position))

    def card(self, position: int) -> int:
        return self.poly.card(position)

    def polynomial(self) -> Polynomial:
        return self.poly

    def describe(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class TensorLayout(Layout):
    """Positions (P, Q) p-major; directions (d, e) at (P, Q)."""

    left: Layout
    right: Layout

    def count(self) -> int:
        return self.left.count() * self.right.count()

    def _iter_positions(self) -> Iterator[Tuple[Element, Element]]:
        return product(self.left.positions(), self.right.positions())

    def _iter_directions(self, position: Tuple[Element, Element]) -> Iterator[Tuple[Element, Element]]:
        x, z = position
        return product(self.left.directions(x), self.right.directions(z))

    def card(self, position: Tuple[Element, Element]) -> int:
        x, z = position
        return self.left.card(x) * self.right.card(z)

    def describe(self) -> str:
        return f"({self.left.describe()} @ {self.right.describe()})"


@dataclass(frozen=True)
class SubstituteLayout(Layout):
    """
    Positions (P, w) with w a tuple of inner positions aligned with the
    directions of P; directions (d, e) with e a direction of the inner
    position w(d), d-major.
    """

    outer: Layout
    inner: Layout

    def count(self) -> int:
        inner_count = self.inner.count()
        return sum(bounded_power(inner_count, self.outer.card(x)) for x in self.outer.positions())

    def card(self, position) -> int:
        _, w = position
        return sum(self.inner.card(wd) for wd in w)

    def _iter_positions(self) -> Iterator[Tuple[Element, Tuple[Element, ...]]]:
        inner_positions = self.inner.positions()
        for x in self.outer.positions():
            check_size(self.outer.card(x), f"positions of {self.describe()}")
            for w in product(inner_positions, repeat=self.outer.card(x)):
                yield (x, w)

    def _iter_directions(self, position):
        x, w = position
        for d, wd in zip(self.outer.directions(x), w):
            for e in self.inner.directions(wd):
                yield (d, e)

    def describe(self) -> str:
        return f"({self.outer.describe()} <| {self.inner.describe()})"


@dataclass(frozen=True)
class CloseLayout(Layout):
    """
    The internal hom [source, target].

    A position is a tuple, aligned with the positions of source, of pairs
    (Q, f) where f is a tuple aligned with the directions of Q naming
    directions of source. Directions are pairs (P, e), P-major.
    """

    source: Layout
    target: Layout

    def _choices(self, x: Element):
        source_directions = self.source.directions(x)
        for z in self.target.positions():
            check_size(self.target.card(z), f"positions of {self.describe()}")
        return [
            (z, f)
            for z in self.target.positions()
            for f in product(source_directions, repeat=self.target.card(z))
        ]

    def count(self) -> int:
        target_cards = [self.target.card(z) for z in self.target.positions()]
        return bounded_product(
            sum(bounded_power(self.source.card(x), card) for card in target_cards)
            for x in self.source.positions()
        )

    def card(self, position) -> int:
        return sum(self.target.card(z) for z, _ in position)

    def _iter_positions(self):
        if self.count() == 0:
            return iter(())
        return product(*(self._choices(x) for x in self.source.positions()))

    def _iter_directions(self, position):
        for x, (z, _) in zip(self.source.positions(), position):
            for e in self.target.directions(z):
                yield (x, e)

    def describe(self) -> str:
        return f"close({self.source.describe()}, {self.target.describe()})"


@dataclass(frozen=True)
class CocloseLayout(Layout):
    """
    The coclosure of source over target: the positions of source, with the
    directions at P being the elements (Q, f) of target evaluated at source[P].
    """

    source: Layout
    target: Layout

    def count(self) -> int:
        return self.source.count()

    def _iter_positions(self):
        return iter(self.source.positions())

    def card(self, position) -> int:
        size = self.source.card(position)
        return sum(bounded_power(size, self.target.card(z)) for z in self.target.positions())

    def _iter_directions(self, position):
        source_directions = self.source.directions(position)
        for z in self.target.positions():
            check_size(self.target.card(z), f"directions of {self.describe()}")
            for f in product(source_directions, repeat=self.target.card(z)):
                yield (z, f)

    def describe(self) -> str:
        return f"coclose({self.source.describe()}, {self.target.describe()})"


UNIT = PlainLayout(Y)


def plain(p: Polynomial) -> PlainLayout:
    return PlainLayout(p)


@dataclass(frozen=True)
class Arrow:
    """A map between layouts, evaluated pointwise."""

    dom: Layout
    cod: Layout
    forward: Callable[[Element], Element] = field(compare=False)
    backward: Callable[[Element, Element], Element] = field(compare=False)
    name: str = field(default="", compare=False)

    def then(self, other: "Arrow") -> "Arrow":
        """Diagrammatic composite: self followed by other."""
        if self.cod != other.dom:
            raise DomainMismatch(
                f"Cannot compose {self.name or 'arrow'} into {self.cod.describe()} "
                f"with {other.name or 'arrow'} out of {other.dom.describe()}",
                self.cod, other.dom,
            )
        f, g = self, other

        def forward(x):
            return g.forward(f.forward(x))

        def backward(x, e):
            return f.backward(x, g.backward(f.forward(x), e))

        return Arrow(f.dom, g.cod, forward, backward, name=f"{f.name} ; {g.name}")

    def forward_table(self) -> Tuple[int, ...]:
        index = self.cod.position_index()
        return tuple(index[self.forward(x)] for x in self.dom.positions())

    def tabulate(self) -> PolyMap:
        """Enumerate domain positions and codomain directions into a PolyMap."""
        cod_index = self.cod.position_index()
        forward_table = []
        backward_tables = []
        entries = 0
        for x in self.dom.positions():
            target = self.forward(x)
            if target not in cod_index:
                raise DomainMismatch(f"{self.name} sends {x!r} to {target!r}, not a position of {self.cod.describe()}")
            forward_table.append(cod_index[target])
            dom_directions = self.dom.direction_index(x)
            cod_directions = self.cod.directions(target)
            entries += len(cod_directions)
            check_size(entries, f"backward tables of {self.name or 'a composite'}")
            backward_tables.append(tuple(dom_directions[self.backward(x, e)] for e in cod_directions))
        return PolyMap(self.dom.polynomial(), self.cod.polynomial(), tuple(forward_table), tuple(backward_tables))


def identity_arrow(layout: Layout) -> Arrow:
    return Arrow(layout, layout, lambda x: x, lambda x, e: e, name="id")


def lift(f: PolyMap, dom: Optional[Layout] = None, cod: Optional[Layout] = None, name: str = "") -> Arrow:
    """
    View a tabulated map as an arrow between layouts of its domain and codomain.

    Raises:
        DomainMismatch: when a layout does not build the polynomial of that end.
    """
    dom = dom if dom is not None else PlainLayout(f.dom)
    cod = cod if cod is not None else PlainLayout(f.cod)
    if dom.polynomial() != f.dom or cod.polynomial() != f.cod:
        raise DomainMismatch(
            f"Layouts {dom.describe()} -> {cod.describe()} do not match {f.dom} -> {f.cod}", f.dom, f.cod
        )
    dom_plain = isinstance(dom, PlainLayout)
    cod_plain = isinstance(cod, PlainLayout)

    def forward(x):
        i = x if dom_plain else dom.position_index()[x]
        j = f.on_positions[i]
        return j if cod_plain else cod.positions()[j]

    def backward(x, e):
        i = x if dom_plain else dom.position_index()[x]
        j = f.on_positions[i]
        e_index = e if cod_plain else cod.direction_index(cod.positions()[j])[e]
        d_index = f.on_directions[i][e_index]
        return d_index if dom_plain else dom.directions(x)[d_index]

    return Arrow(dom, cod, forward, backward, name=name or f"map {f.dom} -> {f.cod}")


def to_plain(layout: Layout) -> Arrow:
    """Structured elements to their indices in the built polynomial."""
    target = PlainLayout(layout.polynomial())
    return Arrow(
        layout,
        target,
        lambda x: layout.position_index()[x],
        lambda x, e: layout.directions(x)[e],
        name=f"index {layout.describe()}",
    )


def from_plain(layout: Layout) -> Arrow:
    """Indices of the built polynomial to structured elements."""
    source = PlainLayout(layout.polynomial())
    return Arrow(
        source,
        layout,
        lambda i: layout.positions()[i],
        lambda i, d: layout.direction_index(layout.positions()[i])[d],
        name=f"unindex {layout.describe()}",
    )
