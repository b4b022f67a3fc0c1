# poly_ldc_lib/algebra.py
"""
Linear monoids, comonoids and bialgebras on the canonical duals My ⊣⊣ y^M.

A finite monoid M gives a ⊗-monoid on My and a ⊗-comonoid on y^M through
the strong monoidal functors A ↦ Ay and A ↦ y^A; diagonals give the other
two structures. Each ⊗-structure on one leg of the dual induces a
◁-structure on the other leg by taking mates across the dual pair.
"""

import json
from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from .duality import (
    DualityWitness,
    canonical_dual,
    comate_arrow,
    mate_arrow,
    substitute_dual,
    tensor_dual,
    unit_dual,
)
from .errors import DomainMismatch, InvalidMonoid, SizeCap
from .layout import UNIT, TensorLayout, lift
from .logger import logger
from .models import LawReport
from .monoidal import (
    middle_swap,
    substitute_map,
    tensor,
    tensor_assoc,
    tensor_map,
    tensor_unit_l,
    tensor_unit_r,
    tri_assoc,
    tri_unit_l,
    tri_unit_r,
)
from .polycore import PolyMap, Polynomial, Y, compare_maps, compose, identity, inverse, linear, representable

MAX_MONOID_ORDER = 4


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class FiniteMonoid:
    """
    Multiplication table on {0, ..., n-1} with a unit element.

    Raises:
        InvalidMonoid: when the table is not square, leaves the carrier,
        or breaks the unit or associativity laws.
    """

    table: Tuple[Tuple[int, ...], ...]
    unit: int

    def __post_init__(self):
        if not _is_int(self.unit):
            raise InvalidMonoid(f"Unit must be an integer, got {self.unit!r}")
        if not isinstance(self.table, (list, tuple)) or not all(isinstance(row, (list, tuple)) for row in self.table):
            raise InvalidMonoid("Multiplication table must be a list of rows")
        if not all(_is_int(v) for row in self.table for v in row):
            raise InvalidMonoid("Multiplication table entries must be integers")
        table = tuple(tuple(row) for row in self.table)
        object.__setattr__(self, "table", table)
        n = len(table)
        if n == 0:
            raise InvalidMonoid("A monoid needs at least one element")
        if any(len(row) != n for row in table):
            raise InvalidMonoid(f"Multiplication table must be {n}x{n}")
        if any(not 0 <= v < n for row in table for v in row):
            raise InvalidMonoid(f"Multiplication table leaves the carrier of size {n}")
        if not 0 <= self.unit < n:
            raise InvalidMonoid(f"Unit {self.unit} is not an element of a carrier of size {n}")
        e = self.unit
        for a in range(n):
            if table[e][a] != a or table[a][e] != a:
                raise InvalidMonoid(f"Unit law fails at {a}: e*a = {table[e][a]}, a*e = {table[a][e]}")
        for a, b, c in product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise InvalidMonoid(f"Associativity fails at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mult(self, a: int, b: int) -> int:
        return self.table[a][b]

    def flat_table(self) -> Tuple[int, ...]:
        """Products indexed a * n + b, the order of positions of My ⊗ My."""
        return tuple(v for row in self.table for v in row)

    def to_json(self) -> Dict[str, Any]:
        return {"order": self.order, "unit": self.unit, "table": [list(row) for row in self.table]}

    @staticmethod
    def from_json(data: Any) -> "FiniteMonoid":
        """
        Raises:
            InvalidMonoid: for anything but an object with an integer `order`
            and `unit` and a `table` of integer rows describing a monoid.
        """
        if not isinstance(data, dict):
            raise InvalidMonoid(f"Monoid JSON must be an object, got {type(data).__name__}")
        for key in ("order", "unit", "table"):
            if key not in data:
                raise InvalidMonoid(f"Monoid JSON is missing '{key}'")
        if not _is_int(data["order"]):
            raise InvalidMonoid(f"Order must be an integer, got {data['order']!r}")
        if not isinstance(data["table"], list):
            raise InvalidMonoid("Multiplication table must be a list of rows")
        if len(data["table"]) != data["order"]:
            raise InvalidMonoid(f"Declared order {data['order']} does not match a table with {len(data['table'])} rows")
        return FiniteMonoid(data["table"], data["unit"])

    @staticmethod
    def load(path: Union[str, Path]) -> "FiniteMonoid":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, UnicodeDecodeError, json.JSONDecodeError) as e:
            raise InvalidMonoid(f"Could not read monoid JSON from {path}: {e}")
        return FiniteMonoid.from_json(data)

    @staticmethod
    def cyclic(n: int) -> "FiniteMonoid":
        return FiniteMonoid(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)), 0)

    @staticmethod
    def trivial() -> "FiniteMonoid":
        return FiniteMonoid(((0,),), 0)


def _consistent(table: List[List[Optional[int]]], n: int) -> bool:
    for a, b, c in product(range(n), repeat=3):
        ab, bc = table[a][b], table[b][c]
        if ab is None or bc is None:
            continue
        left, right = table[ab][c], table[a][bc]
        if left is not None and right is not None and left != right:
            return False
    return True


def enumerate_monoids(n: int) -> List[FiniteMonoid]:
    """
    Every monoid table on {0, ..., n-1}, unit-major and then lexicographic in the table.

    Raises:
        SizeCap: for n above 4.
    """
    if n > MAX_MONOID_ORDER:
        raise SizeCap(n, MAX_MONOID_ORDER, "monoid carrier")
    if n < 1:
        return []
    found: List[FiniteMonoid] = []
    for e in range(n):
        table: List[List[Optional[int]]] = [[None] * n for _ in range(n)]
        for a in range(n):
            table[e][a] = a
            table[a][e] = a
        free = [(a, b) for a in range(n) for b in range(n) if table[a][b] is None]

        def fill(k: int) -> None:
            if k == len(free):
                found.append(FiniteMonoid(tuple(tuple(row) for row in table), e))
                return
            a, b = free[k]
            for v in range(n):
                table[a][b] = v
                if _consistent(table, n):
                    fill(k + 1)
            table[a][b] = None

        fill(0)
    logger.debug(f"Found {len(found)} monoid tables of order {n}")
    return found


# Structures


@dataclass(frozen=True)
class LinearMonoidStructure:
    """
    A ⊗-monoid on one leg of a dual pair.

    side "left": the monoid lives on the left leg My; "right": on y^M.
    """

    side: str
    duality: DualityWitness
    mult: PolyMap
    unit: PolyMap

    @property
    def carrier(self) -> Polynomial:
        return self.duality.left if self.side == "left" else self.duality.right


@dataclass(frozen=True)
class LinearComonoidStructure:
    side: str
    duality: DualityWitness
    comult: PolyMap
    counit: PolyMap

    @property
    def carrier(self) -> Polynomial:
        return self.duality.left if self.side == "left" else self.duality.right


@dataclass(frozen=True)
class LinearBialgebraStructure:
    side: str
    monoid: LinearMonoidStructure
    comonoid: LinearComonoidStructure

    @property
    def carrier(self) -> Polynomial:
        return self.monoid.carrier


def left_linear_monoid(m: FiniteMonoid) -> LinearMonoidStructure:
    """μ: My ⊗ My → My multiplies; ν: y → My picks the unit."""
    n = m.order
    b = linear(n)
    mult = PolyMap(tensor(b, b), b, m.flat_table(), ((0,),) * (n * n))
    unit = PolyMap(Y, b, (m.unit,), ((0,),))
    return LinearMonoidStructure("left", canonical_dual(n), mult, unit)


def right_linear_monoid(n: int) -> LinearMonoidStructure:
    """μ: y^A ⊗ y^A → y^A copies each direction; ν: y → y^A forgets."""
    a = representable(n)
    mult = PolyMap(tensor(a, a), a, (0,), (tuple(d * n + d for d in range(n)),))
    unit = PolyMap(Y, a, (0,), ((0,) * n,))
    return LinearMonoidStructure("right", canonical_dual(n), mult, unit)


def left_linear_comonoid(n: int) -> LinearComonoidStructure:
    """δ: Ay → Ay ⊗ Ay is the diagonal; γ: Ay → y."""
    b = linear(n)
    comult = PolyMap(b, tensor(b, b), tuple(x * n + x for x in range(n)), ((0,),) * n)
    counit = PolyMap(b, Y, (0,) * n, ((0,),) * n)
    return LinearComonoidStructure("left", canonical_dual(n), comult, counit)


def right_linear_comonoid(m: FiniteMonoid) -> LinearComonoidStructure:
    """δ: y^M → y^M ⊗ y^M multiplies directions; γ: y^M → y picks the unit direction."""
    n = m.order
    a = representable(n)
    comult = PolyMap(a, tensor(a, a), (0,), (m.flat_table(),))
    counit = PolyMap(a, Y, (0,), ((m.unit,),))
    return LinearComonoidStructure("right", canonical_dual(m.order), comult, counit)


def linear_bialgebra(m: FiniteMonoid, side: str = "left") -> LinearBialgebraStructure:
    if side == "left":
        return LinearBialgebraStructure("left", left_linear_monoid(m), left_linear_comonoid(m.order))
    if side == "right":
        return LinearBialgebraStructure("right", right_linear_monoid(m.order), right_linear_comonoid(m))
    raise ValueError(f"Unknown side '{side}', expected 'left' or 'right'")


# Induced ◁-structures


def induced_tri_comonoid(s: LinearMonoidStructure) -> Tuple[PolyMap, PolyMap]:
    """
    (δ◁, γ◁) on the leg opposite the monoid, as mates of (μ, ν).

    For the left structure the result lives on y^M, for the right one on My.
    """
    canonical = s.duality.linear_dual()
    if s.side == "left":
        B = canonical.left
        mu = lift(s.mult, dom=TensorLayout(B, B), cod=B, name="mu")
        nu = lift(s.unit, dom=UNIT, cod=B, name="nu")
        delta = mate_arrow(mu, tensor_dual(canonical, canonical), canonical)
        gamma = mate_arrow(nu, unit_dual(), canonical)
    else:
        A = canonical.right
        mu = lift(s.mult, dom=TensorLayout(A, A), cod=A, name="mu")
        nu = lift(s.unit, dom=UNIT, cod=A, name="nu")
        delta = comate_arrow(mu, canonical, substitute_dual(canonical, canonical))
        gamma = comate_arrow(nu, canonical, unit_dual())
    return delta.tabulate(), gamma.tabulate()


def induced_tri_monoid(s: LinearComonoidStructure) -> Tuple[PolyMap, PolyMap]:
    """(μ◁, ν◁) on the leg opposite the comonoid, as mates of (δ, γ)."""
    canonical = s.duality.linear_dual()
    if s.side == "left":
        B = canonical.left
        delta = lift(s.comult, dom=B, cod=TensorLayout(B, B), name="delta")
        gamma = lift(s.counit, dom=B, cod=UNIT, name="gamma")
        mu = mate_arrow(delta, canonical, tensor_dual(canonical, canonical))
        nu = mate_arrow(gamma, canonical, unit_dual())
    else:
        A = canonical.right
        delta = lift(s.comult, dom=A, cod=TensorLayout(A, A), name="delta")
        gamma = lift(s.counit, dom=A, cod=UNIT, name="gamma")
        mu = comate_arrow(delta, substitute_dual(canonical, canonical), canonical)
        nu = comate_arrow(gamma, unit_dual(), canonical)
    return mu.tabulate(), nu.tabulate()


# Laws


def monoid_laws(mult: PolyMap, unit: PolyMap, prefix: str = "monoid") -> LawReport:
    """Associativity and both unit laws of a ⊗-monoid."""
    c = mult.cod
    if unit.cod != c or mult.dom != tensor(c, c):
        raise DomainMismatch(f"{prefix}: multiplication and unit do not live on the same polynomial", mult.dom, unit.cod)
    ic = identity(c)
    children = [
        compare_maps(
            f"{prefix}.assoc",
            compose(tensor_map(mult, ic), mult),
            compose(tensor_assoc(c, c, c), tensor_map(ic, mult), mult),
        ),
        compare_maps(f"{prefix}.unit_l", compose(tensor_map(unit, ic), mult), tensor_unit_l(c)),
        compare_maps(f"{prefix}.unit_r", compose(tensor_map(ic, unit), mult), tensor_unit_r(c)),
    ]
    return LawReport.combine(prefix, children)


def comonoid_laws(comult: PolyMap, counit: PolyMap, prefix: str = "comonoid") -> LawReport:
    """Coassociativity and both counit laws of a ⊗-comonoid."""
    c = comult.dom
    if counit.dom != c or comult.cod != tensor(c, c):
        raise DomainMismatch(f"{prefix}: comultiplication and counit do not live on the same polynomial", comult.dom, counit.dom)
    ic = identity(c)
    children = [
        compare_maps(
            f"{prefix}.coassoc",
            compose(comult, tensor_map(comult, ic), tensor_assoc(c, c, c)),
            compose(comult, tensor_map(ic, comult)),
        ),
        compare_maps(f"{prefix}.counit_l", compose(comult, tensor_map(counit, ic)), inverse(tensor_unit_l(c))),
        compare_maps(f"{prefix}.counit_r", compose(comult, tensor_map(ic, counit)), inverse(tensor_unit_r(c))),
    ]
    return LawReport.combine(prefix, children)


def tri_monoid_laws(mult: PolyMap, unit: PolyMap, prefix: str = "tri_monoid") -> LawReport:
    """Associativity and unit laws of a ◁-monoid."""
    c = mult.cod
    ic = identity(c)
    children = [
        compare_maps(
            f"{prefix}.assoc",
            compose(substitute_map(mult, ic), mult),
            compose(tri_assoc(c, c, c), substitute_map(ic, mult), mult),
        ),
        compare_maps(f"{prefix}.unit_l", compose(substitute_map(unit, ic), mult), tri_unit_l(c)),
        compare_maps(f"{prefix}.unit_r", compose(substitute_map(ic, unit), mult), tri_unit_r(c)),
    ]
    return LawReport.combine(prefix, children)


def tri_comonoid_laws(comult: PolyMap, counit: PolyMap, prefix: str = "tri_comonoid") -> LawReport:
    """Coassociativity and counit laws of a ◁-comonoid."""
    c = comult.dom
    ic = identity(c)
    children = [
        compare_maps(
            f"{prefix}.coassoc",
            compose(comult, substitute_map(comult, ic), tri_assoc(c, c, c)),
            compose(comult, substitute_map(ic, comult)),
        ),
        compare_maps(f"{prefix}.counit_l", compose(comult, substitute_map(counit, ic)), inverse(tri_unit_l(c))),
        compare_maps(f"{prefix}.counit_r", compose(comult, substitute_map(ic, counit)), inverse(tri_unit_r(c))),
    ]
    return LawReport.combine(prefix, children)


def check_bialgebra(mult: PolyMap, unit: PolyMap, comult: PolyMap, counit: PolyMap) -> LawReport:
    """
    The four bialgebra laws for a ⊗-monoid and a ⊗-comonoid on the same polynomial.

    (i) ν ; γ = id_y, (ii) ν ; δ = ν ⊗ ν, (iii) μ ; γ = γ ⊗ γ,
    (iv) μ ; δ = (δ ⊗ δ) ; swap ; (μ ⊗ μ) with swap exchanging the middle factors.

    Raises:
        DomainMismatch: when the two structures live on different polynomials.
    """
    c = mult.cod
    if comult.dom != c:
        raise DomainMismatch(f"Monoid on {c} and comonoid on {comult.dom} do not share a carrier", c, comult.dom)
    children = [
        compare_maps("bialgebra.i", compose(unit, counit), identity(Y)),
        compare_maps("bialgebra.ii", compose(unit, comult), compose(inverse(tensor_unit_l(Y)), tensor_map(unit, unit))),
        compare_maps("bialgebra.iii", compose(mult, counit), compose(tensor_map(counit, counit), tensor_unit_l(Y))),
        compare_maps(
            "bialgebra.iv",
            compose(mult, comult),
            compose(tensor_map(comult, comult), middle_swap(c), tensor_map(mult, mult)),
        ),
    ]
    report = LawReport.combine("bialgebra", children)
    if not report.passed:
        logger.debug(f"Bialgebra laws fail on {c}: {[str(f) for f in report.failures()]}")
    return report


def verify_linear_monoid(s: LinearMonoidStructure) -> LawReport:
    delta, gamma = induced_tri_comonoid(s)
    return LawReport.combine(
        f"{s.side}_linear_monoid",
        [monoid_laws(s.mult, s.unit), tri_comonoid_laws(delta, gamma, prefix="induced_tri_comonoid")],
    )


def verify_linear_comonoid(s: LinearComonoidStructure) -> LawReport:
    mu, nu = induced_tri_monoid(s)
    return LawReport.combine(
        f"{s.side}_linear_comonoid",
        [comonoid_laws(s.comult, s.counit), tri_monoid_laws(mu, nu, prefix="induced_tri_monoid")],
    )


def verify_linear_bialgebra(b: LinearBialgebraStructure) -> LawReport:
    """Every ⊗-law, every induced ◁-law and the four bialgebra laws."""
    children = [
        verify_linear_monoid(b.monoid),
        verify_linear_comonoid(b.comonoid),
        check_bialgebra(b.monoid.mult, b.monoid.unit, b.comonoid.comult, b.comonoid.counit),
    ]
    return LawReport.combine(
        f"{b.side}_linear_bialgebra", children, stats={"order": b.monoid.duality.left.num_positions}
    )


def verify_cyclic_coincidence() -> LawReport:
    """
    At the cyclic dual y ⊣⊣ y both legs are y, and y ⊗ y = y ◁ y = y.

    The ◁-comonoid induced from the monoid on the left leg has to agree with
    the one induced from the monoid on the right leg, and likewise for the
    ◁-monoids induced from the two comonoids. Each also has to agree with
    the ⊗-structure of the same shape on y.
    """
    m = FiniteMonoid.trivial()
    left_delta, left_gamma = induced_tri_comonoid(left_linear_monoid(m))
    right_delta, right_gamma = induced_tri_comonoid(right_linear_monoid(1))
    left_mu, left_nu = induced_tri_monoid(left_linear_comonoid(1))
    right_mu, right_nu = induced_tri_monoid(right_linear_comonoid(m))
    comonoid = left_linear_comonoid(1)
    monoid = left_linear_monoid(m)
    children = [
        compare_maps("cyclic.tri_comult", left_delta, right_delta),
        compare_maps("cyclic.tri_counit", left_gamma, right_gamma),
        compare_maps("cyclic.tri_mult", left_mu, right_mu),
        compare_maps("cyclic.tri_unit", left_nu, right_nu),
        compare_maps("cyclic.comult_agrees", left_delta, comonoid.comult),
        compare_maps("cyclic.counit_agrees", left_gamma, comonoid.counit),
        compare_maps("cyclic.mult_agrees", left_mu, monoid.mult),
        compare_maps("cyclic.unit_agrees", left_nu, monoid.unit),
    ]
    return LawReport.combine("cyclic_coincidence", children)
