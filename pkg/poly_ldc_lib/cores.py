# poly_ldc_lib/cores.py
"""
Left and right cores: p is in the left core when indep(p, x) is an iso for
every x, in the right core when indep(x, p) is.
"""

from typing import List

from .errors import NotRepresentable
from .logger import logger
from .models import Counterexample, LawReport
from .monoidal import indep
from .polycore import PolyMap, Polynomial, bounded_polynomials, constant, is_iso, linear


def in_left_core(p: Polynomial) -> bool:
    """p ≅ Ay: every position has exactly one direction."""
    return p.is_linear()


def in_right_core(p: Polynomial) -> bool:
    """p ≅ y^A: exactly one position."""
    return p.is_representable()


def core_probes(max_probe: int = 3) -> List[Polynomial]:
    """Bounded family plus constants, which are enough to refute membership."""
    probes = bounded_polynomials(max_probe, max_probe)
    for size in range(max(2, max_probe) + 1):
        probe = constant(size)
        if probe not in probes:
            probes.append(probe)
    return probes


def verify_core_membership(p: Polynomial, max_probe: int = 3, side: str = "left") -> LawReport:
    """
    Probe indep on one side of p and compare with the shape test.

    Args:
        p (Polynomial): Candidate core member.
        max_probe (int): Probes range over polynomials with at most this many
            positions and directions.
        side (str): "left" probes indep(p, x), "right" probes indep(x, p).

    Returns:
        LawReport: passes when "indep is an iso at every probe" agrees with the
        shape test.
    """
    if side not in ("left", "right"):
        raise ValueError(f"Unknown side '{side}', expected 'left' or 'right'")
    shape = in_left_core(p) if side == "left" else in_right_core(p)
    probes = core_probes(max_probe)
    failing = None
    for index, x in enumerate(probes):
        f = indep(p, x) if side == "left" else indep(x, p)
        if not is_iso(f):
            failing = (index, x)
            break
    all_iso = failing is None
    stats = {"probes": len(probes), "shape": shape, "all_iso": all_iso}
    if failing is not None:
        stats["refuting_probe"] = str(failing[1])
    law = f"core.{side}"
    if all_iso == shape:
        return LawReport(law, True, stats=stats)
    logger.warning(f"Core probe for {p} on the {side} disagrees with the shape test")
    counterexample = Counterexample(
        (failing[0],) if failing else (),
        (),
        f"indep iso on all probes: {all_iso}",
        f"shape test: {shape}",
    )
    return LawReport(law, False, counterexample, stats)


def star_obj(p: Polynomial) -> Polynomial:
    """(y^A)* = Ay."""
    if not p.is_representable():
        raise NotRepresentable(f"{p} is not representable")
    return linear(p.cards[0])


def star_map(f: PolyMap) -> PolyMap:
    """
    φ: y^B → y^A goes to Ay → By, whose forward table is the backward table of φ.

    Raises:
        NotRepresentable: when either end of φ is not representable.
    """
    if not (f.dom.is_representable() and f.cod.is_representable()):
        raise NotRepresentable(f"star needs a map between representables, got {f.dom} -> {f.cod}")
    source, target = f.cod.cards[0], f.dom.cards[0]
    return PolyMap(linear(source), linear(target), f.on_directions[0], ((0,),) * source)
