"""
Ideal operations
Membership, elimination, intersection, colon ideals and saturation
"""
import logging
from typing import List, Optional, Sequence

from sympy.polys.orderings import grevlex

from ...utils.errors import RingMismatch, UnknownVariable
from ..poly_core.rings import PolyRing, Polynomial, ScalarLike
from .buchberger import reduced_groebner
from .ideal import Ideal
from .orders import BlockOrder

logger = logging.getLogger(__name__)


def _same_ring(I: Ideal, J: Ideal) -> None:
    if I.ring != J.ring:
        raise RingMismatch(f"Ring mismatch: [{I.ring}] vs [{J.ring}]")


def fresh_name(ring: PolyRing, stem: str = "_t") -> str:
    k = 0
    while f"{stem}{k}" in ring.variables:
        k += 1
    return f"{stem}{k}"


def normal_form(p: Polynomial, I: Ideal) -> Polynomial:
    return reduced_groebner(I).normal_form(p)


def contains(p: Polynomial, I: Ideal) -> bool:
    """True iff ``p`` reduces to zero modulo the reduced basis of ``I``."""
    if p.ring != I.ring:
        raise RingMismatch(f"Polynomial ring [{p.ring}] differs from ideal ring [{I.ring}]")
    if not p:
        return True
    if I.is_zero():
        return False
    return reduced_groebner(I).contains(p)


def is_subset(I: Ideal, J: Ideal) -> bool:
    _same_ring(I, J)
    if I.is_zero():
        return True
    G = reduced_groebner(J)
    return all(G.contains(g) for g in I.generators)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    """Equality of ideals, by comparing reduced degrevlex bases."""
    _same_ring(I, J)
    return reduced_groebner(I).basis == reduced_groebner(J).basis


def is_unit_ideal(I: Ideal) -> bool:
    return not I.is_zero() and reduced_groebner(I).is_unit()


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _same_ring(I, J)
    return Ideal.of(I.ring, (f * g for f in I.generators for g in J.generators))


def ideal_power(I: Ideal, k: int) -> Ideal:
    result = Ideal.unit(I.ring)
    for _ in range(k):
        result = ideal_product(result, I)
    return result


def maximal_ideal(ring: PolyRing, point: Optional[Sequence[ScalarLike]] = None) -> Ideal:
    """The ideal of a rational point (the origin by default)."""
    point = point or [0] * ring.arity
    return Ideal.of(ring, (g - c for g, c in zip(ring.gens, point)))


def eliminate(I: Ideal, keep: Sequence[str]) -> Ideal:
    """I intersected with the subring generated by the ``keep`` variables."""
    keep_set = set(keep)
    for name in keep_set:
        if name not in I.ring.variables:
            raise UnknownVariable(f"Cannot keep {name!r}: not a variable of [{I.ring}]")
    kept = [v for v in I.ring.variables if v in keep_set]
    dropped = [v for v in I.ring.variables if v not in keep_set]
    keep_ring = PolyRing(tuple(kept))
    if not dropped:
        return Ideal.of(keep_ring, reduced_groebner(I).basis)

    block_ring = PolyRing(tuple(dropped + kept))
    lifted = Ideal.of(block_ring, (g.to_ring(block_ring) for g in I.generators))
    G = reduced_groebner(lifted, BlockOrder(len(dropped)))
    k = len(dropped)
    survivors = [g for g in G.basis if all(not any(m[:k]) for m in g.rep)]
    logger.debug(f"Eliminated {dropped}: {len(G.basis)} basis elements, {len(survivors)} survive")
    return Ideal.of(keep_ring, (g.to_ring(keep_ring) for g in survivors))


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J as the elimination of t from t·I + (1 - t)·J."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal.zero(I.ring)
    t = fresh_name(I.ring)
    big = PolyRing((t,) + I.ring.variables)
    T = big.gen(t)
    gens: List[Polynomial] = [T * f.to_ring(big) for f in I.generators]
    gens += [(1 - T) * g.to_ring(big) for g in J.generators]
    return eliminate(Ideal.of(big, gens), I.ring.variables)


def colon_by_element(I: Ideal, g: Polynomial) -> Ideal:
    """I : (g), computed as (I ∩ (g)) / g."""
    if g.ring != I.ring:
        raise RingMismatch(f"Polynomial ring [{g.ring}] differs from ideal ring [{I.ring}]")
    if not g or contains(g, I):
        return Ideal.unit(I.ring)
    meet = intersect(I, Ideal.of(I.ring, [g]))
    return Ideal.of(I.ring, (Polynomial(I.ring, h.rep.exquo(g.rep)) for h in meet.generators))


def colon_ideal(I: Ideal, J: Ideal) -> Ideal:
    """{p : p·J ⊆ I}."""
    _same_ring(I, J)
    if J.is_zero():
        return Ideal.unit(I.ring)
    result: Optional[Ideal] = None
    for g in J.generators:
        piece = colon_by_element(I, g)
        result = piece if result is None else intersect(result, piece)
    return result


def saturate(I: Ideal, J: Ideal) -> Ideal:
    """I : J^∞, iterating colon ideals until the chain stabilizes."""
    _same_ring(I, J)
    current = I
    steps = 0
    while True:
        following = colon_ideal(current, J)
        steps += 1
        if is_subset(following, current):
            logger.debug(f"Saturation stabilized after {steps} colon steps")
            return current
        current = following


def reduced_ideal(I: Ideal) -> Ideal:
    """Same ideal generated by its reduced degrevlex basis."""
    return Ideal.of(I.ring, reduced_groebner(I, grevlex).basis)
