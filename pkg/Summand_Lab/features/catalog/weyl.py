"""
Quadrics and the SL_c invariant picture
Maximal minors and inner products of a (c+1) x c matrix, the alternating
relation they satisfy, the quadric map they induce and the chain that cuts
the quadric in 2c+2 variables down to one in 2c+1 variables
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ...utils.errors import BadParameters, NotQuadratic
from ..graded.grading import MultiGrading
from ..groebner.ideal import Ideal
from ..groebner.ideals import ideals_equal
from ..poly_core.calculus import determinant, hessian_at_origin
from ..poly_core.rings import Monomial, PolyRing, Polynomial, Scalar
from ..ringmap.operations import (
    ExpandContract,
    WellDefinedness,
    check_well_defined,
    descend_to_quotient,
    expand_contract,
    kernel,
)
from ..ringmap.quotient import QuotientRing, RingMap

logger = logging.getLogger(__name__)

WEYL_SPLITTING_STATUS = "assumed"


def quadric_polynomial(ring: PolyRing) -> Polynomial:
    """x1*x2 + x3*x4 + ..., plus x_n^2 when the number of variables is odd."""
    gens = ring.gens
    q = ring.zero()
    for i in range(0, len(gens) - 1, 2):
        q = q + gens[i] * gens[i + 1]
    if len(gens) % 2:
        q = q + gens[-1] ** 2
    return q


def quadric_ring(n: int) -> QuotientRing:
    if n < 2:
        raise BadParameters(f"A quadric needs at least 2 variables, got {n}")
    ring = PolyRing(tuple(f"x{i}" for i in range(1, n + 1)))
    return QuotientRing(ring, Ideal.of(ring, [quadric_polynomial(ring)]), MultiGrading.standard(n))


def quadric_rank(q: Polynomial) -> int:
    """Rank of the symmetric coefficient matrix of a quadratic form over Q."""
    if not q or not q.is_homogeneous() or q.total_degree() != 2:
        raise NotQuadratic(f"{q} is not a quadratic form", witness={"polynomial": str(q)})
    return hessian_at_origin(q).rank


@dataclass(frozen=True)
class WeylTarget:
    ring: PolyRing
    c: int
    minors: Tuple[Polynomial, ...]
    products: Tuple[Polynomial, ...]

    def u(self, i: int, j: int) -> Polynomial:
        return self.ring.gen(f"u_{i}_{j}")


def weyl_target(c: int) -> WeylTarget:
    """Ring in u_i_j (i <= c+1, j <= c) and v_j; minors delete row i, products are row i dotted with v."""
    if c < 1:
        raise BadParameters(f"c must be at least 1, got {c}")
    names = [f"u_{i}_{j}" for i in range(1, c + 2) for j in range(1, c + 1)]
    names += [f"v_{j}" for j in range(1, c + 1)]
    ring = PolyRing(tuple(names))
    rows = [[ring.gen(f"u_{i}_{j}") for j in range(1, c + 1)] for i in range(1, c + 2)]
    v = [ring.gen(f"v_{j}") for j in range(1, c + 1)]
    minors = []
    products = []
    for i in range(c + 1):
        minors.append(determinant(ring, rows[:i] + rows[i + 1:]))
        total = ring.zero()
        for u_ij, v_j in zip(rows[i], v):
            total = total + u_ij * v_j
        products.append(total)
    return WeylTarget(ring, c, tuple(minors), tuple(products))


def weyl_map(c: int) -> RingMap:
    """quadric(2c+2) -> target, x_{2i-1} -> (-1)^(i+1) Delta_i, x_{2i} -> p_i."""
    target = weyl_target(c)
    source = quadric_ring(2 * c + 2)
    images: List[Polynomial] = []
    for i, (delta, p) in enumerate(zip(target.minors, target.products)):
        images.append(delta if i % 2 == 0 else -delta)
        images.append(p)
    return RingMap(source, QuotientRing.free(target.ring), tuple(images), name=f"weyl({c})")


@dataclass(frozen=True)
class WeylRelation:
    """Expansion of sum (-1)^(i+1) Delta_i p_i, grouped by monomial."""

    c: int
    relation: Polynomial
    expanded_terms: int
    cancellations: Tuple[Tuple[Monomial, Tuple[Scalar, ...]], ...]

    @property
    def holds(self) -> bool:
        return not self.relation and all(sum(coeffs) == 0 for _, coeffs in self.cancellations)


def verify_weyl_relation(c: int) -> WeylRelation:
    target = weyl_target(c)
    grouped: Dict[Monomial, List[Scalar]] = defaultdict(list)
    relation = target.ring.zero()
    count = 0
    for i, (delta, p) in enumerate(zip(target.minors, target.products)):
        term = delta * p if i % 2 == 0 else -(delta * p)
        relation = relation + term
        sign = 1 if i % 2 == 0 else -1
        for m1, c1 in delta.rep.items():
            for m2, c2 in p.rep.items():
                grouped[tuple(a + b for a, b in zip(m1, m2))].append(sign * c1 * c2)
                count += 1
    cancellations = tuple(sorted((m, tuple(v)) for m, v in grouped.items()))
    result = WeylRelation(c, relation, count, cancellations)
    logger.info(f"Weyl relation for c = {c}: {count} expanded terms, holds = {result.holds}")
    return result


@dataclass(frozen=True)
class WeylChain:
    """Quadric in 2c+2 variables -> SL_c invariants, then cut by x_{2c+1} - x_{2c+2}."""

    c: int
    relation: WeylRelation
    well_defined: WellDefinedness
    kernel: Ideal
    injective: bool
    contraction: ExpandContract
    cut: Polynomial
    cut_rank: Optional[int]
    descended: RingMap
    splitting_status: str = WEYL_SPLITTING_STATUS


def weyl_chain(c: int = 2) -> WeylChain:
    phi = weyl_map(c)
    relation = verify_weyl_relation(c)
    well_defined = check_well_defined(phi)
    found = kernel(phi)
    injective = ideals_equal(found, phi.source.ideal)
    ring = phi.source.ambient
    n = ring.arity
    I = Ideal.of(ring, [ring.gen(f"x{n - 1}") - ring.gen(f"x{n}")])
    contraction = expand_contract(phi, I)
    cut = phi.apply(I.generators[0])
    try:
        rank = quadric_rank(cut)
    except NotQuadratic:
        rank = None
    descended = descend_to_quotient(phi, I)
    logger.info(f"Weyl chain c = {c}: injective = {injective}, contraction holds = {contraction.holds}, rank = {rank}")
    return WeylChain(c, relation, well_defined, found, injective, contraction, cut, rank, descended)
