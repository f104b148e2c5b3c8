"""
Diagonal torus actions
Invariant monomials, bounded monoid generators and the section-variable
extension used to cut section rings out of a Cox ring
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ...utils.errors import BadParameters
from ...utils.settings import get_settings
from ..graded.grading import DegreeVector, MultiGrading, NotHomogeneous, homogeneous_degree
from ..graded.pieces import monomials_of_degree
from ..poly_core.rings import Monomial, PolyRing, Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusAction:
    """(G_m)^r acting on variable j by the character in column j of ``grading``."""

    grading: MultiGrading

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], arity: Optional[int] = None) -> "TorusAction":
        return cls(MultiGrading.from_rows(rows, arity))

    @property
    def rank(self) -> int:
        return self.grading.rank

    @property
    def arity(self) -> int:
        return self.grading.arity

    def weight(self, monomial: Monomial) -> DegreeVector:
        return self.grading.degree_of(monomial)

    def is_invariant_monomial(self, monomial: Monomial) -> bool:
        return not any(self.weight(monomial))

    def is_invariant(self, p: Polynomial) -> bool:
        degree = homogeneous_degree(p, self.grading)
        return not isinstance(degree, NotHomogeneous) and not any(degree)

    def scaled(self, factors: Sequence[int]) -> "TorusAction":
        if any(f == 0 for f in factors):
            raise BadParameters("Scale factors must be nonzero")
        return TorusAction(self.grading.scaled(factors))


def _degree_order(m: Monomial) -> Tuple:
    return (sum(m), tuple(-e for e in m))


def invariant_monomials(action: TorusAction, degree_bound: Optional[int] = None) -> List[Monomial]:
    """All weight-zero monomials of total degree <= bound, smallest degree first."""
    bound = degree_bound if degree_bound is not None else get_settings().torus_degree_bound
    if bound < 0:
        raise BadParameters(f"Degree bound must be nonnegative, got {bound}")
    zero = (0,) * action.rank
    if action.rank == 0:
        W = MultiGrading.standard(action.arity)
        found = [m for d in range(bound + 1) for m in monomials_of_degree(W, (d,), d)]
    else:
        found = list(monomials_of_degree(action.grading, zero, bound))
    found.sort(key=_degree_order)
    logger.debug(f"{len(found)} invariant monomials up to degree {bound}")
    return found


@dataclass(frozen=True)
class MonoidGenerators:
    """Minimal generators found up to ``degree_bound``; none of higher degree are searched."""

    generators: Tuple[Monomial, ...]
    degree_bound: int

    @property
    def complete_up_to(self) -> int:
        return self.degree_bound

    @property
    def largest_degree(self) -> int:
        return max((sum(g) for g in self.generators), default=0)


def monoid_minimal_generators(action: TorusAction, degree_bound: Optional[int] = None) -> MonoidGenerators:
    """Invariant monomials that are not products of two nontrivial invariant monomials."""
    bound = degree_bound if degree_bound is not None else get_settings().torus_degree_bound
    generators: List[Monomial] = []
    for m in invariant_monomials(action, bound):
        if not any(m):
            continue
        if any(all(a <= b for a, b in zip(g, m)) for g in generators):
            continue
        generators.append(m)
    logger.info(f"{len(generators)} minimal invariant generators up to degree {bound}")
    return MonoidGenerators(tuple(generators), bound)


def extend_action_section_variable(action: TorusAction, divisor_class: Sequence[int]) -> TorusAction:
    """Action on R[t] with t weighted by minus the divisor class."""
    if len(divisor_class) != action.rank:
        raise BadParameters(f"Divisor class {tuple(divisor_class)} does not have {action.rank} entries")
    return TorusAction(action.grading.with_column(tuple(-int(b) for b in divisor_class)))


def section_ring_variables(ring: PolyRing, name: str = "t") -> PolyRing:
    """ring with one extra variable for the section of the divisor class."""
    if name in ring.variables:
        raise BadParameters(f"Variable {name} already exists in [{ring}]")
    return PolyRing(ring.variables + (name,))
