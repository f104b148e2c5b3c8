"""
Splitting verification
Bounded exact check that a candidate retraction is R-linear and sends 1 to 1
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ...utils.errors import RingMismatch
from ...utils.settings import get_settings
from ..groebner.buchberger import reduced_groebner
from ..poly_core.rings import Monomial, Polynomial
from ..ringmap.quotient import RingMap
from .lattice import vectors_up_to
from .specs import SplittingSpec

logger = logging.getLogger(__name__)

VERIFIED = "verified-to-bound"
REFUTED = "refuted"


@dataclass(frozen=True)
class Violation:
    """sigma(phi(r)·m) != r·sigma(m)"""

    generator: str
    monomial: Polynomial
    lhs: Polynomial
    rhs: Polynomial


@dataclass
class SplittingReport:
    sigma_of_one: Polynomial
    degree_bound: int
    checks: int = 0
    linearity_violations: List[Violation] = field(default_factory=list)

    @property
    def unit_preserved(self) -> bool:
        return self.sigma_of_one == self.sigma_of_one.ring.one()

    @property
    def verdict(self) -> str:
        if self.linearity_violations or not self.unit_preserved:
            return REFUTED
        return VERIFIED

    @property
    def first_violation(self) -> Optional[Violation]:
        return self.linearity_violations[0] if self.linearity_violations else None


def _standard_target_monomials(phi: RingMap, bound: int) -> List[Monomial]:
    """Target monomials up to the bound that are not divisible by a leading monomial of the target ideal."""
    target = phi.target
    leads: List[Monomial] = []
    if not target.ideal.is_zero():
        G = reduced_groebner(target.ideal)
        if G.is_unit():
            return []
        leads = G.leading_monomials()
    found = []
    for e in vectors_up_to(target.ambient.arity, bound):
        if not any(all(a <= b for a, b in zip(lm, e)) for lm in leads):
            found.append(e)
    return found


def verify_splitting(
    phi: RingMap,
    spec: SplittingSpec,
    degree_bound: Optional[int] = None,
    stop_at_first: bool = False,
) -> SplittingReport:
    """Check sigma(1) = 1 and sigma(phi(r)·m) = r·sigma(m) for all source variables r and
    standard target monomials m of total degree <= bound.
    """
    if phi.source.ambient != spec.source.ambient or phi.target.ambient != spec.target.ambient:
        raise RingMismatch(
            f"Splitting retracts [{spec.target.ambient}] -> [{spec.source.ambient}], "
            f"map is [{phi.source.ambient}] -> [{phi.target.ambient}]"
        )
    bound = degree_bound if degree_bound is not None else get_settings().splitting_degree_bound
    source = phi.source.ambient
    target = phi.target

    if target.is_zero_ring():
        # 1 = 0 in the target, so sigma(1) = sigma(0) = 0 unless the source is zero too
        sigma_one = source.one() if phi.source.is_zero_ring() else spec.reduce_source(source.zero())
    else:
        sigma_one = spec.reduce_source(spec.evaluate(target.ambient.one()))
    report = SplittingReport(sigma_of_one=sigma_one, degree_bound=bound)
    if not report.unit_preserved:
        logger.info(f"sigma(1) = {sigma_one}, not 1")

    monomials = _standard_target_monomials(phi, bound)
    for name, image in zip(source.variables, phi.images):
        r = source.gen(name)
        for e in monomials:
            m = target.ambient.monomial(e)
            lhs = spec.reduce_source(spec.evaluate(target.normal_form(image * m)))
            rhs = spec.reduce_source(r * spec.evaluate(m))
            report.checks += 1
            if lhs != rhs:
                report.linearity_violations.append(Violation(name, m, lhs, rhs))
                logger.debug(f"Linearity fails for {name} and {m}: {lhs} != {rhs}")
                if stop_at_first:
                    return report

    logger.info(
        f"Splitting {spec.kind} checked on {report.checks} products up to degree {bound}: "
        f"{report.verdict} ({len(report.linearity_violations)} violations)"
    )
    return report
