"""
ADE recognition
Hessian corank, Milnor number and the cubic part of the 3-jet on the
Hessian kernel decide the Du Val type of an isolated surface singularity
"""
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..poly_core.calculus import HessianReport, hessian_at_origin, homogeneous_part
from ..poly_core.rings import PolyRing, Polynomial, Scalar, ScalarLike, substitute

logger = logging.getLogger(__name__)

FAMILY_ORDER = {"A": 0, "D": 1, "E": 2, "NotDuVal": 3}


@dataclass(frozen=True)
class ADEType:
    family: str
    index: Optional[int] = None

    @classmethod
    def parse(cls, label: str) -> "ADEType":
        if label == "NotDuVal":
            return cls("NotDuVal")
        return cls(label[0], int(label[1:]))

    @property
    def is_du_val(self) -> bool:
        return self.family != "NotDuVal"

    @property
    def milnor(self) -> Optional[int]:
        return self.index

    def sort_key(self) -> Tuple[int, int]:
        return (FAMILY_ORDER[self.family], self.index or 0)

    def __str__(self):
        return self.family if self.index is None else f"{self.family}{self.index}"


NOT_DU_VAL = ADEType("NotDuVal")


def hessian_kernel(report: HessianReport) -> List[Tuple[Scalar, ...]]:
    """Basis of the kernel of the Hessian over Q."""
    n = len(report.matrix)
    M = DomainMatrix([list(row) for row in report.matrix], (n, n), QQ)
    null = M.nullspace().to_list()
    return [tuple(row) for row in null]


def restricted_cubic(f: Polynomial, kernel: Sequence[Sequence[ScalarLike]]) -> Polynomial:
    """Cubic part of f evaluated on a + b parametrizing the kernel plane."""
    plane = PolyRing(("a", "b"))
    a, b = plane.gens
    k1, k2 = kernel
    images = [a * c1 + b * c2 for c1, c2 in zip(k1, k2)]
    return substitute(homogeneous_part(f, 3), images, plane)


def root_multiplicities(cubic: Polynomial) -> List[int]:
    """Multiplicities of the roots of a binary form, largest first, counted over the algebraic closure."""
    _, factors = cubic.rep.sqf_list()
    found: List[int] = []
    for factor, k in factors:
        degree = max(sum(m) for m in factor.keys())
        found.extend([k] * degree)
    return sorted(found, reverse=True)


def classify_local(f: Polynomial, milnor: int) -> Tuple[ADEType, HessianReport]:
    """Du Val type of the isolated singularity of f at the origin."""
    report = hessian_at_origin(f)
    corank = report.corank
    if corank == 0:
        kind = ADEType("A", 1) if milnor == 1 else NOT_DU_VAL
    elif corank == 1:
        kind = ADEType("A", milnor)
    elif corank == 2:
        cubic = restricted_cubic(f, hessian_kernel(report))
        if not cubic:
            kind = NOT_DU_VAL
        else:
            multiplicities = root_multiplicities(cubic)
            top = multiplicities[0]
            if top == 1:
                kind = ADEType("D", 4) if milnor == 4 else NOT_DU_VAL
            elif top == 2:
                kind = ADEType("D", milnor) if milnor >= 5 else NOT_DU_VAL
            else:
                kind = ADEType("E", milnor) if milnor in (6, 7, 8) else NOT_DU_VAL
            logger.debug(f"Restricted cubic {cubic}: root multiplicities {multiplicities}")
    else:
        kind = NOT_DU_VAL
    return kind, report
