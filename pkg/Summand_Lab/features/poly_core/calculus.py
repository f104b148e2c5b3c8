"""
Calculus primitives
Partial derivatives, jets, Hessians at the origin and affine chart localization
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ...utils.errors import BadParameters, PointNotOnChart
from .rings import PolyRing, Polynomial, Scalar, ScalarLike, scalar_str, substitute, to_scalar

logger = logging.getLogger(__name__)


def derivative(p: Polynomial, name: str) -> Polynomial:
    index = p.ring.index(name)
    return Polynomial(p.ring, p.rep.diff(p.ring.sympy.gens[index]))


def partial_derivatives(p: Polynomial) -> List[Polynomial]:
    """One partial derivative per ring variable, in variable order."""
    return [derivative(p, name) for name in p.ring.variables]


def jet(p: Polynomial, k: int) -> Polynomial:
    """Sum of the terms of total degree at most ``k``."""
    if k < 0:
        return p.ring.zero()
    return p.ring.from_terms({m: c for m, c in p.rep.items() if sum(m) <= k})


def homogeneous_part(p: Polynomial, k: int) -> Polynomial:
    return p.ring.from_terms({m: c for m, c in p.rep.items() if sum(m) == k})


@dataclass(frozen=True)
class HessianReport:
    matrix: Tuple[Tuple[Scalar, ...], ...]
    rank: int
    corank: int

    def as_strings(self) -> List[List[str]]:
        return [[scalar_str(entry) for entry in row] for row in self.matrix]


def symmetric_rank(matrix: Sequence[Sequence[Scalar]]) -> int:
    if not matrix:
        return 0
    return DomainMatrix([list(row) for row in matrix], (len(matrix), len(matrix[0])), QQ).rank()


def hessian_at_origin(p: Polynomial) -> HessianReport:
    """Matrix of second partials at 0, read off the quadratic terms."""
    n = p.ring.arity
    rows = [[QQ.zero] * n for _ in range(n)]
    for monom, coeff in p.rep.items():
        if sum(monom) != 2:
            continue
        support = [i for i, e in enumerate(monom) if e]
        if len(support) == 1:
            i = support[0]
            rows[i][i] = 2 * coeff
        else:
            i, j = support
            rows[i][j] = coeff
            rows[j][i] = coeff
    rank = symmetric_rank(rows)
    return HessianReport(tuple(tuple(row) for row in rows), rank, n - rank)


def chart_ring(ring: PolyRing, chart_var: str) -> PolyRing:
    ring.index(chart_var)
    return PolyRing(tuple(v for v in ring.variables if v != chart_var))


def normalize_point(ring: PolyRing, chart_var: str, point: Sequence[ScalarLike]) -> Tuple[Scalar, ...]:
    """Scale projective coordinates so the chart coordinate is 1."""
    if len(point) != ring.arity:
        raise BadParameters(f"Point {tuple(point)} does not have {ring.arity} coordinates")
    values = [to_scalar(v) for v in point]
    pivot = values[ring.index(chart_var)]
    if not pivot:
        raise PointNotOnChart(
            f"Point has {chart_var} = 0 and is not on the chart {chart_var} = 1",
            witness={"chart": chart_var},
        )
    return tuple(v / pivot for v in values)


def chart_localize(F: Polynomial, chart_var: str, point: Sequence[ScalarLike]) -> Polynomial:
    """Dehomogenize at ``chart_var`` = 1 and move ``point`` to the origin.

    The result lives in the ring of the remaining variables.
    """
    if not F.is_homogeneous():
        raise BadParameters(f"Polynomial {F} is not homogeneous")
    values = normalize_point(F.ring, chart_var, point)
    local = chart_ring(F.ring, chart_var)
    images = []
    for name, value in zip(F.ring.variables, values):
        if name == chart_var:
            images.append(local.one())
        else:
            images.append(local.gen(name) + value)
    result = substitute(F, images, local)
    logger.debug(f"Localized {F} at chart {chart_var}: {result}")
    return result


def determinant(ring: PolyRing, rows: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square matrix of polynomials, over the polynomial ring."""
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise BadParameters(f"Matrix with {n} rows is not square")
    if n == 0:
        return ring.one()
    domain = ring.sympy.to_domain()
    entries = [[domain.convert(p.rep) for p in row] for row in rows]
    det = DomainMatrix(entries, (n, n), domain).det()
    return Polynomial(ring, ring.sympy(det))
