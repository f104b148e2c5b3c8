"""
Singular points of projective surfaces
Chart-by-chart singular loci in P^3 and local Milnor numbers, by saturation
or by truncation at a power of the maximal ideal
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ

from ...utils.errors import (
    BadParameters,
    JacobianNotZeroDimensional,
    NonIsolated,
    NotZeroDimensional,
    PointNotSingular,
)
from ..graded.grading import MultiGrading
from ..graded.pieces import monomials_of_degree
from ..groebner.buchberger import reduced_groebner
from ..groebner.ideal import Ideal
from ..groebner.ideals import maximal_ideal, saturate
from ..groebner.zero_dim import rational_points_zero_dim, zero_dim_vector_dimension
from ..poly_core.calculus import chart_localize, chart_ring, partial_derivatives
from ..poly_core.rings import PolyRing, Polynomial, Scalar, ScalarLike, substitute, to_scalar

logger = logging.getLogger(__name__)

ProjectivePoint = Tuple[Scalar, ...]

TRUNCATION_LIMIT = 40


def _require_surface(F: Polynomial) -> None:
    if F.ring.arity != 4:
        raise BadParameters(f"Expected a polynomial in 4 variables, got ring [{F.ring}]")
    if not F:
        raise BadParameters("The zero polynomial does not define a surface")
    if not F.is_homogeneous():
        raise BadParameters(f"Polynomial {F} is not homogeneous")


def dehomogenize(F: Polynomial, chart_var: str) -> Polynomial:
    """F with ``chart_var`` = 1, in the ring of the other variables."""
    local = chart_ring(F.ring, chart_var)
    images = [local.one() if name == chart_var else local.gen(name) for name in F.ring.variables]
    return substitute(F, images, local)


def normalize_projective(point: Sequence[ScalarLike]) -> ProjectivePoint:
    """Scale so that the first nonzero coordinate is 1."""
    values = [to_scalar(v) for v in point]
    for v in values:
        if v:
            return tuple(x / v for x in values)
    raise BadParameters("The zero vector is not a projective point")


def default_chart(ring: PolyRing, point: Sequence[ScalarLike]) -> str:
    """Variable of the first nonzero coordinate."""
    for name, v in zip(ring.variables, point):
        if to_scalar(v):
            return name
    raise BadParameters("The zero vector is not a projective point")


@dataclass(frozen=True)
class SingularLocus:
    points: Tuple[ProjectivePoint, ...]
    complete: bool
    charts_with_nonrational: Tuple[str, ...] = field(default_factory=tuple)


def projective_singular_points(F: Polynomial) -> SingularLocus:
    """Singular points of V(F) in P^3 with coordinates in Q, over the four standard charts.

    Points over extensions of Q are not enumerated: the charts holding them are listed in
    ``charts_with_nonrational`` and ``complete`` is False. No points does not mean smooth
    unless ``complete`` is True.
    """
    _require_surface(F)
    found = set()
    nonrational: List[str] = []
    for chart_var in F.ring.variables:
        f = dehomogenize(F, chart_var)
        local = f.ring
        ideal = Ideal.of(local, [f] + partial_derivatives(f))
        if reduced_groebner(ideal).is_unit():
            logger.debug(f"Chart {chart_var}: smooth")
            continue
        try:
            result = rational_points_zero_dim(ideal)
        except NotZeroDimensional as e:
            raise NonIsolated(
                f"Singular locus of {F} in chart {chart_var} = 1 is positive-dimensional",
                witness={"chart": chart_var, "polynomial": str(F)},
            ) from e
        if result.has_nonrational:
            nonrational.append(chart_var)
        for affine in result.points:
            coords = iter(affine)
            full = [QQ.one if name == chart_var else next(coords) for name in F.ring.variables]
            found.add(normalize_projective(full))
        logger.debug(f"Chart {chart_var}: {len(result.points)} rational singular points")
    points = tuple(sorted(found, reverse=True))
    if nonrational:
        logger.info(f"Surface {F}: {len(points)} singular points over Q, more over extensions in charts {nonrational}")
    else:
        logger.info(f"Surface {F}: {len(points)} singular points over Q, none elsewhere")
    return SingularLocus(points, not nonrational, tuple(nonrational))


def local_equation(F: Polynomial, point: Sequence[ScalarLike], chart: Optional[str]) -> Polynomial:
    chart = chart or default_chart(F.ring, point)
    f = chart_localize(F, chart, point)
    if f.constant_term() or any(d.constant_term() for d in partial_derivatives(f)):
        raise PointNotSingular(
            f"{tuple(str(c) for c in point)} is not a singular point of {F}",
            witness={"point": [str(c) for c in point], "chart": chart},
        )
    return f


def jacobian_ideal(f: Polynomial) -> Ideal:
    return Ideal.of(f.ring, partial_derivatives(f))


def milnor_at_origin(f: Polynomial) -> int:
    """dim A/J - dim A/(J : m^∞) for the Jacobian ideal J of a local equation."""
    J = jacobian_ideal(f)
    if J.is_zero():
        raise JacobianNotZeroDimensional(f"Jacobian ideal of {f} is zero", witness={"polynomial": str(f)})
    try:
        total = zero_dim_vector_dimension(J)
    except NotZeroDimensional as e:
        raise JacobianNotZeroDimensional(
            f"Jacobian ideal of {f} has positive-dimensional critical locus",
            witness={"polynomial": str(f)},
        ) from e
    away = saturate(J, maximal_ideal(f.ring))
    remaining = 0 if reduced_groebner(away).is_unit() else zero_dim_vector_dimension(away)
    return total - remaining


def _power_of_maximal(ring: PolyRing, n: int) -> List[Polynomial]:
    W = MultiGrading.standard(ring.arity)
    return [ring.monomial(m) for m in monomials_of_degree(W, (n,), n)]


def milnor_truncated(f: Polynomial, limit: int = TRUNCATION_LIMIT) -> int:
    """dim A/(J + m^N) at the first N where it stops growing."""
    J = jacobian_ideal(f)
    previous = None
    for n in range(1, limit + 1):
        value = zero_dim_vector_dimension(Ideal.of(f.ring, J.generators + tuple(_power_of_maximal(f.ring, n))))
        if value == previous:
            logger.debug(f"Truncated Milnor number of {f} stabilized at {value} (N = {n})")
            return value
        previous = value
    raise JacobianNotZeroDimensional(
        f"Local Jacobian algebra of {f} did not stabilize below m^{limit}; the singularity is not isolated",
        witness={"polynomial": str(f), "limit": limit},
    )


def local_milnor(F: Polynomial, point: Sequence[ScalarLike], chart: Optional[str] = None) -> int:
    """Milnor number of V(F) at ``point``, by the saturation difference."""
    return milnor_at_origin(local_equation(F, point, chart))


def local_milnor_truncated(F: Polynomial, point: Sequence[ScalarLike], chart: Optional[str] = None) -> int:
    return milnor_truncated(local_equation(F, point, chart))


def point_milnor(F: Polynomial, point: Sequence[ScalarLike], chart: Optional[str] = None) -> Tuple[int, str]:
    """(mu, method); falls back to truncation when the chart Jacobian has extra critical curves."""
    f = local_equation(F, point, chart)
    try:
        return milnor_at_origin(f), "saturation"
    except JacobianNotZeroDimensional:
        logger.warning(f"Jacobian of {f} is not zero-dimensional; using the truncated local algebra")
        return milnor_truncated(f), "truncation"
