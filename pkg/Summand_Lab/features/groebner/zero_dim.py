"""
Zero-dimensional ideals
Standard monomials, quotient dimensions and rational points with
multiplicity accounting for non-rational solutions
"""
import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex, lex

from ...utils.errors import NotZeroDimensional
from ..poly_core.rings import Monomial, PolyRing, Polynomial, Scalar, specialize
from .buchberger import GroebnerBasis, reduced_groebner
from .ideal import Ideal
from .ideals import maximal_ideal, saturate

logger = logging.getLogger(__name__)


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def pure_power_bounds(G: GroebnerBasis) -> List[Optional[int]]:
    """Exponent of the pure-power leading monomial per variable, or None."""
    n = G.ring.arity
    bounds: List[Optional[int]] = [None] * n
    for m in G.leading_monomials():
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    return bounds


def standard_monomials(G: GroebnerBasis) -> List[Monomial]:
    """Monomials outside the leading-term ideal, in ascending degrevlex order."""
    if G.is_unit():
        return []
    bounds = pure_power_bounds(G)
    missing = [G.ring.variables[i] for i, b in enumerate(bounds) if b is None]
    if missing:
        raise NotZeroDimensional(
            f"Ideal is not zero-dimensional: no pure-power leading monomial for {missing}",
            witness={"variables": missing},
        )
    leads = G.leading_monomials()
    found = [
        m for m in itertools.product(*(range(b) for b in bounds))
        if not any(_divides(lm, m) for lm in leads)
    ]
    return sorted(found, key=grevlex)


def zero_dim_vector_dimension(I: Ideal) -> int:
    """dim_Q of the quotient by a zero-dimensional ideal."""
    if I.is_zero():
        raise NotZeroDimensional(f"The zero ideal of [{I.ring}] is not zero-dimensional")
    return len(standard_monomials(reduced_groebner(I)))


@dataclass(frozen=True)
class RationalPoints:
    points: Tuple[Tuple[Scalar, ...], ...]
    total_dimension: int
    rational_multiplicity: int

    @property
    def has_nonrational(self) -> bool:
        return self.rational_multiplicity < self.total_dimension


def rational_roots(p: Polynomial, index: int) -> List[Scalar]:
    """Rational roots of a polynomial involving only variable ``index``."""
    roots = []
    _, factors = p.rep.factor_list()
    for factor, _ in factors:
        if max(m[index] for m in factor.keys()) != 1:
            continue
        a = QQ.zero
        b = QQ.zero
        for m, c in factor.items():
            if m[index] == 1:
                a += c
            else:
                b += c
        roots.append(-b / a)
    return sorted(set(roots))


def _solve(I: Ideal) -> List[Tuple[Scalar, ...]]:
    G = reduced_groebner(I, lex)
    if G.is_unit():
        return []
    last = I.ring.arity - 1
    univariate = [g for g in G.basis if all(not any(m[:last]) for m in g.rep)]
    if not univariate:
        raise NotZeroDimensional(f"No univariate element in {I.ring.variables[last]} for {I}")
    roots = rational_roots(univariate[-1], last)
    if last == 0:
        return [(r,) for r in roots]

    name = I.ring.variables[last]
    rest = PolyRing(I.ring.variables[:last])
    solutions: List[Tuple[Scalar, ...]] = []
    for r in roots:
        branch = Ideal.of(rest, (specialize(g, name, r, rest) for g in G.basis))
        for point in _solve(branch):
            solutions.append(point + (r,))
    return solutions


def local_multiplicity(I: Ideal, point: Sequence[Scalar], total: Optional[int] = None) -> int:
    """dim(A/I) - dim(A/(I : m_p^∞))."""
    total = zero_dim_vector_dimension(I) if total is None else total
    rest = saturate(I, maximal_ideal(I.ring, point))
    remaining = 0 if reduced_groebner(rest).is_unit() else zero_dim_vector_dimension(rest)
    return total - remaining


def rational_points_zero_dim(I: Ideal) -> RationalPoints:
    """All rational solutions of a zero-dimensional ideal."""
    total = zero_dim_vector_dimension(I)
    if total == 0:
        return RationalPoints((), 0, 0)
    points = sorted(set(_solve(I)))
    multiplicity = sum(local_multiplicity(I, p, total) for p in points)
    if multiplicity < total:
        logger.warning(
            f"Ideal {I} has {len(points)} rational points carrying multiplicity "
            f"{multiplicity} of {total}; the remainder is non-rational"
        )
    return RationalPoints(tuple(points), total, multiplicity)
