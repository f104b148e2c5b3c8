"""
Graded pieces
Counting standard monomials of a fixed multidegree under a total-degree bound
"""
import logging
from typing import Iterator, List, Optional, Sequence

from ...utils.errors import BadParameters
from ...utils.settings import get_settings
from ..groebner.buchberger import reduced_groebner
from ..poly_core.rings import Monomial
from .grading import DegreeVector, MultiGrading, require_homogeneous

logger = logging.getLogger(__name__)


def _divides(a: Monomial, b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomials_of_degree(
    W: MultiGrading,
    d: DegreeVector,
    degree_bound: int,
    avoid: Sequence[Monomial] = (),
) -> Iterator[Monomial]:
    """Exponent vectors of W-degree d and total degree <= bound, skipping multiples of ``avoid``.

    Rows with weights of one sign bound the search from that side.
    """
    n = W.arity
    if len(d) != W.rank:
        raise BadParameters(f"Degree {tuple(d)} does not match grading rank {W.rank}")
    signs = []
    for row in W.weights:
        if all(w >= 0 for w in row):
            signs.append(1)
        elif all(w <= 0 for w in row):
            signs.append(-1)
        else:
            signs.append(0)

    current = [0] * n
    partial = [0] * W.rank

    def exceeded() -> bool:
        for i, s in enumerate(signs):
            if s == 1 and partial[i] > d[i]:
                return True
            if s == -1 and partial[i] < d[i]:
                return True
        return False

    def blocked() -> bool:
        return any(_divides(lm, current) for lm in avoid)

    def walk(j: int, remaining: int) -> Iterator[Monomial]:
        if j == n:
            if tuple(partial) == tuple(d):
                yield tuple(current)
            return
        column = W.column(j)
        e = 0
        while e <= remaining:
            if e:
                current[j] = e
                for i, w in enumerate(column):
                    partial[i] += w
                if exceeded() or blocked():
                    break
            yield from walk(j + 1, remaining - e)
            e += 1
        for i, w in enumerate(column):
            partial[i] -= w * current[j]
        current[j] = 0

    yield from walk(0, degree_bound)


def graded_piece_monomials(Q, W: MultiGrading, d: DegreeVector, degree_bound: Optional[int] = None) -> List[Monomial]:
    """Standard monomials of Q of W-degree d, total degree <= bound."""
    if W.arity != Q.ambient.arity:
        raise BadParameters(f"Grading has {W.arity} columns but ring [{Q.ambient}] has {Q.ambient.arity}")
    require_homogeneous(Q.ideal, W)
    bound = degree_bound if degree_bound is not None else get_settings().graded_degree_bound
    leads: List[Monomial] = []
    if not Q.ideal.is_zero():
        G = reduced_groebner(Q.ideal)
        if G.is_unit():
            return []
        leads = G.leading_monomials()
    found = list(monomials_of_degree(W, tuple(d), bound, leads))
    logger.debug(f"Degree {tuple(d)} piece of {Q}: {len(found)} standard monomials up to degree {bound}")
    return found


def graded_piece_dimension(Q, W: MultiGrading, d: DegreeVector, degree_bound: Optional[int] = None) -> int:
    """Dimension of the degree-d piece, spanned by monomials of total degree <= bound."""
    return len(graded_piece_monomials(Q, W, d, degree_bound))
