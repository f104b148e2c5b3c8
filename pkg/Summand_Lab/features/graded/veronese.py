"""
Veronese presentations
The degree-d Veronese subring of a weighted polynomial ring, presented by
generators and relations together with its embedding
"""
import logging
from typing import List, Optional, Sequence, Tuple

from ...utils.errors import BadParameters
from ..poly_core.rings import Monomial, PolyRing
from ..ringmap.operations import kernel
from ..ringmap.quotient import QuotientRing, RingMap
from .grading import MultiGrading
from .pieces import monomials_of_degree

logger = logging.getLogger(__name__)


def veronese_generators(var_weights: Sequence[int], d: int) -> List[Monomial]:
    """Monomials of weighted degree exactly d, in descending lex order."""
    W = MultiGrading.from_rows([tuple(var_weights)])
    return sorted(monomials_of_degree(W, (d,), d), reverse=True)


def veronese_presentation(n_vars: int, var_weights: Optional[Sequence[int]] = None, d: int = 2) -> Tuple:
    """(presented ring, embedding into the ambient polynomial ring)."""
    if n_vars < 1:
        raise BadParameters(f"Need at least one variable, got {n_vars}")
    if d < 1:
        raise BadParameters(f"Veronese degree must be at least 1, got {d}")
    weights = tuple(var_weights) if var_weights is not None else (1,) * n_vars
    if len(weights) != n_vars or any(w <= 0 for w in weights):
        raise BadParameters(f"Need {n_vars} positive weights, got {weights}")

    ambient = PolyRing(tuple(f"u{i}" for i in range(n_vars)))
    target = QuotientRing.free(ambient, MultiGrading.from_rows([weights]))
    monomials = veronese_generators(weights, d)
    if not monomials:
        raise BadParameters(f"No monomials of weighted degree {d} for weights {weights}")
    ring = PolyRing(tuple(f"y{i}" for i in range(len(monomials))))
    images = tuple(ambient.monomial(m) for m in monomials)
    free = QuotientRing.free(ring)
    embedding = RingMap(free, target, images, name=f"veronese({n_vars},{d})")
    relations = kernel(embedding)
    presented = QuotientRing(ring, relations, MultiGrading.standard(ring.arity))
    logger.info(f"Veronese d={d} of weights {weights}: {ring.arity} generators, {len(relations.generators)} relations")
    return presented, RingMap(presented, target, images, name=embedding.name)
