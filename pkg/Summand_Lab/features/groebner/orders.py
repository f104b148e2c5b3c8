"""
Monomial orders
lex, degrevlex, block elimination and weight-refined orders as sympy MonomialOrder keys
"""
from typing import Sequence, Tuple

from sympy.polys.orderings import MonomialOrder, grevlex, lex

from ...utils.errors import BadParameters

degrevlex = grevlex


class BlockOrder(MonomialOrder):
    """degrevlex on the first ``k`` variables, then degrevlex on the rest.

    Any monomial involving the first block is larger than every monomial
    free of it, which makes this an elimination order for that block.
    """

    is_global = True

    def __init__(self, k: int):
        if k < 0:
            raise BadParameters(f"Block size must be nonnegative, got {k}")
        self.k = k
        self.alias = f"block:{k}"

    def __call__(self, monomial):
        return (grevlex(monomial[: self.k]), grevlex(monomial[self.k:]))

    def __eq__(self, other):
        return isinstance(other, BlockOrder) and other.k == self.k

    def __hash__(self):
        return hash(("block", self.k))

    def __repr__(self):
        return f"BlockOrder({self.k})"


class WeightOrder(MonomialOrder):
    """Compare by weight first, break ties with ``tiebreak``."""

    is_global = True

    def __init__(self, weights: Sequence[int], tiebreak: MonomialOrder = grevlex):
        weights = tuple(int(w) for w in weights)
        if any(w < 0 for w in weights):
            raise BadParameters(f"Weights must be nonnegative for a global order, got {weights}")
        self.weights: Tuple[int, ...] = weights
        self.tiebreak = tiebreak
        self.alias = "weight:" + ",".join(str(w) for w in weights)

    def __call__(self, monomial):
        return (sum(w * e for w, e in zip(self.weights, monomial)), self.tiebreak(monomial))

    def __eq__(self, other):
        return isinstance(other, WeightOrder) and (other.weights, other.tiebreak) == (self.weights, self.tiebreak)

    def __hash__(self):
        return hash(("weight", self.weights, self.tiebreak))

    def __repr__(self):
        return f"WeightOrder({self.weights}, {self.tiebreak!r})"


def monomial_order(name: str) -> MonomialOrder:
    """Order from its command-line name: lex, degrevlex, block:k, weight:w1,w2,..."""
    text = name.strip().lower()
    if text == "lex":
        return lex
    if text in ("degrevlex", "grevlex"):
        return grevlex
    if text.startswith("block:"):
        try:
            return BlockOrder(int(text.split(":", 1)[1]))
        except ValueError:
            raise BadParameters(f"Bad block order {name!r}")
    if text.startswith("weight:"):
        try:
            weights = [int(w) for w in text.split(":", 1)[1].split(",")]
        except ValueError:
            raise BadParameters(f"Bad weight order {name!r}")
        return WeightOrder(weights)
    raise BadParameters(f"Unknown monomial order {name!r}; use lex, degrevlex, block:k or weight:w1,...")


def order_name(order: MonomialOrder) -> str:
    if order == grevlex:
        return "degrevlex"
    return str(order)
