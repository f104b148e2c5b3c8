"""
Buchberger engine
Reduced Groebner bases with the Gebauer-Moeller pair update, a degree-ordered
pair queue, an S-pair/term budget and a per-process basis cache
"""
import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from sympy.polys.orderings import MonomialOrder, grevlex

from ...utils.errors import BudgetExceeded, RingMismatch
from ...utils.settings import get_settings
from ..poly_core.rings import Monomial, Polynomial
from .ideal import Ideal
from .orders import order_name

logger = logging.getLogger(__name__)

_CACHE: Dict[Tuple, "GroebnerBasis"] = {}
_CACHE_LOCK = threading.Lock()


def spoly(f, g):
    """S-polynomial of two monic sympy polynomials."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(R.monomial_div(lcm, f.LM)) - g.mul_monom(R.monomial_div(lcm, g.LM))


def select(G, P: Set[Tuple[int, int]]) -> Tuple[int, int]:
    """Pair with the smallest lcm, by degree first and then by the ring order."""
    R = G[0].ring

    def key(p):
        lcm = R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)
        return (sum(lcm), R.order(lcm), p)

    return min(P, key=key)


def update(G: list, P: Set[Tuple[int, int]], f) -> Tuple[list, Set[Tuple[int, int]]]:
    """Add f to G and prune pairs with the coprime and chain criteria."""
    lmf = f.LM
    lmG = [g.LM for g in G]
    R = f.ring
    lcm = R.monomial_lcm
    mul = R.monomial_mul
    div = R.monomial_div

    P = {
        p for p in P
        if (not div(lcm(lmG[p[0]], lmG[p[1]]), lmf)
            or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf)
            or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf))
    }
    lcm_dict: Dict[Monomial, List[int]] = {}
    for i in range(len(G)):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal_lcms: List[Monomial] = []
    for L in sorted(lcm_dict.keys(), key=R.order):
        if all(not div(L, L_) for L_ in minimal_lcms):
            minimal_lcms.append(L)
    new_pairs = set()
    for L in minimal_lcms:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_dict[L]):
            new_pairs.add((min(lcm_dict[L]), len(G)))
    return G + [f], P | new_pairs


def minimalize(G: list) -> list:
    if not G:
        return []
    R = G[0].ring
    Gmin = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in Gmin):
            Gmin.append(f)
    return Gmin


def interreduce(G: list) -> list:
    reduced = []
    for i in range(len(G)):
        g = G[i].rem(G[:i] + G[i + 1:])
        reduced.append(g.monic())
    return reduced


def buchberger(F: list, s_pair_budget: int, max_terms: int) -> Tuple[list, int]:
    """Reduced basis of sympy polynomials F and the number of S-pairs processed."""
    F = [f for f in F if f]
    if not F:
        return [], 0
    R = F[0].ring
    G: list = []
    P: Set[Tuple[int, int]] = set()
    for f in F:
        G, P = update(G, P, f.monic())

    processed = 0
    while P:
        i, j = select(G, P)
        P.remove((i, j))
        processed += 1
        if processed > s_pair_budget:
            raise BudgetExceeded(
                f"S-pair budget of {s_pair_budget} exhausted with {len(G)} basis elements",
                witness={"s_pairs": processed - 1, "basis_size": len(G)},
            )
        r = spoly(G[i], G[j]).rem(G)
        if r:
            if len(r) > max_terms:
                raise BudgetExceeded(
                    f"Reduced S-polynomial has {len(r)} terms, above the cap of {max_terms}",
                    witness={"terms": len(r)},
                )
            G, P = update(G, P, r.monic())
            if r.LM == R.zero_monom:
                logger.debug("Unit element found, ideal is the whole ring")
                return [R.one], processed

    basis = interreduce(minimalize(G))
    basis.sort(key=lambda g: R.order(g.LM), reverse=True)
    return basis, processed


@dataclass(frozen=True)
class GroebnerBasis:
    ideal: Ideal
    order: MonomialOrder
    basis: Tuple[Polynomial, ...]
    s_pairs: int = 0
    reps: tuple = field(default=(), repr=False, compare=False)

    @property
    def ring(self):
        return self.ideal.ring

    def leading_monomials(self) -> List[Monomial]:
        return [g.LM for g in self.reps]

    def is_unit(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials())

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.ring != self.ring:
            raise RingMismatch(f"Polynomial ring [{p.ring}] differs from basis ring [{self.ring}]")
        if not self.reps or not p:
            return p
        return Polynomial.from_sympy(self.ring, p.in_order(self.order).rem(list(self.reps)))

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)

    def all_s_pairs_reduce_to_zero(self) -> bool:
        """Buchberger's criterion on the final basis."""
        G = list(self.reps)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                if spoly(G[i], G[j]).rem(G):
                    return False
        return True

    def is_reduced(self) -> bool:
        G = list(self.reps)
        R = G[0].ring if G else None
        for i, g in enumerate(G):
            if g.LC != 1:
                return False
            others = [h.LM for k, h in enumerate(G) if k != i]
            for m in g.keys():
                if any(R.monomial_div(m, lm) is not None for lm in others):
                    return False
        return True

    def __str__(self):
        return "[" + ", ".join(str(g) for g in self.basis) + "]"


def reduced_groebner(
    ideal: Ideal,
    order: MonomialOrder = grevlex,
    use_cache: bool = True,
    s_pair_budget: Optional[int] = None,
) -> GroebnerBasis:
    """The unique reduced Groebner basis of ``ideal`` under ``order``."""
    key = ideal.cache_key() + (order,)
    if use_cache:
        cached = _CACHE.get(key)
        if cached is not None:
            return GroebnerBasis(ideal, order, cached.basis, cached.s_pairs, cached.reps)

    settings = get_settings()
    budget = s_pair_budget or settings.s_pair_budget
    F = [g.in_order(order) for g in ideal.generators]
    reps, processed = buchberger(F, budget, settings.max_terms)
    basis = tuple(Polynomial.from_sympy(ideal.ring, g) for g in reps)
    result = GroebnerBasis(ideal, order, basis, processed, tuple(reps))
    logger.debug(
        f"Groebner basis in [{ideal.ring}] under {order_name(order)}: "
        f"{len(ideal.generators)} generators -> {len(basis)} elements, {processed} S-pairs"
    )
    if use_cache:
        with _CACHE_LOCK:
            _CACHE.setdefault(key, result)
    return result


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()
