"""
Exponent lattices and affine semigroups
Smith normal form membership and coset labels for the lattice spanned by
monomial image exponents, plus bounded semigroup factorization
"""
import logging
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from ...utils.errors import BadParameters

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class ExponentLattice:
    """The subgroup of Z^n generated by ``generators``."""

    def __init__(self, generators: Sequence[Sequence[int]], n: int):
        self.n = n
        self.generators = [tuple(int(x) for x in g) for g in generators]
        gens = [g for g in self.generators if any(g)]
        if not gens:
            self.invariants: List[int] = []
            self._s = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            return
        A = DomainMatrix([[ZZ(g[i]) for g in gens] for i in range(n)], (n, len(gens)), ZZ)
        smf, s, _ = smith_normal_decomp(A)
        S = smf.to_list()
        self.invariants = [abs(int(S[i][i])) for i in range(min(smf.shape)) if S[i][i]]
        self._s = [[int(x) for x in row] for row in s.to_list()]

    @property
    def rank(self) -> int:
        return len(self.invariants)

    def index(self) -> Optional[int]:
        """[Z^n : L], or None when L has rank below n."""
        if self.rank < self.n:
            return None
        result = 1
        for d in self.invariants:
            result *= d
        return result

    def _transform(self, v: Sequence[int]) -> List[int]:
        return [sum(a * b for a, b in zip(row, v)) for row in self._s]

    def coset_id(self, v: Sequence[int]) -> Vector:
        """Canonical label of v + L in Z^n / L."""
        w = self._transform(v)
        r = self.rank
        return tuple(w[i] % self.invariants[i] for i in range(r)) + tuple(w[r:])

    def contains(self, v: Sequence[int]) -> bool:
        return not any(self.coset_id(v))


def nonnegative_vectors(n: int, degree: int) -> Iterator[Vector]:
    """Exponent vectors of total degree exactly ``degree``, descending lex."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in nonnegative_vectors(n - 1, degree - first):
            yield (first,) + rest


def vectors_up_to(n: int, bound: int) -> Iterator[Vector]:
    for degree in range(bound + 1):
        yield from nonnegative_vectors(n, degree)


class SemigroupFactorizer:
    """Lexicographically smallest c with sum c_i a_i = v, memoised."""

    def __init__(self, generators: Sequence[Sequence[int]]):
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if not any(g):
                raise BadParameters("A semigroup generator is the zero vector")
            if any(x < 0 for x in g):
                raise BadParameters(f"Semigroup generator {g} has a negative entry")
        self._solve = lru_cache(maxsize=None)(self._solve_uncached)

    def _solve_uncached(self, i: int, v: Vector) -> Optional[Vector]:
        if not any(v):
            return (0,) * (len(self.generators) - i)
        if i == len(self.generators):
            return None
        a = self.generators[i]
        c = 0
        rest = v
        while all(x >= 0 for x in rest):
            tail = self._solve(i + 1, rest)
            if tail is not None:
                return (c,) + tail
            c += 1
            rest = tuple(x - y for x, y in zip(rest, a))
        return None

    def factor(self, v: Sequence[int]) -> Optional[Vector]:
        return self._solve(0, tuple(v))

    def contains(self, v: Sequence[int]) -> bool:
        return self.factor(v) is not None


def fullness_witness(lattice: ExponentLattice, semigroup: SemigroupFactorizer, bound: int) -> Optional[Vector]:
    """First lattice point of the orthant up to ``bound`` missing from the semigroup."""
    for v in vectors_up_to(lattice.n, bound):
        if lattice.contains(v) and not semigroup.contains(v):
            return v
    return None


def coset_representatives(lattice: ExponentLattice, search_bound: int) -> List[Vector]:
    """Smallest-degree nonnegative representative of each coset of Z^n / L."""
    index = lattice.index()
    if index is None:
        return []
    seen = {}
    for v in vectors_up_to(lattice.n, search_bound):
        label = lattice.coset_id(v)
        if label not in seen:
            seen[label] = v
            if len(seen) == index:
                break
    return sorted(seen.values(), key=lambda v: (sum(v), tuple(-x for x in v)))
