"""
Skew-symmetric matrices and Pfaffians
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from ...utils.errors import BadIndex, BadParameters
from ..poly_core.calculus import determinant
from ..poly_core.parser import parse_polynomial
from ..poly_core.rings import PolyRing, Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkewMatrix:
    """size x size skew matrix; ``upper`` holds the entries (i, j), 1 <= i < j <= size."""

    ring: PolyRing
    size: int
    upper: Tuple[Tuple[Tuple[int, int], Polynomial], ...]

    @classmethod
    def from_upper_rows(cls, ring: PolyRing, rows: Sequence[Sequence[str]]) -> "SkewMatrix":
        """Row i lists the entries (i, i+1), ..., (i, size) as polynomial text."""
        size = len(rows) + 1
        entries: Dict[Tuple[int, int], Polynomial] = {}
        for i, row in enumerate(rows, start=1):
            if len(row) != size - i:
                raise BadParameters(f"Row {i} of a {size}x{size} skew matrix needs {size - i} entries, got {len(row)}")
            for j, text in enumerate(row, start=i + 1):
                entries[(i, j)] = parse_polynomial(text, ring)
        return cls(ring, size, tuple(sorted(entries.items())))

    def entry(self, i: int, j: int) -> Polynomial:
        if not (1 <= i <= self.size and 1 <= j <= self.size):
            raise BadIndex(f"Entry ({i}, {j}) is outside a {self.size}x{self.size} matrix")
        if i == j:
            return self.ring.zero()
        if i > j:
            return -self.entry(j, i)
        return dict(self.upper)[(i, j)]

    def rows(self, indices: Sequence[int]) -> List[List[Polynomial]]:
        return [[self.entry(i, j) for j in indices] for i in indices]

    def remaining(self, omit_index: int) -> List[int]:
        if not 1 <= omit_index <= self.size:
            raise BadIndex(
                f"Index {omit_index} is outside 1..{self.size}",
                witness={"omit_index": omit_index, "size": self.size},
            )
        return [k for k in range(1, self.size + 1) if k != omit_index]

    def as_strings(self) -> List[List[str]]:
        indices = list(range(1, self.size + 1))
        return [[str(p) for p in row] for row in self.rows(indices)]


def _pfaffian_of(M: SkewMatrix, indices: List[int]) -> Polynomial:
    """Expansion along the first index: sum over j of (-1)^(j+1) m_{1j} Pf(minor)."""
    if not indices:
        return M.ring.one()
    first, rest = indices[0], indices[1:]
    total = M.ring.zero()
    for position, j in enumerate(rest):
        entry = M.entry(first, j)
        if not entry:
            continue
        minor = rest[:position] + rest[position + 1:]
        term = entry * _pfaffian_of(M, minor)
        total = total + term if position % 2 == 0 else total - term
    return total


def pfaffian(M: SkewMatrix, omit_index: int) -> Polynomial:
    """Pfaffian of the even skew submatrix left after deleting row and column ``omit_index``."""
    if M.size % 2 == 0:
        raise BadParameters(f"Omitting one index needs an odd size, got {M.size}")
    return _pfaffian_of(M, M.remaining(omit_index))


def all_pfaffians(M: SkewMatrix) -> List[Polynomial]:
    return [pfaffian(M, k) for k in range(1, M.size + 1)]


def skew_determinant(M: SkewMatrix, omit_index: int) -> Polynomial:
    """Determinant of the submatrix omitting ``omit_index``."""
    return determinant(M.ring, M.rows(M.remaining(omit_index)))
