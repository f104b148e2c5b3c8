"""
Multigradings
Integer weight matrices, homogeneity checks and grading discovery through
integer kernels in Smith and Hermite normal form
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form, smith_normal_decomp

from ...utils.errors import BadParameters, InhomogeneousIdeal
from ..groebner.ideal import Ideal
from ..poly_core.rings import Monomial, Polynomial

logger = logging.getLogger(__name__)

DegreeVector = Tuple[int, ...]


@dataclass(frozen=True)
class MultiGrading:
    """r x n integer weight matrix; column j is the degree of variable j."""

    weights: Tuple[Tuple[int, ...], ...]
    arity: int

    def __post_init__(self):
        rows = tuple(tuple(int(w) for w in row) for row in self.weights)
        for row in rows:
            if len(row) != self.arity:
                raise BadParameters(f"Weight row {row} does not have {self.arity} columns")
        object.__setattr__(self, "weights", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], arity: Optional[int] = None) -> "MultiGrading":
        rows = [tuple(r) for r in rows]
        if arity is None:
            if not rows:
                raise BadParameters("Arity is required for a rank-0 grading")
            arity = len(rows[0])
        return cls(tuple(rows), arity)

    @classmethod
    def standard(cls, arity: int) -> "MultiGrading":
        return cls(((1,) * arity,), arity)

    @property
    def rank(self) -> int:
        return len(self.weights)

    def column(self, j: int) -> DegreeVector:
        return tuple(row[j] for row in self.weights)

    def degree_of(self, monomial: Monomial) -> DegreeVector:
        return tuple(sum(w * e for w, e in zip(row, monomial)) for row in self.weights)

    def scaled(self, factors: Sequence[int]) -> "MultiGrading":
        """Multiply row i by factors[i]."""
        if len(factors) != self.rank:
            raise BadParameters(f"Need {self.rank} scale factors, got {len(factors)}")
        return MultiGrading(tuple(tuple(f * w for w in row) for f, row in zip(factors, self.weights)), self.arity)

    def with_row(self, row: Sequence[int]) -> "MultiGrading":
        return MultiGrading(self.weights + (tuple(row),), self.arity)

    def with_column(self, column: Sequence[int]) -> "MultiGrading":
        if len(column) != self.rank:
            raise BadParameters(f"New column {tuple(column)} does not have {self.rank} entries")
        return MultiGrading(tuple(row + (c,) for row, c in zip(self.weights, column)), self.arity + 1)

    def row_nonnegative(self, i: int) -> bool:
        return all(w >= 0 for w in self.weights[i])

    def as_lists(self) -> List[List[int]]:
        return [list(row) for row in self.weights]


@dataclass(frozen=True)
class NotHomogeneous:
    """Two terms of one polynomial with different degrees."""

    first: Polynomial
    second: Polynomial
    first_degree: DegreeVector
    second_degree: DegreeVector

    def describe(self) -> str:
        return f"{self.first} has degree {self.first_degree} but {self.second} has degree {self.second_degree}"


def homogeneous_degree(p: Polynomial, W: MultiGrading) -> Union[DegreeVector, NotHomogeneous]:
    """Common W-degree of the terms of p, or a witness pair of terms."""
    if W.arity != p.ring.arity:
        raise BadParameters(f"Grading has {W.arity} columns but ring [{p.ring}] has {p.ring.arity} variables")
    terms = list(p.iter_terms())
    if not terms:
        return (0,) * W.rank
    first_monom, first_coeff = terms[0]
    degree = W.degree_of(first_monom)
    for monom, coeff in terms[1:]:
        other = W.degree_of(monom)
        if other != degree:
            return NotHomogeneous(
                p.ring.monomial(first_monom, first_coeff),
                p.ring.monomial(monom, coeff),
                degree,
                other,
            )
    return degree


def is_homogeneous_ideal(I: Ideal, W: MultiGrading) -> bool:
    return all(not isinstance(homogeneous_degree(g, W), NotHomogeneous) for g in I.generators)


def require_homogeneous(I: Ideal, W: MultiGrading) -> None:
    for g in I.generators:
        degree = homogeneous_degree(g, W)
        if isinstance(degree, NotHomogeneous):
            raise InhomogeneousIdeal(
                f"Generator {g} is not homogeneous: {degree.describe()}",
                witness={"generator": str(g), "terms": [str(degree.first), str(degree.second)]},
            )


def _normalize_sign(row: Sequence[int]) -> Tuple[int, ...]:
    for w in row:
        if w:
            return tuple(row) if w > 0 else tuple(-x for x in row)
    return tuple(row)


def integer_kernel(rows: Sequence[Sequence[int]], n: int) -> List[Tuple[int, ...]]:
    """Basis of {v in Z^n : D v = 0} in Hermite normal form."""
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
    D = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), n), ZZ)
    smf, _, t = smith_normal_decomp(D)
    # D t_j = s^-1 (smf)_j, so t_j is in the kernel exactly when column j of smf is zero
    S = smf.to_list()
    T = t.to_list()
    basis = [
        [int(T[i][j]) for i in range(n)]
        for j in range(n)
        if all(not S[i][j] for i in range(len(S)))
    ]
    if not basis:
        return []
    B = DomainMatrix([[ZZ(basis[j][i]) for j in range(len(basis))] for i in range(n)], (n, len(basis)), ZZ)
    H = hermite_normal_form(B).to_list()
    columns = [tuple(int(H[i][j]) for i in range(n)) for j in range(len(H[0]) if H else 0)]
    return [_normalize_sign(c) for c in columns if any(c)]


def difference_matrix(I: Ideal) -> List[Tuple[int, ...]]:
    """Exponent differences of each generator's terms against its leading term."""
    rows = []
    for g in I.generators:
        terms = [m for m, _ in g.iter_terms()]
        for m in terms[1:]:
            rows.append(tuple(a - b for a, b in zip(terms[0], m)))
    return rows


def discover_grading(I: Ideal, max_rank: Optional[int] = None) -> MultiGrading:
    """Lattice of weight rows making every generator of I homogeneous."""
    n = I.ring.arity
    kernel = integer_kernel(difference_matrix(I), n)
    if max_rank is not None:
        kernel = kernel[:max_rank]
    logger.info(f"Discovered a rank-{len(kernel)} grading for {len(I.generators)} generators in [{I.ring}]")
    return MultiGrading(tuple(kernel), n)


@dataclass
class RowCheck:
    name: str
    row: Tuple[int, ...]
    homogeneous: bool
    witness: Optional[str] = None
    degrees: Optional[Tuple[DegreeVector, DegreeVector]] = None


@dataclass
class GradingDiscovery:
    grading: MultiGrading
    checks: List[RowCheck] = field(default_factory=list)

    @property
    def rank(self) -> int:
        return self.grading.rank

    @property
    def consistent(self) -> bool:
        return all(c.homogeneous for c in self.checks)


def grading_discovery_report(
    I: Ideal,
    named_rows: Optional[Dict[str, Sequence[int]]] = None,
    max_rank: Optional[int] = None,
) -> GradingDiscovery:
    """Discover a grading and test named candidate rows against the generators."""
    report = GradingDiscovery(discover_grading(I, max_rank))
    for name, row in (named_rows or {}).items():
        W = MultiGrading((tuple(row),), I.ring.arity)
        check = RowCheck(name, tuple(row), True)
        for g in I.generators:
            degree = homogeneous_degree(g, W)
            if isinstance(degree, NotHomogeneous):
                check.homogeneous = False
                check.witness = str(g)
                check.degrees = (degree.first_degree, degree.second_degree)
                break
        if not check.homogeneous:
            logger.warning(f"Row {name} = {row} is not a grading: {check.witness} is inhomogeneous")
        report.checks.append(check)
    return report
