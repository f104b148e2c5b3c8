"""
Exact sparse multivariate polynomials over the rationals.

A ``PolyRing`` is an ordered tuple of variable names; a ``Polynomial`` is an
immutable wrapper around a sympy sparse ``PolyElement`` living in the
matching degrevlex sympy ring. All arithmetic is exact.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import MonomialOrder, grevlex
from sympy.polys.rings import PolyRing as SympyPolyRing

from ...utils.errors import ArityMismatch, BadParameters, RingMismatch, UnknownVariable

logger = logging.getLogger(__name__)

Scalar = type(QQ.one)
Monomial = Tuple[int, ...]
ScalarLike = Union[int, Fraction, Scalar]


def to_scalar(value: ScalarLike) -> Scalar:
    """Convert an int, Fraction or QQ element into a reduced QQ element."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, bool):
        raise BadParameters(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Scalar):
        return value
    raise BadParameters(f"Not a rational number: {value!r}")


def scalar_str(value: Scalar) -> str:
    numer, denom = int(QQ.numer(value)), int(QQ.denom(value))
    return str(numer) if denom == 1 else f"{numer}/{denom}"


@lru_cache(maxsize=None)
def sympy_ring(variables: Tuple[str, ...], order: MonomialOrder = grevlex) -> SympyPolyRing:
    """Shared sympy ring for a variable tuple and monomial order."""
    return SympyPolyRing(tuple(Symbol(name) for name in variables), QQ, order)


@dataclass(frozen=True)
class PolyRing:
    """Ordered, duplicate-free list of variable names."""

    variables: Tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise BadParameters("A polynomial ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise BadParameters(f"Duplicate variable names in {self.variables}")

    @classmethod
    def of(cls, *names: Union[str, Iterable[str]]) -> "PolyRing":
        """PolyRing.of("x", "y") or PolyRing.of("x,y") or PolyRing.of(["x", "y"])."""
        flat: List[str] = []
        for name in names:
            if isinstance(name, str):
                flat.extend(part.strip() for part in name.split(",") if part.strip())
            else:
                flat.extend(name)
        return cls(tuple(flat))

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def sympy(self) -> SympyPolyRing:
        return sympy_ring(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UnknownVariable(f"Unknown variable {name!r} in ring {self}")

    def gen(self, name: str) -> "Polynomial":
        return Polynomial(self, self.sympy.gens[self.index(name)])

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(Polynomial(self, g) for g in self.sympy.gens)

    def zero(self) -> "Polynomial":
        return Polynomial(self, self.sympy.zero)

    def one(self) -> "Polynomial":
        return Polynomial(self, self.sympy.one)

    def constant(self, value: ScalarLike) -> "Polynomial":
        return Polynomial(self, self.sympy.ground_new(to_scalar(value)))

    def monomial(self, exponents: Sequence[int], coeff: ScalarLike = 1) -> "Polynomial":
        if len(exponents) != self.arity:
            raise ArityMismatch(f"Exponent vector {tuple(exponents)} does not match arity {self.arity}")
        if any(e < 0 for e in exponents):
            raise BadParameters(f"Negative exponent in {tuple(exponents)}")
        return self.from_terms({tuple(exponents): coeff})

    def from_terms(self, terms: Dict[Monomial, ScalarLike]) -> "Polynomial":
        acc: Dict[Monomial, Scalar] = {}
        for monom, coeff in terms.items():
            key = tuple(monom)
            acc[key] = acc.get(key, QQ.zero) + to_scalar(coeff)
        return Polynomial(self, self.sympy.from_dict({m: c for m, c in acc.items() if c}))

    def __str__(self):
        return ",".join(self.variables)


class Polynomial:
    """Immutable exact polynomial; terms map exponent tuples to QQ scalars."""

    __slots__ = ("ring", "rep", "_hash")

    def __init__(self, ring: PolyRing, rep):
        self.ring = ring
        self.rep = rep
        self._hash = None

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self.rep)

    def iter_terms(self) -> Iterator[Tuple[Monomial, Scalar]]:
        """Terms in descending degrevlex order."""
        return iter(sorted(self.rep.items(), key=lambda t: grevlex(t[0]), reverse=True))

    def is_zero(self) -> bool:
        return not self.rep

    def __bool__(self):
        return bool(self.rep)

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.rep)

    def constant_term(self) -> Scalar:
        return self.rep.get((0,) * self.ring.arity, QQ.zero)

    def total_degree(self) -> int:
        """Largest total degree of a term; -1 for the zero polynomial."""
        return max((sum(m) for m in self.rep), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.rep}) <= 1

    def is_monomial_term(self) -> bool:
        return len(self.rep) == 1

    def variables_used(self) -> Tuple[str, ...]:
        used = set()
        for monom in self.rep:
            used.update(i for i, e in enumerate(monom) if e)
        return tuple(self.ring.variables[i] for i in sorted(used))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatch(f"Ring mismatch: [{self.ring}] vs [{other.ring}]")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        return Polynomial(self.ring, self.rep + self._coerce(other).rep)

    __radd__ = __add__

    def __sub__(self, other):
        return Polynomial(self.ring, self.rep - self._coerce(other).rep)

    def __rsub__(self, other):
        return Polynomial(self.ring, self._coerce(other).rep - self.rep)

    def __mul__(self, other):
        return Polynomial(self.ring, self.rep * self._coerce(other).rep)

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(self.ring, -self.rep)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise BadParameters(f"Exponent must be a nonnegative integer, got {n!r}")
        return Polynomial(self.ring, self.rep ** n)

    def scale(self, value: ScalarLike) -> "Polynomial":
        return Polynomial(self.ring, self.rep.mul_ground(to_scalar(value)))

    def monic(self, order: MonomialOrder = grevlex) -> "Polynomial":
        if not self.rep:
            return self
        lead = max(self.rep, key=order)
        return Polynomial(self.ring, self.rep.quo_ground(self.rep[lead]))

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and dict(self.rep) == dict(other.rep)
        if isinstance(other, (int, Fraction, Scalar)):
            return dict(self.rep) == dict(self.ring.constant(other).rep)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.rep.items())))
        return self._hash

    # -- conversion ---------------------------------------------------------

    def in_order(self, order: MonomialOrder):
        """The same polynomial as an element of the sympy ring with ``order``."""
        target = sympy_ring(self.ring.variables, order)
        return target.from_dict(dict(self.rep))

    @classmethod
    def from_sympy(cls, ring: PolyRing, element) -> "Polynomial":
        return cls(ring, ring.sympy.from_dict(dict(element)))

    def to_ring(self, target: PolyRing, renaming: Optional[Dict[str, str]] = None) -> "Polynomial":
        """Re-express in ``target`` by variable name (after optional renaming).

        Variables with a nonzero exponent must exist in ``target``.
        """
        renaming = renaming or {}
        positions = []
        for name in self.ring.variables:
            mapped = renaming.get(name, name)
            positions.append(target.variables.index(mapped) if mapped in target.variables else None)
        terms: Dict[Monomial, Scalar] = {}
        for monom, coeff in self.rep.items():
            new = [0] * target.arity
            for i, e in enumerate(monom):
                if not e:
                    continue
                if positions[i] is None:
                    raise UnknownVariable(
                        f"Variable {self.ring.variables[i]!r} does not exist in ring [{target}]"
                    )
                new[positions[i]] += e
            key = tuple(new)
            terms[key] = terms.get(key, QQ.zero) + coeff
        return target.from_terms(terms)

    # -- printing -----------------------------------------------------------

    def __str__(self):
        if not self.rep:
            return "0"
        pieces: List[str] = []
        for monom, coeff in self.iter_terms():
            factors = []
            for name, e in zip(self.ring.variables, monom):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            negative = coeff < 0
            magnitude = -coeff if negative else coeff
            if not factors:
                body = scalar_str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = scalar_str(magnitude) + "*" + "*".join(factors)
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f"- {body}" if negative else f"+ {body}")
        return " ".join(pieces)

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ring=[{self.ring}])"


def poly_arith(a: Polynomial, b: Union[Polynomial, int], op: str) -> Polynomial:
    """Exact add/sub/mul of two polynomials, or pow with an integer exponent."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        if isinstance(b, Polynomial):
            if not b.is_constant() or QQ.denom(b.constant_term()) != 1:
                raise BadParameters("pow needs a nonnegative integer exponent")
            b = int(QQ.numer(b.constant_term()))
        return a ** b
    raise BadParameters(f"Unknown operation {op!r}")


def substitute(p: Polynomial, images: Sequence[Polynomial], target: Optional[PolyRing] = None) -> Polynomial:
    """Evaluate ``p`` at ``images`` (one per source variable) in their common ring."""
    if len(images) != p.ring.arity:
        raise ArityMismatch(f"Expected {p.ring.arity} images, got {len(images)}")
    if target is None:
        target = images[0].ring
    for image in images:
        if image.ring != target:
            raise RingMismatch(f"Image {image} is not in ring [{target}]")

    reps = [image.rep for image in images]
    powers: Dict[Tuple[int, int], object] = {}

    def power(i: int, e: int):
        key = (i, e)
        if key not in powers:
            powers[key] = reps[i] ** e
        return powers[key]

    result = target.sympy.zero
    for monom, coeff in p.rep.items():
        term = target.sympy.ground_new(coeff)
        for i, e in enumerate(monom):
            if e:
                term = term * power(i, e)
                if not term:
                    break
        result = result + term
    return Polynomial(target, result)


def evaluate(p: Polynomial, point: Sequence[ScalarLike]) -> Scalar:
    """Exact value of ``p`` at a rational point."""
    if len(point) != p.ring.arity:
        raise ArityMismatch(f"Point {tuple(point)} does not match arity {p.ring.arity}")
    values = [to_scalar(v) for v in point]
    total = QQ.zero
    for monom, coeff in p.rep.items():
        term = coeff
        for v, e in zip(values, monom):
            if e:
                term = term * v ** e
        total += term
    return total


def specialize(p: Polynomial, name: str, value: ScalarLike, target: PolyRing) -> Polynomial:
    """Set one variable to a rational value and drop it from the ring."""
    index = p.ring.index(name)
    v = to_scalar(value)
    terms: Dict[Monomial, Scalar] = {}
    for monom, coeff in p.rep.items():
        rest = monom[:index] + monom[index + 1:]
        terms[rest] = terms.get(rest, QQ.zero) + coeff * v ** monom[index]
    return target.from_terms(terms)
