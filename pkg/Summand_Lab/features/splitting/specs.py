"""
Splitting specifications
Executable R-linear retractions sigma: S -> R for a ring map R -> S.
Each variant evaluates target polynomials to normal forms in the source.
"""
import logging
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence

from sympy.polys.domains import QQ

from ...utils.errors import (
    CompositionMismatch,
    ContractionHypothesisFails,
    DescentNotWellDefined,
    FullnessFailure,
    GeneratorNotInvariant,
    InfiniteBasis,
    NotMonomialMap,
    RankZero,
    RewritingFailure,
)
from ...utils.settings import get_settings
from ..graded.grading import MultiGrading, NotHomogeneous, homogeneous_degree, require_homogeneous
from ..groebner.buchberger import reduced_groebner
from ..groebner.ideal import Ideal
from ..groebner.ideals import contains, ideals_equal
from ..poly_core.rings import Monomial, PolyRing, Polynomial, Scalar
from ..ringmap.operations import (
    descend_to_quotient,
    expand_contract,
    is_module_finite_graded,
    kernel,
    rewrite_in_source,
)
from ..ringmap.quotient import QuotientRing, RingMap
from .lattice import ExponentLattice, SemigroupFactorizer, coset_representatives, fullness_witness, vectors_up_to

logger = logging.getLogger(__name__)


class SplittingSpec:
    """Base class: a candidate retraction of ``ring_map``."""

    kind = "splitting"

    def __init__(self, ring_map: RingMap):
        self.ring_map = ring_map

    @property
    def source(self) -> QuotientRing:
        return self.ring_map.source

    @property
    def target(self) -> QuotientRing:
        return self.ring_map.target

    def reduce_source(self, p: Polynomial) -> Polynomial:
        """Normal form in the source quotient."""
        return self.source.normal_form(p)

    def evaluate_term(self, monom: Monomial, coeff: Scalar) -> Polynomial:
        raise NotImplementedError

    def evaluate(self, f: Polynomial) -> Polynomial:
        """sigma(f), extended linearly over the terms of f."""
        result = self.source.ambient.zero()
        for monom, coeff in f.rep.items():
            result = result + self.evaluate_term(monom, coeff)
        return self.reduce_source(result)

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind}


class _MonomialImages:
    """Exponents and coefficients of the images of a monomial map."""

    def __init__(self, phi: RingMap):
        self.exponents: List[Monomial] = []
        self.coefficients: List[Scalar] = []
        for name, image in zip(phi.source.ambient.variables, phi.images):
            if len(image.rep) != 1:
                raise NotMonomialMap(
                    f"Image of {name} is not a single term: {image}",
                    witness={"variable": name, "image": str(image)},
                )
            (monom, coeff), = image.rep.items()
            self.exponents.append(monom)
            self.coefficients.append(coeff)
        self.lattice = ExponentLattice(self.exponents, phi.target.ambient.arity)
        self.semigroup = SemigroupFactorizer(self.exponents)

    def preimage(self, ring: PolyRing, monom: Monomial, coeff: Scalar) -> Optional[Polynomial]:
        """x^c / prod(coeff_i^c_i) for the smallest factorization c, or None."""
        c = self.semigroup.factor(monom)
        if c is None:
            return None
        scale = coeff
        for k, e in zip(self.coefficients, c):
            scale = scale / k ** e
        return ring.monomial(c, scale)


class _MonomialSplitting(SplittingSpec):
    """Shared machinery for monomial maps; source normal forms are taken modulo the kernel."""

    def __init__(self, phi: RingMap):
        super().__init__(phi)
        self.images = _MonomialImages(phi)
        self._kernel: Optional[Ideal] = None

    def reduce_source(self, p: Polynomial) -> Polynomial:
        if self._kernel is None:
            self._kernel = kernel(self.ring_map)
        if self._kernel.is_zero():
            return p
        return reduced_groebner(self._kernel).normal_form(p)


class SemigroupProjection(_MonomialSplitting):
    """u^e -> its rewriting in source variables when e is in the image semigroup, else 0."""

    kind = "semigroup_projection"

    def __init__(self, phi: RingMap, bound: Optional[int] = None, excluded: Iterable[Monomial] = ()):
        super().__init__(phi)
        self.excluded: FrozenSet[Monomial] = frozenset(tuple(e) for e in excluded)
        self.bound = bound if bound is not None else get_settings().splitting_degree_bound
        witness = fullness_witness(self.images.lattice, self.images.semigroup, self.bound)
        if witness is not None:
            raise FullnessFailure(
                f"Exponent {witness} is in the image lattice but not in the image semigroup",
                witness={"exponent": list(witness)},
            )

    def evaluate_term(self, monom: Monomial, coeff: Scalar) -> Polynomial:
        if monom in self.excluded:
            return self.source.ambient.zero()
        found = self.images.preimage(self.source.ambient, monom, coeff)
        return found if found is not None else self.source.ambient.zero()

    def describe(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "fullness_bound": self.bound,
            "lattice_rank": self.images.lattice.rank,
            "excluded": sorted(list(e) for e in self.excluded),
        }


class TraceSplit(_MonomialSplitting):
    """Normalized trace over the coset monomial basis of a module-finite monomial map."""

    kind = "trace"

    def __init__(self, phi: RingMap, search_bound: Optional[int] = None):
        super().__init__(phi)
        finite = is_module_finite_graded(phi)
        lattice = self.images.lattice
        if not finite.finite or lattice.index() is None:
            raise InfiniteBasis(
                f"Target is not module-finite over the image (lattice rank {lattice.rank} of {lattice.n})",
                witness={"lattice_rank": lattice.rank, "unbounded": list(finite.unbounded_variables)},
            )
        self.rank = lattice.index()
        bound = search_bound if search_bound is not None else max(self.rank, 1) * lattice.n
        self.basis = coset_representatives(lattice, bound)
        if not self.basis:
            raise RankZero("No coset representatives were found")

    @property
    def sigma0_of_one(self) -> int:
        return self.trace_coefficient((0,) * self.images.lattice.n)

    def trace_coefficient(self, monom: Monomial) -> int:
        """Diagonal entries of multiplication by u^e on the coset basis."""
        lattice = self.images.lattice
        return sum(
            1 for g in self.basis
            if lattice.coset_id(tuple(a + b for a, b in zip(monom, g))) == lattice.coset_id(g)
        )

    def evaluate_term(self, monom: Monomial, coeff: Scalar) -> Polynomial:
        count = self.trace_coefficient(monom)
        if not count:
            return self.source.ambient.zero()
        found = self.images.preimage(self.source.ambient, monom, coeff * QQ(count, self.rank))
        if found is None:
            found = rewrite_in_source(self.ring_map, self.target.ambient.monomial(monom, coeff * QQ(count, self.rank)))
        if found is None:
            raise RewritingFailure(
                f"Monomial {self.target.ambient.monomial(monom)} has trace but no source rewriting",
                witness={"exponent": list(monom)},
            )
        return found

    def describe(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "sigma0_of_one": self.sigma0_of_one,
            "coset_basis": [list(g) for g in self.basis],
        }


class WeightProjection(SplittingSpec):
    """Keep the weight-zero terms, then rewrite them in the invariant generators."""

    kind = "weight_projection"

    def __init__(self, Q: QuotientRing, action: MultiGrading, invariant_generators: Sequence[Polynomial]):
        require_homogeneous(Q.ideal, action)
        zero = (0,) * action.rank
        for g in invariant_generators:
            degree = homogeneous_degree(g, action)
            if isinstance(degree, NotHomogeneous) or degree != zero:
                shown = degree.describe() if isinstance(degree, NotHomogeneous) else f"weight {degree}"
                raise GeneratorNotInvariant(
                    f"Generator {g} is not invariant: {shown}",
                    witness={"generator": str(g)},
                )
        self.action = action
        ring = PolyRing(tuple(f"y{i}" for i in range(len(invariant_generators))))
        free = RingMap(QuotientRing.free(ring), Q, tuple(invariant_generators), name="invariants")
        super().__init__(free)
        self._presented = False

    def _present(self) -> None:
        """Replace the free source by the presentation source / kernel."""
        if self._presented:
            return
        relations = kernel(self.ring_map)
        presented = RingMap(QuotientRing(self.source.ambient, relations), self.target, self.ring_map.images, name="invariants")
        presented._graph = self.ring_map._graph
        self.ring_map = presented
        self._presented = True

    def reduce_source(self, p: Polynomial) -> Polynomial:
        self._present()
        return self.source.normal_form(p)

    def weight_zero_part(self, f: Polynomial) -> Polynomial:
        zero = (0,) * self.action.rank
        return f.ring.from_terms({m: c for m, c in f.rep.items() if self.action.degree_of(m) == zero})

    def evaluate(self, f: Polynomial) -> Polynomial:
        self._present()
        invariant = self.weight_zero_part(f)
        if not invariant:
            return self.source.ambient.zero()
        found = rewrite_in_source(self.ring_map, invariant)
        if found is None:
            raise RewritingFailure(
                f"Weight-zero part {invariant} is not expressible in the invariant generators",
                witness={"polynomial": str(invariant)},
            )
        return self.reduce_source(found)

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind, "action": self.action.as_lists(), "generators": [str(g) for g in self.ring_map.images]}


class Compose(SplittingSpec):
    """inner ∘ outer for R ⊂ S ⊂ T."""

    kind = "compose"

    def __init__(self, inner: SplittingSpec, outer: SplittingSpec):
        middle_in = inner.ring_map.target
        middle_out = outer.ring_map.source
        if middle_in.ambient != middle_out.ambient or not ideals_equal(middle_in.ideal, middle_out.ideal):
            raise CompositionMismatch(
                f"Inner target {middle_in} is not the outer source {middle_out}",
                witness={"inner_target": str(middle_in), "outer_source": str(middle_out)},
            )
        self.inner = inner
        self.outer = outer
        super().__init__(inner.ring_map.then(outer.ring_map))

    def reduce_source(self, p: Polynomial) -> Polynomial:
        return self.inner.reduce_source(p)

    def evaluate(self, f: Polynomial) -> Polynomial:
        return self.inner.evaluate(self.outer.evaluate(f))

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind, "inner": self.inner.describe(), "outer": self.outer.describe()}


class QuotientDescent(SplittingSpec):
    """sigma-bar(f-bar) = class of sigma(f) on source/I -> target/I·target."""

    kind = "quotient_descent"

    def __init__(self, parent: SplittingSpec, I: Ideal, check_bound: Optional[int] = None):
        test = expand_contract(parent.ring_map, I)
        if not test.holds:
            raise ContractionHypothesisFails(
                f"{test.witness} lies in I·S ∩ R but not in I",
                witness={"element": str(test.witness)},
            )
        super().__init__(descend_to_quotient(parent.ring_map, I))
        self.parent = parent
        self.ideal = I
        self.check_bound = check_bound if check_bound is not None else get_settings().splitting_degree_bound
        self._verify_descent(test.expanded)

    def _verify_descent(self, expanded: Ideal) -> None:
        """sigma(g·s) must lie in I for generators g of I·S and monomials s up to the bound."""
        target_ring = self.target.ambient
        base = self.source.ideal
        for g in expanded.generators:
            for e in vectors_up_to(target_ring.arity, self.check_bound):
                value = self.parent.evaluate(g * target_ring.monomial(e))
                if value and not contains(value, base):
                    raise DescentNotWellDefined(
                        f"sigma({g} * {target_ring.monomial(e)}) = {value} is not in {self.ideal}",
                        witness={"generator": str(g), "monomial": str(target_ring.monomial(e)), "value": str(value)},
                    )

    def evaluate(self, f: Polynomial) -> Polynomial:
        return self.source.normal_form(self.parent.evaluate(f))

    def describe(self) -> Dict[str, object]:
        return {"kind": self.kind, "ideal": str(self.ideal), "parent": self.parent.describe()}


class ZeroSplitting(SplittingSpec):
    """sigma = 0; never a splitting of a nonzero ring."""

    kind = "zero"

    def evaluate(self, f: Polynomial) -> Polynomial:
        return self.source.ambient.zero()


def make_semigroup_projection(phi: RingMap, bound: Optional[int] = None, excluded: Iterable[Monomial] = ()) -> SemigroupProjection:
    return SemigroupProjection(phi, bound, excluded)


def make_weight_projection(Q: QuotientRing, action: MultiGrading, invariant_generators: Sequence[Polynomial]) -> WeightProjection:
    return WeightProjection(Q, action, invariant_generators)


def make_trace_split(phi: RingMap) -> TraceSplit:
    return TraceSplit(phi)


def compose_splittings(inner: SplittingSpec, outer: SplittingSpec) -> Compose:
    return Compose(inner, outer)


def descend_splitting(spec: SplittingSpec, I: Ideal, check_bound: Optional[int] = None) -> QuotientDescent:
    return QuotientDescent(spec, I, check_bound)


def identity_splitting(Q: QuotientRing) -> SemigroupProjection:
    """The identity retraction of Q onto itself."""
    return SemigroupProjection(RingMap.identity(Q))
