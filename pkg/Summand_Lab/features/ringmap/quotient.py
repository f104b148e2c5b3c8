"""
Quotient rings and ring maps
Finitely presented rings A/I and homomorphisms given by generator images
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from ...utils.errors import ArityMismatch, RingMismatch
from ..graded.grading import MultiGrading, require_homogeneous
from ..groebner.buchberger import GroebnerBasis, reduced_groebner
from ..groebner.ideal import Ideal
from ..poly_core.parser import parse_polynomial
from ..poly_core.rings import PolyRing, Polynomial, substitute

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class QuotientRing:
    """ambient / ideal, optionally with a multigrading the ideal respects."""

    ambient: PolyRing
    ideal: Ideal
    grading: Optional[MultiGrading] = None

    def __post_init__(self):
        if self.ideal.ring != self.ambient:
            raise RingMismatch(f"Ideal ring [{self.ideal.ring}] differs from ambient [{self.ambient}]")
        if self.grading is not None:
            require_homogeneous(self.ideal, self.grading)

    @classmethod
    def free(cls, ambient: PolyRing, grading: Optional[MultiGrading] = None) -> "QuotientRing":
        return cls(ambient, Ideal.zero(ambient), grading)

    @classmethod
    def parse(cls, variables: Sequence[str], relations: Sequence[str] = (),
              grading: Optional[MultiGrading] = None) -> "QuotientRing":
        ring = PolyRing.of(list(variables))
        return cls(ring, Ideal.parse(ring, relations), grading)

    def groebner(self) -> GroebnerBasis:
        return reduced_groebner(self.ideal)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if self.ideal.is_zero():
            if p.ring != self.ambient:
                raise RingMismatch(f"Polynomial ring [{p.ring}] differs from ambient [{self.ambient}]")
            return p
        return self.groebner().normal_form(p)

    def is_zero_ring(self) -> bool:
        return not self.ideal.is_zero() and self.groebner().is_unit()

    def poly(self, text: str) -> Polynomial:
        return parse_polynomial(text, self.ambient)

    def with_ideal(self, ideal: Ideal) -> "QuotientRing":
        return QuotientRing(self.ambient, ideal, None)

    def __str__(self):
        if self.ideal.is_zero():
            return f"Q[{self.ambient}]"
        return f"Q[{self.ambient}]/{self.ideal}"


@dataclass(eq=False)
class RingMap:
    """source -> target, sending source variable i to images[i]."""

    source: QuotientRing
    target: QuotientRing
    images: Tuple[Polynomial, ...]
    name: str = ""
    _certificate: Optional[object] = field(default=None, repr=False)
    _graph: Optional[GroebnerBasis] = field(default=None, repr=False)

    def __post_init__(self):
        self.images = tuple(self.images)
        if len(self.images) != self.source.ambient.arity:
            raise ArityMismatch(
                f"Map needs {self.source.ambient.arity} images, got {len(self.images)}"
            )
        for image in self.images:
            if image.ring != self.target.ambient:
                raise RingMismatch(f"Image {image} is not in target ring [{self.target.ambient}]")

    @classmethod
    def identity(cls, Q: QuotientRing) -> "RingMap":
        return cls(Q, Q, Q.ambient.gens, name="identity")

    @classmethod
    def parse(cls, source: QuotientRing, target: QuotientRing, images: Sequence[str], name: str = "") -> "RingMap":
        return cls(source, target, tuple(parse_polynomial(t, target.ambient) for t in images), name=name)

    def apply(self, p: Polynomial) -> Polynomial:
        """Image of a source polynomial in the target ambient ring."""
        if p.ring != self.source.ambient:
            raise RingMismatch(f"Polynomial ring [{p.ring}] differs from source [{self.source.ambient}]")
        return substitute(p, self.images, self.target.ambient)

    def image_of(self, name: str) -> Polynomial:
        return self.images[self.source.ambient.index(name)]

    def is_monomial(self) -> bool:
        return all(len(image.rep) == 1 for image in self.images)

    def then(self, outer: "RingMap") -> "RingMap":
        """outer ∘ self."""
        if outer.source.ambient != self.target.ambient:
            raise RingMismatch(f"Cannot compose: [{self.target.ambient}] vs [{outer.source.ambient}]")
        return RingMap(self.source, outer.target, tuple(outer.apply(p) for p in self.images))

    @property
    def certificate(self):
        return self._certificate

    def images_as_dict(self) -> Dict[str, str]:
        return {name: str(image) for name, image in zip(self.source.ambient.variables, self.images)}

    def __str__(self):
        arrows = ", ".join(f"{k} -> {v}" for k, v in self.images_as_dict().items())
        return f"{self.source} -> {self.target}: {arrows}"
