"""Ideal value type"""
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from ...utils.errors import RingMismatch
from ..poly_core.parser import parse_polynomial
from ..poly_core.rings import PolyRing, Polynomial


@dataclass(frozen=True, eq=False)
class Ideal:
    """Generators in one ring; zero generators are dropped on construction."""

    ring: PolyRing
    generators: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        kept = []
        for g in self.generators:
            if g.ring != self.ring:
                raise RingMismatch(f"Generator {g} is not in ring [{self.ring}]")
            if g:
                kept.append(g)
        object.__setattr__(self, "generators", tuple(kept))

    @classmethod
    def of(cls, ring: PolyRing, generators: Iterable[Polynomial]) -> "Ideal":
        return cls(ring, tuple(generators))

    @classmethod
    def parse(cls, ring: PolyRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, tuple(parse_polynomial(t, ring) for t in texts))

    @classmethod
    def zero(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ())

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, (ring.one(),))

    def is_zero(self) -> bool:
        return not self.generators

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch(f"Ring mismatch: [{self.ring}] vs [{other.ring}]")
        return Ideal(self.ring, self.generators + other.generators)

    def cache_key(self) -> Tuple:
        return (self.ring.variables, tuple(sorted(str(g) for g in self.generators)))

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self} in [{self.ring}]"
