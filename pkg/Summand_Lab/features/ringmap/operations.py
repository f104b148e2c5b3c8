"""
Ring map algorithms
Well-definedness, graph-ideal kernels, contraction of ideals, graded
module-finiteness and descent to quotients
"""
import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from ...utils.errors import ContractionHypothesisFails, NotPositivelyGraded, NotZeroDimensional, RingMismatch
from ..groebner.buchberger import GroebnerBasis, reduced_groebner
from ..groebner.ideal import Ideal
from ..groebner.ideals import contains, is_subset, reduced_ideal
from ..groebner.orders import BlockOrder
from ..groebner.zero_dim import standard_monomials
from ..poly_core.rings import Monomial, PolyRing, Polynomial
from .quotient import QuotientRing, RingMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MembershipWitness:
    generator: Polynomial
    image: Polynomial
    normal_form: Polynomial

    @property
    def holds(self) -> bool:
        return not self.normal_form


@dataclass(frozen=True)
class WellDefinedness:
    """Certificate (every image reduces to 0) or the first counterexample."""

    certified: bool
    entries: Tuple[MembershipWitness, ...]

    @property
    def counterexample(self) -> Optional[MembershipWitness]:
        for entry in self.entries:
            if not entry.holds:
                return entry
        return None


def check_well_defined(phi: RingMap) -> WellDefinedness:
    """Verify that every source relation maps into the target ideal."""
    entries: List[MembershipWitness] = []
    for g in phi.source.ideal.generators:
        image = phi.apply(g)
        entries.append(MembershipWitness(g, image, phi.target.normal_form(image)))
    result = WellDefinedness(all(e.holds for e in entries), tuple(entries))
    if result.certified:
        phi._certificate = result
    else:
        bad = result.counterexample
        logger.info(f"Map is not well defined: {bad.generator} -> {bad.image} reduces to {bad.normal_form}")
    return result


# -- graph ideal ---------------------------------------------------------------


def _graph_ring(phi: RingMap) -> PolyRing:
    t_names = tuple(f"_t{i}" for i in range(phi.target.ambient.arity))
    s_names = tuple(f"_s{j}" for j in range(phi.source.ambient.arity))
    return PolyRing(t_names + s_names)


def _to_graph(p: Polynomial, phi: RingMap, graph: PolyRing, side: str) -> Polynomial:
    ring = phi.target.ambient if side == "t" else phi.source.ambient
    renaming = {name: f"_{side}{i}" for i, name in enumerate(ring.variables)}
    return p.to_ring(graph, renaming)


def _from_graph_source(p: Polynomial, phi: RingMap) -> Polynomial:
    renaming = {f"_s{j}": name for j, name in enumerate(phi.source.ambient.variables)}
    return p.to_ring(phi.source.ambient, renaming)


def graph_basis(phi: RingMap, extra: Optional[Ideal] = None) -> GroebnerBasis:
    """Reduced basis of target ideal + extra + (s_j - image_j), target variables eliminated first."""
    if extra is None and phi._graph is not None:
        return phi._graph
    graph = _graph_ring(phi)
    gens = [_to_graph(g, phi, graph, "t") for g in phi.target.ideal.generators]
    if extra is not None:
        gens += [_to_graph(g, phi, graph, "t") for g in extra.generators]
    for j, image in enumerate(phi.images):
        gens.append(graph.gen(f"_s{j}") - _to_graph(image, phi, graph, "t"))
    G = reduced_groebner(Ideal.of(graph, gens), BlockOrder(phi.target.ambient.arity))
    if extra is None:
        phi._graph = G
    return G


def _source_part(phi: RingMap, G: GroebnerBasis) -> Ideal:
    k = phi.target.ambient.arity
    survivors = [g for g in G.basis if all(not any(m[:k]) for m in g.rep)]
    return Ideal.of(phi.source.ambient, (_from_graph_source(g, phi) for g in survivors))


def rewrite_in_source(phi: RingMap, f: Polynomial) -> Optional[Polynomial]:
    """A source polynomial r with phi(r) = f modulo the target ideal, or None."""
    if f.ring != phi.target.ambient:
        raise RingMismatch(f"Polynomial ring [{f.ring}] differs from target [{phi.target.ambient}]")
    G = graph_basis(phi)
    graph = G.ring
    reduced = G.normal_form(_to_graph(f, phi, graph, "t"))
    k = phi.target.ambient.arity
    if any(any(m[:k]) for m in reduced.rep):
        return None
    return _from_graph_source(reduced, phi)


def kernel(phi: RingMap) -> Ideal:
    """Preimage of the target ideal, always containing the source ideal."""
    found = _source_part(phi, graph_basis(phi))
    result = reduced_ideal(found + phi.source.ideal)
    logger.info(f"Kernel of {phi.name or 'map'} has {len(result.generators)} generators")
    return result


def is_injective(phi: RingMap) -> bool:
    """True iff the kernel adds nothing to the source ideal."""
    return is_subset(kernel(phi), phi.source.ideal)


def preimage_ideal(phi: RingMap, J: Ideal) -> Ideal:
    """Contraction phi^-1(J) of a target ideal, as an ideal of the source ambient."""
    if J.ring != phi.target.ambient:
        raise RingMismatch(f"Ideal ring [{J.ring}] differs from target [{phi.target.ambient}]")
    found = _source_part(phi, graph_basis(phi, extra=J))
    return reduced_ideal(found + phi.source.ideal)


def expand(phi: RingMap, I: Ideal) -> Ideal:
    """I·target: images of the generators of I together with the target ideal."""
    if I.ring != phi.source.ambient:
        raise RingMismatch(f"Ideal ring [{I.ring}] differs from source [{phi.source.ambient}]")
    return Ideal.of(phi.target.ambient, (phi.apply(g) for g in I.generators)) + phi.target.ideal


@dataclass(frozen=True)
class ExpandContract:
    ideal: Ideal
    expanded: Ideal
    contracted: Ideal
    holds: bool
    witness: Optional[Polynomial] = None


def expand_contract(phi: RingMap, I: Ideal) -> ExpandContract:
    """Test I·S ∩ R = I (modulo the source ideal)."""
    base = I + phi.source.ideal
    expanded = expand(phi, I)
    contracted = preimage_ideal(phi, Ideal.of(phi.target.ambient, expanded.generators))
    witness = None
    for g in contracted.generators:
        if not contains(g, base):
            witness = g
            break
    holds = witness is None
    logger.info(f"Expand-contract for {I}: {'holds' if holds else 'fails with ' + str(witness)}")
    return ExpandContract(I, expanded, contracted, holds, witness)


@dataclass(frozen=True)
class FinitenessWitness:
    finite: bool
    dimension: Optional[int]
    basis: Tuple[Monomial, ...] = ()
    unbounded_variables: Tuple[str, ...] = field(default_factory=tuple)


def _check_positive(Q: QuotientRing, role: str) -> None:
    if Q.grading is None:
        return
    first = Q.grading.weights[0] if Q.grading.rank else ()
    if not first or any(w <= 0 for w in first):
        raise NotPositivelyGraded(
            f"The {role} ring is not positively graded by its first weight row {first}",
            witness={"role": role, "row": list(first)},
        )


def is_module_finite_graded(phi: RingMap) -> FinitenessWitness:
    """Graded criterion: target / (images of source variables) is finite dimensional."""
    _check_positive(phi.source, "source")
    _check_positive(phi.target, "target")
    for name, image in zip(phi.source.ambient.variables, phi.images):
        if image.constant_term():
            raise NotPositivelyGraded(
                f"Image of {name} has a nonzero constant term: {image}",
                witness={"variable": name, "image": str(image)},
            )
    J = Ideal.of(phi.target.ambient, phi.images) + phi.target.ideal
    G = reduced_groebner(J)
    try:
        basis = standard_monomials(G)
    except NotZeroDimensional as e:
        missing = tuple(e.witness["variables"]) if e.witness else ()
        return FinitenessWitness(False, None, (), missing)
    return FinitenessWitness(True, len(basis), tuple(basis))


def descend_to_quotient(phi: RingMap, I: Ideal) -> RingMap:
    """Induced map source/I -> target/I·target, after checking I·S ∩ R = I."""
    test = expand_contract(phi, I)
    if not test.holds:
        raise ContractionHypothesisFails(
            f"{test.witness} lies in the contraction of I*S but not in I",
            witness={"element": str(test.witness), "ideal": str(I)},
        )
    source = QuotientRing(phi.source.ambient, reduced_ideal(I + phi.source.ideal))
    target = QuotientRing(phi.target.ambient, reduced_ideal(test.expanded))
    return RingMap(source, target, phi.images, name=f"{phi.name} mod {I}" if phi.name else "")
