#!/usr/bin/env python3
"""
Tests for splitting constructions and their bounded verification
"""

import logging
import random

import pytest

from Summand_Lab.features.catalog import build_named_example, xnd_map
from Summand_Lab.features.graded import MultiGrading
from Summand_Lab.features.groebner import Ideal
from Summand_Lab.features.poly_core import PolyRing, parse_polynomial
from Summand_Lab.features.ringmap import QuotientRing, RingMap
from Summand_Lab.features.splitting import (
    REFUTED,
    VERIFIED,
    ZeroSplitting,
    compose_splittings,
    descend_splitting,
    identity_splitting,
    make_semigroup_projection,
    make_trace_split,
    make_weight_projection,
    verify_splitting,
)
from Summand_Lab.features.splitting.lattice import ExponentLattice, SemigroupFactorizer, fullness_witness, vectors_up_to
from Summand_Lab.features.torus import TorusAction, invariant_monomials, monoid_minimal_generators
from Summand_Lab.utils.errors import (
    CompositionMismatch,
    FullnessFailure,
    GeneratorNotInvariant,
    InfiniteBasis,
    NotMonomialMap,
    RingMismatch,
)

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def example_map(key, *params):
    return build_named_example(key, params).ring_map


def free_map(source_vars, target_vars, images):
    source = QuotientRing.free(PolyRing.of(source_vars))
    target = QuotientRing.free(PolyRing.of(target_vars))
    return RingMap.parse(source, target, images)


def test_semigroup_projection_splits_the_veronese():
    phi = example_map("veronese2")
    spec = make_semigroup_projection(phi)
    report = verify_splitting(phi, spec, 8)
    assert report.verdict == VERIFIED
    assert report.unit_preserved
    assert report.checks == 3 * 45
    assert spec.evaluate(parse_polynomial("u^3*v + 2*u*v", phi.target.ambient)) == parse_polynomial(
        "x*y + 2*y", phi.source.ambient
    )
    assert spec.evaluate(parse_polynomial("u + v^3", phi.target.ambient)) == phi.source.ambient.zero()


def test_trace_split_of_the_veronese():
    phi = example_map("veronese2")
    spec = make_trace_split(phi)
    assert spec.rank == 2
    assert spec.sigma0_of_one == 2
    assert len(spec.basis) == 2
    report = verify_splitting(phi, spec, 8)
    assert report.verdict == VERIFIED
    assert spec.describe()["sigma0_of_one"] == 2


def test_semigroup_projection_splits_the_segre():
    phi = example_map("segre")
    report = verify_splitting(phi, make_semigroup_projection(phi), 8)
    assert report.verdict == VERIFIED


def test_trace_split_needs_a_module_finite_map():
    phi = example_map("segre")
    with pytest.raises(InfiniteBasis):
        make_trace_split(phi)


@pytest.mark.parametrize("n, d, bound", [(3, 3, 8), (4, 3, 6), (4, 4, 6)])
def test_xnd_semigroup_projection(n, d, bound):
    phi = xnd_map(n, d)
    report = verify_splitting(phi, make_semigroup_projection(phi), bound)
    assert report.verdict == VERIFIED
    assert not report.linearity_violations


def test_zero_splitting_is_refuted():
    phi = example_map("veronese2")
    report = verify_splitting(phi, ZeroSplitting(phi), 4)
    assert report.verdict == REFUTED
    assert not report.unit_preserved
    assert report.sigma_of_one == phi.source.ambient.zero()
    assert not report.linearity_violations


def test_nothing_splits_into_the_zero_ring():
    source = QuotientRing.free(PolyRing.of("x"))
    ring = PolyRing.of("u")
    target = QuotientRing(ring, Ideal.parse(ring, ["1"]))
    phi = RingMap.parse(source, target, ["u"])
    report = verify_splitting(phi, ZeroSplitting(phi), 4)
    assert report.verdict == REFUTED
    assert not report.unit_preserved
    assert report.sigma_of_one == source.ambient.zero()
    assert report.checks == 0

    zero_ring = QuotientRing(PolyRing.of("x"), Ideal.parse(PolyRing.of("x"), ["1"]))
    trivial = RingMap.parse(zero_ring, target, ["u"])
    assert verify_splitting(trivial, ZeroSplitting(trivial), 4).verdict == VERIFIED


def test_excluding_a_semigroup_exponent_breaks_linearity():
    phi = example_map("veronese2")
    spec = make_semigroup_projection(phi, excluded=[(1, 1)])
    report = verify_splitting(phi, spec, 4)
    assert report.verdict == REFUTED
    assert report.unit_preserved
    first = report.first_violation
    assert first is not None
    assert first.generator == "x"
    assert str(first.monomial) == "u*v"
    stopped = verify_splitting(phi, spec, 4, stop_at_first=True)
    assert len(stopped.linearity_violations) == 1


def test_construction_errors():
    with pytest.raises(NotMonomialMap) as info:
        make_semigroup_projection(free_map("x", "u,v", ["u + v"]))
    assert info.value.witness["variable"] == "x"

    with pytest.raises(FullnessFailure) as info:
        make_semigroup_projection(free_map("x,y", "u", ["u^2", "u^3"]))
    assert info.value.witness["exponent"] == [1]


def test_verification_checks_rings():
    phi = example_map("veronese2")
    with pytest.raises(RingMismatch):
        verify_splitting(example_map("segre"), make_semigroup_projection(phi), 2)


def test_weight_projection_onto_invariants():
    Q = QuotientRing.free(PolyRing.of("u,v"))
    action = MultiGrading.from_rows([(1, -1)])
    uv = parse_polynomial("u*v", Q.ambient)
    spec = make_weight_projection(Q, action, [uv])
    assert spec.evaluate(parse_polynomial("u*v + u^2 + 3", Q.ambient)) == parse_polynomial("y0 + 3", spec.source.ambient)
    report = verify_splitting(spec.ring_map, spec, 6)
    assert report.verdict == VERIFIED

    with pytest.raises(GeneratorNotInvariant):
        make_weight_projection(Q, action, [parse_polynomial("u", Q.ambient)])


def test_rescaled_weights_give_the_same_projection():
    rng = random.Random(11)
    Q = QuotientRing.free(PolyRing.of("u,v,w"))
    monomials = list(vectors_up_to(3, 4))
    for _ in range(10):
        row = [rng.randint(1, 2), -rng.randint(1, 2), rng.randint(1, 2)]
        rng.shuffle(row)
        action = MultiGrading.from_rows([row])
        generators = [Q.ambient.monomial(g) for g in monoid_minimal_generators(TorusAction(action), 6).generators]
        spec = make_weight_projection(Q, action, generators)
        rescaled = make_weight_projection(Q, action.scaled([rng.choice([2, 3, -1, -2])]), generators)
        invariants = invariant_monomials(TorusAction(action), 4)[1:]
        for _ in range(3):
            terms = {m: rng.randint(-3, 3) for m in rng.sample(monomials, 4)}
            terms[rng.choice(invariants)] = rng.randint(1, 3)
            f = Q.ambient.from_terms(terms)
            assert spec.evaluate(f) == rescaled.evaluate(f)


def test_composed_splitting():
    inner = make_semigroup_projection(free_map("x", "u", ["u^2"]))
    outer = make_semigroup_projection(free_map("u", "s", ["s^2"]))
    composed = compose_splittings(inner, outer)
    assert [str(p) for p in composed.ring_map.images] == ["s^4"]
    report = verify_splitting(composed.ring_map, composed, 8)
    assert report.verdict == VERIFIED
    assert composed.evaluate(parse_polynomial("s^8 + s^6", composed.target.ambient)) == parse_polynomial(
        "x^2", composed.source.ambient
    )

    elsewhere = make_semigroup_projection(free_map("w", "s", ["s^2"]))
    with pytest.raises(CompositionMismatch):
        compose_splittings(inner, elsewhere)


def test_splitting_descends_to_a_quotient():
    phi = example_map("veronese2")
    parent = make_semigroup_projection(phi)
    descended = descend_splitting(parent, Ideal.parse(phi.source.ambient, ["x"]), check_bound=4)
    report = verify_splitting(descended.ring_map, descended, 6)
    assert report.verdict == VERIFIED
    assert descended.describe()["kind"] == "quotient_descent"


def test_identity_splitting():
    Q = build_named_example("veronese2").ring
    spec = identity_splitting(Q)
    report = verify_splitting(spec.ring_map, spec, 5)
    assert report.verdict == VERIFIED


def test_exponent_lattice():
    veronese = ExponentLattice([(2, 0), (1, 1), (0, 2)], 2)
    assert veronese.rank == 2
    assert veronese.index() == 2
    assert veronese.contains((3, 1))
    assert not veronese.contains((1, 0))
    assert veronese.coset_id((1, 0)) == veronese.coset_id((0, 3))

    numerical = ExponentLattice([(2,), (3,)], 1)
    semigroup = SemigroupFactorizer([(2,), (3,)])
    assert numerical.index() == 1
    assert semigroup.factor((5,)) is not None
    assert not semigroup.contains((1,))
    assert fullness_witness(numerical, semigroup, 6) == (1,)

    assert ExponentLattice([(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)], 4).index() is None
