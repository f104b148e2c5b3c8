#!/usr/bin/env python3
"""
Tests for quotient rings, ring maps, kernels and descent to quotients
"""

import logging

import pytest

from Summand_Lab.features.catalog import build_named_example, xnd_map
from Summand_Lab.features.graded import MultiGrading
from Summand_Lab.features.groebner import Ideal, ideals_equal
from Summand_Lab.features.poly_core import PolyRing, parse_polynomial
from Summand_Lab.features.ringmap import (
    QuotientRing,
    RingMap,
    check_well_defined,
    descend_to_quotient,
    expand_contract,
    is_injective,
    is_module_finite_graded,
    kernel,
    preimage_ideal,
    rewrite_in_source,
)
from Summand_Lab.utils.errors import (
    ArityMismatch,
    ContractionHypothesisFails,
    NotPositivelyGraded,
    RingMismatch,
)

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def segre():
    return build_named_example("segre").ring_map


def veronese2():
    return build_named_example("veronese2").ring_map


def test_segre_kernel_is_the_quadric():
    phi = segre()
    found = kernel(phi)
    assert [str(g) for g in found.generators] == ["y*z - x*w"]
    assert ideals_equal(found, Ideal.parse(phi.source.ambient, ["x*w - y*z"]))
    assert not is_injective(phi)


def test_well_defined_map_is_certified():
    phi = veronese2()
    result = check_well_defined(phi)
    assert result.certified
    assert result.counterexample is None
    assert [str(e.image) for e in result.entries] == ["0"]
    assert phi.certificate is result


def test_ill_defined_map_has_counterexample():
    source = QuotientRing.parse(["x", "y"], ["x - y"])
    target = QuotientRing.free(PolyRing.of("u"))
    phi = RingMap.parse(source, target, ["u", "u^2"])
    result = check_well_defined(phi)
    assert not result.certified
    bad = result.counterexample
    assert bad.generator == parse_polynomial("x - y", source.ambient)
    assert bad.normal_form == parse_polynomial("u - u^2", target.ambient)
    assert phi.certificate is None


def test_arity_and_ring_checks():
    source = QuotientRing.free(PolyRing.of("x,y,z"))
    target = QuotientRing.free(PolyRing.of("u,v"))
    with pytest.raises(ArityMismatch):
        RingMap.parse(source, target, ["u"])
    phi = RingMap.parse(source, target, ["u", "v", "u*v"])
    with pytest.raises(RingMismatch):
        phi.apply(parse_polynomial("u", target.ambient))


def test_composition_and_identity():
    phi = veronese2()
    ident = RingMap.identity(phi.target)
    composed = phi.then(ident)
    assert composed.images == phi.images
    assert phi.image_of("y") == parse_polynomial("u*v", phi.target.ambient)
    assert phi.is_monomial()


@pytest.mark.parametrize("n, d", [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (4, 4)])
def test_xnd_maps_are_injective_and_finite(n, d):
    phi = xnd_map(n, d)
    assert check_well_defined(phi).certified
    assert is_injective(phi)
    finite = is_module_finite_graded(phi)
    assert finite.finite
    assert finite.dimension == d ** n - (d - 1) ** d * d ** (n - d)


def test_veronese_is_module_finite_of_rank_three():
    finite = is_module_finite_graded(veronese2())
    assert finite.finite
    assert finite.dimension == 3


def test_module_finiteness_reports_free_variables():
    source = QuotientRing.free(PolyRing.of("x"), MultiGrading.standard(1))
    target = QuotientRing.free(PolyRing.of("u,v"), MultiGrading.standard(2))
    finite = is_module_finite_graded(RingMap.parse(source, target, ["u"]))
    assert not finite.finite
    assert finite.dimension is None


def test_module_finiteness_needs_positive_gradings():
    source = QuotientRing.free(PolyRing.of("s"), MultiGrading.standard(1))
    mixed = QuotientRing.free(PolyRing.of("u,v"), MultiGrading.from_rows([(1, -1)]))
    with pytest.raises(NotPositivelyGraded):
        is_module_finite_graded(RingMap.parse(source, mixed, ["u*v"]))
    positive = QuotientRing.free(PolyRing.of("u,v"), MultiGrading.standard(2))
    with pytest.raises(NotPositivelyGraded):
        is_module_finite_graded(RingMap.parse(source, positive, ["u + 1"]))


def test_preimage_of_target_ideal():
    phi = veronese2()
    found = preimage_ideal(phi, Ideal.parse(phi.target.ambient, ["u"]))
    assert ideals_equal(found, Ideal.parse(phi.source.ambient, ["x", "y"]))


def test_rewrite_in_source():
    phi = veronese2()
    f = parse_polynomial("u^2*v^2 + 3*u*v", phi.target.ambient)
    r = rewrite_in_source(phi, f)
    assert r is not None
    assert phi.apply(r) == f
    assert rewrite_in_source(phi, parse_polynomial("u", phi.target.ambient)) is None


def test_expand_contract_on_the_veronese():
    phi = veronese2()
    test = expand_contract(phi, Ideal.parse(phi.source.ambient, ["x"]))
    assert test.holds
    assert test.witness is None
    quotient = descend_to_quotient(phi, Ideal.parse(phi.source.ambient, ["x"]))
    assert check_well_defined(quotient).certified
    assert ideals_equal(quotient.target.ideal, Ideal.parse(phi.target.ambient, ["u^2"]))


def test_expand_contract_fails_on_the_segre():
    phi = segre()
    I = Ideal.parse(phi.source.ambient, ["x"])
    test = expand_contract(phi, I)
    assert not test.holds
    assert test.witness is not None
    with pytest.raises(ContractionHypothesisFails) as info:
        descend_to_quotient(phi, I)
    assert info.value.code == "contraction_hypothesis_fails"
