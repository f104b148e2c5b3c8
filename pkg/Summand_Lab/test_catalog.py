#!/usr/bin/env python3
"""
Tests for the named example registry, quadrics and the SL_c invariant chain
"""

import logging

import pytest

from Summand_Lab.features.catalog import (
    COX_VARIABLES,
    build_named_example,
    cox_pic_grading,
    example_keys,
    quadric_rank,
    quadric_ring,
    verify_weyl_relation,
    weyl_chain,
    weyl_map,
    weyl_target,
)
from Summand_Lab.features.graded import homogeneous_degree
from Summand_Lab.features.poly_core import PolyRing, parse_polynomial
from Summand_Lab.features.ringmap import check_well_defined
from Summand_Lab.utils.errors import BadParameters, NotQuadratic, UnknownExample

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)


def test_example_keys():
    keys = example_keys()
    assert keys == sorted(keys)
    assert set(keys) == {
        "quadric", "segre", "veronese2", "xnd", "quartic_toric", "weyl", "dp5cox", "dp5cox_relabeled",
        "dp4a", "dp4b", "cubic3A2", "cubicA1A5", "cubicE6",
    }


def test_example_polynomials_print_canonically():
    assert str(build_named_example("xnd", [3, 3]).polynomials["relation"]) == "x0^3 - x1*x2*x3"
    assert str(build_named_example("quadric", [4]).polynomials["q"]) == "x1*x2 + x3*x4"
    assert str(build_named_example("quadric", [5]).polynomials["q"]) == "x1*x2 + x3*x4 + x5^2"
    assert str(build_named_example("quartic_toric").polynomials["relation"]) == "x0^4 - x1*x2*x3*x4"


def test_example_parameters_are_recorded():
    example = build_named_example("xnd", ["4", "2"])
    assert example.params == (4, 2)
    assert example.ring_map.name == "xnd(4,2)"


def test_unknown_example():
    with pytest.raises(UnknownExample) as info:
        build_named_example("torus")
    assert "segre" in info.value.witness["known"]


@pytest.mark.parametrize(
    "key, params",
    [("xnd", [3]), ("xnd", [2, 3]), ("quadric", [1]), ("weyl", [0]), ("segre", [1]), ("quadric", ["a"])],
)
def test_bad_example_parameters(key, params):
    with pytest.raises(BadParameters):
        build_named_example(key, params)


@pytest.mark.parametrize(
    "key, params",
    [("segre", []), ("veronese2", []), ("xnd", [3, 3]), ("quartic_toric", []), ("weyl", [2])],
)
def test_example_maps_are_well_defined(key, params):
    phi = build_named_example(key, params).ring_map
    assert check_well_defined(phi).certified


def test_quadric_rings_are_graded():
    Q = quadric_ring(4)
    assert Q.grading.as_lists() == [[1, 1, 1, 1]]
    assert str(Q.ideal.generators[0]) == "x1*x2 + x3*x4"


@pytest.mark.parametrize("c, terms", [(1, 2), (2, 12), (3, 72)])
def test_weyl_relation(c, terms):
    relation = verify_weyl_relation(c)
    assert relation.holds
    assert relation.expanded_terms == terms
    assert not relation.relation


def test_weyl_target_shape():
    target = weyl_target(2)
    assert target.ring.arity == 8
    assert len(target.minors) == 3
    assert str(target.products[0]) == "u_1_1*v_1 + u_1_2*v_2"
    assert target.minors[2] == target.u(1, 1) * target.u(2, 2) - target.u(1, 2) * target.u(2, 1)
    with pytest.raises(BadParameters):
        weyl_target(0)


def test_quadric_rank():
    R = PolyRing.of("a,b,c,d,e")
    assert quadric_rank(parse_polynomial("a^2", R)) == 1
    assert quadric_rank(parse_polynomial("a*b + c*d + e^2", R)) == 5
    assert quadric_rank(parse_polynomial("a^2 + 2*a*b + b^2", R)) == 1
    for text in ["a^3", "a + 1", "0", "a*b + c"]:
        with pytest.raises(NotQuadratic):
            quadric_rank(parse_polynomial(text, R))


def test_weyl_chain_cuts_the_quadric():
    chain = weyl_chain(2)
    assert chain.relation.holds
    assert chain.well_defined.certified
    assert chain.injective
    assert chain.contraction.holds
    assert chain.cut_rank == 8
    assert chain.splitting_status == "assumed"
    assert chain.descended.source.ambient == weyl_map(2).source.ambient


def test_cox_pic_grading():
    W = cox_pic_grading()
    assert W.rank == 5
    assert W.column(COX_VARIABLES.index("f12")) == (1, -1, -1, 0, 0)
    assert W.column(COX_VARIABLES.index("f34")) == (1, 0, 0, -1, -1)
    assert W.column(COX_VARIABLES.index("e3")) == (0, 0, 0, 1, 0)


def test_cox_ring_examples():
    displayed = build_named_example("dp5cox")
    relabeled = build_named_example("dp5cox_relabeled")
    assert len(displayed.ring.ideal.generators) == 5
    assert displayed.ring.grading is None
    assert relabeled.ring.grading is not None
    assert displayed.notes["pic_homogeneous"] is False
    degree = homogeneous_degree(relabeled.polynomials["anticanonical_1"], relabeled.grading)
    assert degree == (3, -1, -1, -1, -1)


@pytest.mark.parametrize("key", ["dp4a", "dp4b"])
def test_quartic_del_pezzo_examples(key):
    example = build_named_example(key)
    assert example.ring.ambient.arity == 5
    assert len(example.polynomials) == 2
    assert example.notes["degree"] == 4
