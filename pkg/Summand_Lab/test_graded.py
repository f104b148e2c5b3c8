#!/usr/bin/env python3
"""
Tests for multigradings, grading discovery, graded pieces and Veronese rings
"""

import logging

import pytest

from Summand_Lab.features.catalog import build_named_example, cox_pic_grading
from Summand_Lab.features.graded import (
    MultiGrading,
    NotHomogeneous,
    discover_grading,
    graded_piece_dimension,
    graded_piece_monomials,
    grading_discovery_report,
    homogeneous_degree,
)
from Summand_Lab.features.graded.veronese import veronese_generators, veronese_presentation
from Summand_Lab.features.groebner import Ideal, ideals_equal
from Summand_Lab.features.poly_core import PolyRing, parse_polynomial
from Summand_Lab.features.ringmap import QuotientRing, check_well_defined
from Summand_Lab.utils.errors import BadParameters, InhomogeneousIdeal

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

XYZ = PolyRing.of("x,y,z")
STANDARD = MultiGrading.standard(3)


def test_homogeneous_degree():
    assert homogeneous_degree(parse_polynomial("x*z - y^2", XYZ), STANDARD) == (2,)
    assert homogeneous_degree(XYZ.zero(), STANDARD) == (0,)
    weighted = MultiGrading.from_rows([(1, 2, 3)])
    assert homogeneous_degree(parse_polynomial("x^2 + y", XYZ), weighted) == (2,)

    witness = homogeneous_degree(parse_polynomial("x + y^2", XYZ), STANDARD)
    assert isinstance(witness, NotHomogeneous)
    assert {witness.first_degree, witness.second_degree} == {(1,), (2,)}
    assert "degree" in witness.describe()


def test_grading_shape_is_checked():
    with pytest.raises(BadParameters):
        homogeneous_degree(parse_polynomial("x", XYZ), MultiGrading.standard(2))
    with pytest.raises(BadParameters):
        MultiGrading(((1, 1),), 3)
    with pytest.raises(BadParameters):
        STANDARD.scaled([1, 2])


def test_grading_helpers():
    W = MultiGrading.from_rows([(1, 1, 1), (1, 0, -1)])
    assert W.rank == 2
    assert W.column(2) == (1, -1)
    assert W.degree_of((1, 2, 3)) == (6, -2)
    assert W.scaled([2, -1]).as_lists() == [[2, 2, 2], [-1, 0, 1]]
    assert W.with_column((5, 0)).arity == 4
    assert W.row_nonnegative(0)
    assert not W.row_nonnegative(1)


def test_discover_grading_of_the_conic():
    ideal = Ideal.parse(XYZ, ["x*z - y^2"])
    W = discover_grading(ideal)
    assert W.rank == 2
    for row in W.weights:
        assert row[0] + row[2] == 2 * row[1]
    assert discover_grading(ideal, max_rank=1).rank == 1
    assert discover_grading(Ideal.zero(XYZ)).rank == 3


def test_cox_pic_rows_fail_on_the_displayed_matrix():
    example = build_named_example("dp5cox")
    rows = dict(zip(example.notes["grading_rows"], cox_pic_grading().weights))
    report = grading_discovery_report(example.ring.ideal, rows)
    assert not report.consistent
    failing = [c for c in report.checks if not c.homogeneous]
    assert failing
    assert all(c.witness for c in failing)


def test_cox_pic_rows_grade_the_relabeled_matrix():
    example = build_named_example("dp5cox_relabeled")
    rows = dict(zip(example.notes["grading_rows"], cox_pic_grading().weights))
    report = grading_discovery_report(example.ring.ideal, rows)
    assert report.consistent
    assert report.rank >= 5
    assert [c.name for c in report.checks] == ["H", "E1", "E2", "E3", "E4"]


def test_graded_pieces_of_the_conic():
    Q = QuotientRing.parse(["x", "y", "z"], ["x*z - y^2"], STANDARD)
    assert graded_piece_dimension(Q, STANDARD, (0,)) == 1
    assert graded_piece_dimension(Q, STANDARD, (1,)) == 3
    assert graded_piece_dimension(Q, STANDARD, (2,)) == 5
    assert graded_piece_dimension(Q, STANDARD, (3,)) == 7
    assert (0, 2, 0) not in graded_piece_monomials(Q, STANDARD, (2,))


def test_graded_piece_of_unit_ideal_is_empty():
    Q = QuotientRing.parse(["x", "y", "z"], ["1"])
    assert graded_piece_dimension(Q, STANDARD, (2,)) == 0


def test_graded_piece_rejects_inhomogeneous_ideal():
    Q = QuotientRing.parse(["x", "y", "z"], ["x - y^2"])
    with pytest.raises(InhomogeneousIdeal):
        graded_piece_dimension(Q, STANDARD, (2,))


def test_mixed_sign_grading_respects_degree_bound():
    Q = QuotientRing.free(PolyRing.of("u,v"))
    W = MultiGrading.from_rows([(1, -1)])
    assert graded_piece_monomials(Q, W, (0,), degree_bound=4) == [(0, 0), (1, 1), (2, 2)]


def test_veronese_generators():
    assert veronese_generators((1, 1), 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(veronese_generators((1, 1, 1, 2), 2)) == 7
    assert len(veronese_generators((1, 1, 1), 3)) == 10


def test_veronese_presentation_of_the_plane_conic():
    presented, embedding = veronese_presentation(2, d=2)
    expected = Ideal.parse(presented.ambient, ["y1^2 - y0*y2"])
    assert ideals_equal(presented.ideal, expected)
    assert [str(p) for p in embedding.images] == ["u0^2", "u0*u1", "u1^2"]
    assert check_well_defined(embedding).certified


@pytest.mark.parametrize("n_vars, weights, d", [(0, None, 2), (2, None, 0), (2, (1, 0), 2), (2, (1,), 2)])
def test_veronese_rejects_bad_parameters(n_vars, weights, d):
    with pytest.raises(BadParameters):
        veronese_presentation(n_vars, weights, d)
