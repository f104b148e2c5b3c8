#!/usr/bin/env python3
"""
Tests for exact polynomial arithmetic, the text parser and calculus helpers
"""

import logging
import random
from fractions import Fraction

import pytest

from Summand_Lab.features.poly_core import (
    PolyRing,
    chart_localize,
    determinant,
    evaluate,
    hessian_at_origin,
    jet,
    parse_polynomial,
    parse_polynomials,
    partial_derivatives,
    poly_arith,
    substitute,
)
from Summand_Lab.utils.errors import BadParameters, ParseError, PointNotOnChart, RingMismatch, UnknownVariable

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

R = PolyRing.of("x,y,z")


def P(text, ring=R):
    return parse_polynomial(text, ring)


def random_polynomial(rng, ring, terms=4, degree=3):
    p = ring.zero()
    for _ in range(terms):
        exps = [rng.randint(0, degree) for _ in range(ring.arity)]
        p = p + ring.monomial(exps, Fraction(rng.randint(-5, 5), rng.randint(1, 3)))
    return p


def test_printing_is_canonical():
    assert str(P("1/2 + x^2 - y*x")) == "x^2 - x*y + 1/2"
    assert str(P("-(x + y)^2")) == "-x^2 - 2*x*y - y^2"
    assert str(P("x - x")) == "0"
    assert str(P("6/4*z")) == "3/2*z"


def test_print_then_parse_is_identity():
    rng = random.Random(7)
    for _ in range(50):
        p = random_polynomial(rng, R)
        assert P(str(p)) == p


def test_juxtaposition_is_rejected_with_position():
    with pytest.raises(ParseError) as info:
        P("2x")
    assert info.value.position == 1
    assert info.value.code == "parse_error"


@pytest.mark.parametrize("text", ["x^-1", "x +", "(x + y", "x ** 2", "x^1/2", ""])
def test_malformed_text(text):
    with pytest.raises(ParseError):
        P(text)


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        P("x + q")


def test_parse_polynomials_splits_on_separators():
    assert parse_polynomials("x*y; z^2, x", R) == [P("x*y"), P("z^2"), P("x")]


def test_arithmetic_and_inspection():
    p = P("x^2*y + 3*z")
    assert p.total_degree() == 3
    assert not p.is_homogeneous()
    assert P("x*y - z^2").is_homogeneous()
    assert p.variables_used() == ("x", "y", "z")
    assert P("y").variables_used() == ("y",)
    assert R.zero().total_degree() == -1
    assert poly_arith(P("x + 1"), 2, "pow") == P("x^2 + 2*x + 1")
    assert poly_arith(P("x"), P("y"), "mul") == P("x*y")
    assert poly_arith(P("x"), P("x"), "sub") == R.zero()
    assert R.monomial((1, 0, 2), 5) == P("5*x*z^2")
    assert P("2*x + 4").monic() == P("x + 2")


def test_mixing_rings_raises():
    S = PolyRing.of("x,y")
    with pytest.raises(RingMismatch):
        P("x") + parse_polynomial("x", S)


def test_ring_construction():
    assert PolyRing.of("x", "y") == PolyRing.of(["x", "y"]) == PolyRing.of("x, y")
    with pytest.raises(BadParameters):
        PolyRing.of("x,x")


def test_evaluate_and_substitute():
    assert evaluate(P("x^2 + y - 1/2*z"), (2, 3, 4)) == 5
    S = PolyRing.of("u,v")
    u, v = S.gens
    assert substitute(P("x*z - y^2"), [u ** 2, u * v, v ** 2], S) == S.zero()
    assert substitute(P("x + y + z"), [u, v, u], S) == parse_polynomial("2*u + v", S)


def test_partials_and_jets():
    f = P("x^3 + x*y + z^2")
    assert partial_derivatives(f) == [P("3*x^2 + y"), P("x"), P("2*z")]
    assert jet(P("x + x^2 + x^3"), 2) == P("x + x^2")
    assert jet(f, -1) == R.zero()


def test_hessian_at_origin():
    report = hessian_at_origin(P("x*y + z^2 + x^3"))
    assert report.as_strings() == [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "2"]]
    assert report.rank == 3
    assert report.corank == 0
    assert hessian_at_origin(P("x^2 + y^3")).corank == 2


def test_chart_localize_moves_point_to_origin():
    F = parse_polynomial("x^3 - y*z*w", PolyRing.of("x,y,z,w"))
    local = chart_localize(F, "w", (0, 0, 0, 1))
    assert local == parse_polynomial("x^3 - y*z", PolyRing.of("x,y,z"))
    shifted = chart_localize(F, "x", (2, 8, 1, 1))
    assert shifted.constant_term() == 0
    with pytest.raises(PointNotOnChart):
        chart_localize(F, "x", (0, 1, 0, 0))


def test_determinant():
    S = PolyRing.of("a,b,c,d")
    a, b, c, d = S.gens
    assert determinant(S, [[a, b], [c, d]]) == a * d - b * c
    assert determinant(S, []) == S.one()
    with pytest.raises(BadParameters):
        determinant(S, [[a, b]])


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(13)
    for _ in range(30):
        a, b, c = (random_polynomial(rng, R, terms=3, degree=2) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert (a - b) + b == a


def test_substitute_is_a_homomorphism():
    rng = random.Random(17)
    S = PolyRing.of("u,v")
    for _ in range(20):
        images = [random_polynomial(rng, S, terms=2, degree=2) for _ in range(R.arity)]
        a = random_polynomial(rng, R, terms=3, degree=2)
        b = random_polynomial(rng, R, terms=3, degree=2)
        assert substitute(a * b, images, S) == substitute(a, images, S) * substitute(b, images, S)
        assert substitute(a + b, images, S) == substitute(a, images, S) + substitute(b, images, S)


def test_mixed_partials_commute():
    rng = random.Random(19)
    for _ in range(20):
        p = random_polynomial(rng, R)
        first = partial_derivatives(p)
        for i in range(R.arity):
            for j in range(R.arity):
                assert partial_derivatives(first[i])[j] == partial_derivatives(first[j])[i]


def test_cubic_surface_local_forms():
    P3 = PolyRing.of("x,y,z,w")
    F = parse_polynomial("x^3 - y*z*w", P3)
    assert partial_derivatives(F) == [parse_polynomial(t, P3) for t in ["3*x^2", "-z*w", "-y*w", "-y*z"]]

    E6 = parse_polynomial("y^3 + w*(x^2 + z*w)", P3)
    local = chart_localize(E6, "z", (0, 0, 1, 0))
    XYW = PolyRing.of("x,y,w")
    assert local == parse_polynomial("y^3 + w*x^2 + w^2", XYW)
    assert jet(local, 2) == parse_polynomial("w^2", XYW)
    assert jet(local, 3) == local
    assert hessian_at_origin(local).corank == 2

    A2 = hessian_at_origin(parse_polynomial("x^3 - z*w", PolyRing.of("x,z,w")))
    assert (A2.rank, A2.corank) == (2, 1)
